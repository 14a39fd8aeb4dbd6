#include "tiw/template.hpp"

#include <algorithm>
#include <sstream>

namespace tiw {

LinearOrder::LinearOrder(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxPoints)
    throw Error("linear order has more than " + std::to_string(kMaxPoints) + " points");
  for (int i = 0; i < size(); ++i) {
    if (!rank_.emplace(labels_[i], i).second) throw Error("duplicate point label '" + labels_[i] + "'");
  }
}

std::optional<int> LinearOrder::rank(const std::string& label) const {
  auto it = rank_.find(label);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

int LinearOrder::rank_or_throw(const std::string& label) const {
  auto r = rank(label);
  if (!r) throw Error("unknown point label '" + label + "'");
  return *r;
}

std::string LinearOrder::format(Mask a) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : points_of(a)) {
    if (!first) os << ',';
    os << label(x);
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

std::vector<Mask> normalized(std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

IndexedTemplate::IndexedTemplate(LinearOrder order, std::vector<std::vector<Mask>> families)
    : order_(std::move(order)), families_(std::move(families)) {
  if (static_cast<int>(families_.size()) != order_.size())
    throw Error("template needs exactly one family per point");
  for (auto& f : families_) f = normalized(std::move(f));
}

std::vector<Mask> IndexedTemplate::trace(int x, Mask a) const {
  std::vector<Mask> out;
  out.reserve(family(x).size());
  for (Mask b : family(x)) out.push_back(b & a);
  return normalized(std::move(out));
}

bool IndexedTemplate::in_hat(int x, Mask a) const {
  return std::any_of(family(x).begin(), family(x).end(), [a](Mask b) { return subset_of(a, b); });
}

std::vector<Mask> IndexedTemplate::predecessors(Mask a) const {
  std::vector<Mask> out;
  if (a == 0) return out;
  const int x = max_point(a);
  out.push_back(a & below(x));
  for (Mask b : trace(x, a)) {
    out.push_back(b);
    if ((b | bit(x)) != a) out.push_back(b | bit(x));
  }
  return normalized(std::move(out));
}

int IndexedTemplate::depth(Mask a) const {
  std::vector<Mask> stack;
  return depth_rec(a, stack);
}

int IndexedTemplate::depth_rec(Mask a, std::vector<Mask>& stack) const {
  if (a == 0) return 0;
  if (auto it = depth_cache_.find(a); it != depth_cache_.end()) return it->second;
  if (auto it = std::find(stack.begin(), stack.end(), a); it != stack.end()) {
    std::vector<Mask> cycle(it, stack.end());
    cycle.push_back(a);
    std::string path;
    for (Mask m : cycle) path += (path.empty() ? "" : " -> ") + order_.format(m);
    throw DepthCycleError(std::move(cycle), "T5 violated: depth recursion cycle " + path);
  }
  stack.push_back(a);
  int best = 0;
  for (Mask p : predecessors(a)) best = std::max(best, depth_rec(p, stack));
  stack.pop_back();
  depth_cache_.emplace(a, best + 1);
  return best + 1;
}

std::vector<TemplateViolation> check_template_axioms(const LinearOrder& order,
                                                     const std::vector<std::vector<Mask>>& families) {
  std::vector<TemplateViolation> out;
  const int n = order.size();
  auto has = [&](int x, Mask m) {
    return std::find(families[x].begin(), families[x].end(), m) != families[x].end();
  };
  for (int x = 0; x < n; ++x) {
    for (Mask b : families[x]) {
      if (!subset_of(b, below(x)))
        out.push_back({"structure", x, {b},
                       "family member " + order.format(b) + " of " + order.label(x) +
                           " is not a subset of the strict past"});
    }
  }
  if (!out.empty()) return out;

  for (int x = 0; x < n; ++x) {
    if (!has(x, 0)) out.push_back({"T1", x, {}, "T1 violated at x=" + order.label(x) + ": empty set missing"});
    const auto& f = families[x];
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (!has(x, f[i] | f[j]))
          out.push_back({"T2", x, {f[i], f[j]},
                         "T2 violated at x=" + order.label(x) + ": union of " + order.format(f[i]) + " and " +
                             order.format(f[j]) + " missing"});
        if (!has(x, f[i] & f[j]))
          out.push_back({"T2", x, {f[i], f[j]},
                         "T2 violated at x=" + order.label(x) + ": intersection of " + order.format(f[i]) +
                             " and " + order.format(f[j]) + " missing"});
      }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (Mask b : families[x])
        if (!has(y, b))
          out.push_back({"T3", y, {b},
                         "T3 violated: " + order.format(b) + " in family of " + order.label(x) +
                             " but not of " + order.label(y)});
  for (int y = 0; y < n; ++y)
    for (Mask b : families[y])
      for (int x = 0; x <= y; ++x)
        if (!has(x, b & below(x)))
          out.push_back({"T4", x, {b},
                         "T4 violated: " + order.format(b) + " in family of " + order.label(y) + " but " +
                             order.format(b & below(x)) + " not in family of " + order.label(x)});
  if (out.empty()) {
    IndexedTemplate t(order, families);
    try {
      for (Mask a : subsets_of(order.all())) t.depth(a);
    } catch (const DepthCycleError& e) {
      out.push_back({"T5", -1, e.cycle(), e.what()});
    }
  }
  return out;
}

std::variant<IndexedTemplate, std::vector<TemplateViolation>> validate_template(
    const LinearOrder& order, const RawFamilies& families) {
  std::vector<TemplateViolation> out;
  std::vector<std::vector<Mask>> encoded(order.size());
  for (const auto& [label, family] : families) {
    auto x = order.rank(label);
    if (!x) {
      out.push_back({"structure", -1, {}, "family given for unknown point '" + label + "'"});
      continue;
    }
    for (const auto& set : family) {
      Mask m = 0;
      for (const auto& member : set) {
        auto y = order.rank(member);
        if (!y) {
          out.push_back({"structure", *x, {}, "unknown label '" + member + "' in family of " + label});
          continue;
        }
        m |= bit(*y);
      }
      encoded[*x].push_back(m);
    }
  }
  if (!out.empty()) return out;
  for (auto& f : encoded) f = normalized(std::move(f));
  out = check_template_axioms(order, encoded);
  if (!out.empty()) return out;
  return IndexedTemplate(order, std::move(encoded));
}

std::vector<Mask> trace_family(const IndexedTemplate& t, int x, Mask a) { return t.trace(x, a); }

int depth(const IndexedTemplate& t, Mask a) { return t.depth(a); }

namespace {

Mask compress(Mask m, const std::vector<int>& old_rank) {
  Mask out = 0;
  for (std::size_t i = 0; i < old_rank.size(); ++i)
    if (contains(m, old_rank[i])) out |= bit(static_cast<int>(i));
  return out;
}

}  // namespace

IndexedTemplate restrict_template(const IndexedTemplate& t, Mask a, std::vector<int>* original_rank) {
  std::vector<int> old = points_of(a & t.order().all());
  std::vector<std::string> labels;
  std::vector<std::vector<Mask>> families;
  for (int x : old) {
    labels.push_back(t.order().label(x));
    std::vector<Mask> fam;
    for (Mask b : t.trace(x, a)) fam.push_back(compress(b, old));
    families.push_back(std::move(fam));
  }
  if (original_rank) *original_rank = old;
  return IndexedTemplate(LinearOrder(std::move(labels)), std::move(families));
}

IndexedTemplate full_powerset_template(const std::vector<std::string>& labels) {
  std::vector<std::vector<Mask>> families;
  for (int x = 0; x < static_cast<int>(labels.size()); ++x) families.push_back(subsets_of(below(x)));
  return IndexedTemplate(LinearOrder(labels), std::move(families));
}

}  // namespace tiw
