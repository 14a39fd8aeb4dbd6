#include "tiw/poset.hpp"

#include <algorithm>

namespace tiw {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bits> down, int top)
    : labels_(std::move(labels)), down_(std::move(down)), top_(top) {
  const int n = size();
  if (n == 0) throw Error("poset must be nonempty");
  if (top < 0 || top >= n) throw Error("top element out of range");
  up_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (down_[i].test(j)) up_[j].set(i);
  for (int i = 0; i < n; ++i) {
    if (!down_[i].test(i)) throw Error("order is not reflexive at '" + labels_[i] + "'");
    if (!down_[top].test(i)) throw Error("'" + labels_[top] + "' is not the maximum ('" + labels_[i] + "' not below)");
    for (int j = i + 1; j < n; ++j)
      if (down_[i].test(j) && down_[j].test(i))
        throw Error("order is not antisymmetric: '" + labels_[i] + "' and '" + labels_[j] + "'");
  }
  compat_.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (down_[i].intersects(down_[j])) {
        compat_[i].set(j);
        compat_[j].set(i);
      }
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::vector<std::pair<int, int>>& leq, int top) {
  const std::size_t n = labels.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) down[i].set(i);
  for (auto [a, b] : leq) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw Error("order pair out of range");
    down[b].set(a);
  }
  // Warshall closure on down-sets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (down[i].test(k)) down[i] |= down[k];
  return FinitePoset(std::move(labels), std::move(down), top);
}

std::optional<int> FinitePoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].count() == 1) out.push_back(i);
  return out;
}

std::optional<int> FinitePoset::glb(int i, int j, const Bits* within) const {
  Bits common = down_[i] & down_[j];
  if (within) common &= *within;
  for (auto k = common.find_first(); k != Bits::npos; k = common.find_next(k)) {
    Bits rest = common;
    rest -= down_[k];
    if (rest.none()) return static_cast<int>(k);
  }
  return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
  std::vector<std::string> labels;
  int new_top = -1;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    labels.push_back(labels_.at(elements[a]));
    if (elements[a] == top_) new_top = static_cast<int>(a);
  }
  if (new_top < 0) throw Error("induced subposet must contain the top element");
  return from_predicate(std::move(labels),
                        [&](int a, int b) { return leq(elements[a], elements[b]); }, new_top);
}

Bits to_bits(const std::vector<int>& elements, int n) {
  Bits b(n);
  for (int e : elements) b.set(e);
  return b;
}

std::vector<int> from_bits(const Bits& b) {
  std::vector<int> out;
  for (auto k = b.find_first(); k != Bits::npos; k = b.find_next(k)) out.push_back(static_cast<int>(k));
  return out;
}

bool compatible(const FinitePoset& p, int a, int b) { return p.compatible(a, b); }

bool is_antichain(const FinitePoset& p, const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j] || p.compatible(a[i], a[j])) return false;
  return true;
}

bool is_maximal_antichain(const FinitePoset& p, const std::vector<int>& a) {
  if (!is_antichain(p, a)) return false;
  Bits covered(p.size());
  for (int e : a) covered |= p.compatible_set(e);
  return covered.all();
}

bool is_filter(const FinitePoset& p, const Bits& g) {
  for (auto i = g.find_first(); i != Bits::npos; i = g.find_next(i)) {
    if (!p.up(static_cast<int>(i)).is_subset_of(g)) return false;
    for (auto j = g.find_next(i); j != Bits::npos; j = g.find_next(j))
      if (!(p.down(static_cast<int>(i)) & p.down(static_cast<int>(j))).intersects(g)) return false;
  }
  return g.any();
}

bool meets_every_maximal_antichain(const FinitePoset& p, const Bits& g) {
  for (int m : p.minimal_elements())
    if (g.test(m)) return true;
  return false;
}

std::vector<Bits> admissible_filters_upsets(const FinitePoset& p) {
  std::vector<Bits> out;
  for (int m : p.minimal_elements()) out.push_back(p.up(m));
  return out;
}

std::vector<int> extend_antichain(const FinitePoset& p, std::vector<int> seed, const Bits& pool) {
  Bits blocked(p.size());
  for (int e : seed) blocked |= p.compatible_set(e);
  for (auto k = pool.find_first(); k != Bits::npos; k = pool.find_next(k)) {
    if (blocked.test(k)) continue;
    seed.push_back(static_cast<int>(k));
    blocked |= p.compatible_set(static_cast<int>(k));
  }
  return seed;
}

std::optional<std::string> check_linked_partition(const FinitePoset& p,
                                                  const std::vector<std::vector<int>>& blocks,
                                                  bool centered) {
  Bits seen(p.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    for (int e : block) {
      if (e < 0 || e >= p.size()) return "block " + std::to_string(b) + " has an out-of-range element";
      if (seen.test(e)) return "element '" + p.label(e) + "' appears in two blocks";
      seen.set(e);
    }
    if (centered) {
      // Finite block: every finite subset has a lower bound iff the whole
      // block does.
      Bits common(p.size());
      common.set();
      for (int e : block) common &= p.down(e);
      if (!block.empty() && common.none()) return "block " + std::to_string(b) + " is not centered";
    } else {
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
          if (!p.compatible(block[i], block[j]))
            return "block " + std::to_string(b) + " is not linked: '" + p.label(block[i]) + "' and '" +
                   p.label(block[j]) + "' are incompatible";
    }
  }
  if (!seen.all()) return "partition does not cover every element";
  return std::nullopt;
}

}  // namespace tiw
