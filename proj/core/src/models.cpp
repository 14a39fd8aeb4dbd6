#include "tiw/models.hpp"

#include <algorithm>

namespace tiw {

namespace {

using Str = std::vector<int>;

std::string digits(const Str& s) {
  std::string out;
  for (int d : s) out += static_cast<char>('0' + d);
  return out;
}

// All strings of length <= k over m letters, by length then lexicographically.
std::vector<Str> strings_up_to(int k, int m) {
  std::vector<Str> out{{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= k; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int d = 0; d < m; ++d) {
        Str s = out[i];
        s.push_back(d);
        out.push_back(std::move(s));
      }
    level_begin = level_end;
  }
  return out;
}

std::vector<Str> strings_of_length(int k, int m) {
  std::vector<Str> out;
  for (auto& s : strings_up_to(k, m))
    if (static_cast<int>(s.size()) == k) out.push_back(std::move(s));
  return out;
}

bool is_prefix(const Str& s, const Str& z) {
  return s.size() <= z.size() && std::equal(s.begin(), s.end(), z.begin());
}

void check_params(int k, int m) {
  if (k < 0 || k > 8) throw Error("string length k must be in [0, 8]");
  if (m < 1 || m > 10) throw Error("alphabet size m must be in [1, 10]");
}

}  // namespace

std::optional<int> BorelPosetModel::z_index(const std::string& label) const {
  auto it = std::find(z_labels.begin(), z_labels.end(), label);
  if (it == z_labels.end()) return std::nullopt;
  return static_cast<int>(it - z_labels.begin());
}

BorelPosetModel cohen_model(int k, int m) {
  check_params(k, m);
  const auto elems = strings_up_to(k, m);
  const auto zs = strings_of_length(k, m);
  if (elems.size() > 50000) throw ResourceError("cohen model size", 50000);

  BorelPosetModel model;
  model.name = "cohen(" + std::to_string(k) + "," + std::to_string(m) + ")";
  std::vector<std::string> labels;
  for (const auto& s : elems) labels.push_back(digits(s));
  model.poset = FinitePoset::from_predicate(
      labels, [&](int a, int b) { return is_prefix(elems[b], elems[a]); }, 0);
  const int n = model.poset.size();
  for (std::size_t z = 0; z < zs.size(); ++z) {
    model.z_labels.push_back(digits(zs[z]));
    Bits row(n);
    for (int p = 0; p < n; ++p)
      if (is_prefix(elems[p], zs[z])) row.set(p);
    model.e_rows.push_back(row);
    const int full = *model.poset.find(digits(zs[z]));
    model.admissible.push_back({model.poset.up(full), static_cast<int>(z)});
  }
  for (int p = 0; p < n; ++p) model.linked_partition.push_back({p});
  model.centered = true;
  return model;
}

std::string ed_label(const std::vector<int>& stem, const std::vector<std::vector<int>>& functions) {
  std::string out = digits(stem) + "|";
  for (std::size_t i = 0; i < functions.size(); ++i) out += (i ? "," : "") + digits(functions[i]);
  return out;
}

BorelPosetModel ed_model(int k, int m, EdFilters filters) {
  check_params(k, m);
  const auto stems = strings_up_to(k, m);
  const auto funcs = strings_of_length(k, m);
  const std::size_t nf = funcs.size();
  if (nf > 20 || stems.size() * (std::size_t{1} << nf) > 50000) throw ResourceError("ed model size", 50000);

  struct Cond {
    int stem;
    std::uint32_t fmask;
  };
  std::vector<Cond> elems;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < stems.size(); ++s)
    for (std::uint32_t f = 0; f < (std::uint32_t{1} << nf); ++f) {
      elems.push_back({static_cast<int>(s), f});
      std::vector<Str> fs;
      for (std::size_t i = 0; i < nf; ++i)
        if ((f >> i) & 1u) fs.push_back(funcs[i]);
      labels.push_back(ed_label(stems[s], fs));
    }

  // Position i of stem t avoids every x in F.
  auto avoids = [&](const Str& t, std::size_t from, std::size_t to, std::uint32_t f) {
    for (std::size_t i = 0; i < nf; ++i) {
      if (!((f >> i) & 1u)) continue;
      for (std::size_t pos = from; pos < to; ++pos)
        if (t[pos] == funcs[i][pos]) return false;
    }
    return true;
  };
  auto leq = [&](int a, int b) {
    const Str& sa = stems[elems[a].stem];
    const Str& sb = stems[elems[b].stem];
    if (!is_prefix(sb, sa)) return false;
    if ((elems[b].fmask & ~elems[a].fmask) != 0) return false;
    return avoids(sa, sb.size(), sa.size(), elems[b].fmask);
  };

  BorelPosetModel model;
  model.name = std::string(filters == EdFilters::by_value ? "ed(" : "ed-naive(") + std::to_string(k) + "," +
               std::to_string(m) + ")";
  model.poset = FinitePoset::from_predicate(labels, leq, 0);
  const int n = model.poset.size();
  for (std::size_t z = 0; z < funcs.size(); ++z) {
    model.z_labels.push_back(digits(funcs[z]));
    Bits row(n);
    for (int p = 0; p < n; ++p) {
      const Str& s = stems[elems[p].stem];
      if (is_prefix(s, funcs[z]) && avoids(funcs[z], s.size(), static_cast<std::size_t>(k), elems[p].fmask))
        row.set(p);
    }
    model.e_rows.push_back(row);
  }

  if (filters == EdFilters::by_value) {
    for (int z = 0; z < model.z_size(); ++z) model.admissible.push_back({model.e_rows[z], z});
  } else {
    // eta of an up-set: the stem of its generator padded with zeros.
    for (int p : model.poset.minimal_elements()) {
      Str padded = stems[elems[p].stem];
      padded.resize(k, 0);
      model.admissible.push_back({model.poset.up(p), *model.z_index(digits(padded))});
    }
  }

  // One centered block per stem.
  for (std::size_t s = 0; s < stems.size(); ++s) {
    std::vector<int> block;
    for (int p = 0; p < n; ++p)
      if (elems[p].stem == static_cast<int>(s)) block.push_back(p);
    model.linked_partition.push_back(std::move(block));
  }
  model.centered = true;
  return model;
}

std::vector<ModelViolation> validate_borel_model(const BorelPosetModel& m) {
  std::vector<ModelViolation> out;
  const FinitePoset& P = m.poset;
  for (int z = 0; z < m.z_size(); ++z)
    if (!m.E(z, P.top()))
      out.push_back({"top", -1, P.top(), z, "E(" + m.z_labels[z] + ", top) is false"});

  for (std::size_t g = 0; g < m.admissible.size(); ++g) {
    const auto& f = m.admissible[g];
    if (f.eta < 0 || f.eta >= m.z_size()) {
      out.push_back({"generic", static_cast<int>(g), -1, f.eta, "filter has no generic value"});
      continue;
    }
    if (!is_filter(P, f.members))
      out.push_back({"filter", static_cast<int>(g), -1, f.eta, "declared filter " + std::to_string(g) + " is not a filter"});
    else if (!meets_every_maximal_antichain(P, f.members))
      out.push_back({"generic", static_cast<int>(g), -1, f.eta,
                     "declared filter " + std::to_string(g) + " misses the antichain of minimal elements"});
    for (int p = 0; p < P.size(); ++p) {
      const bool in = f.members.test(p);
      if (in != m.E(f.eta, p)) {
        out.push_back({"E-characterization", static_cast<int>(g), p, f.eta,
                       std::string("filter ") + std::to_string(g) + " (eta=" + m.z_labels[f.eta] + "): '" +
                           P.label(p) + "' " + (in ? "is in G but E fails" : "is not in G but E holds")});
      }
    }
  }
  if (auto err = check_linked_partition(P, m.linked_partition, m.centered))
    out.push_back({"linked", -1, -1, -1, *err});
  return out;
}

std::vector<NiceViolation> check_nice_subposet(const BorelPosetModel& m, const NiceSubposet& q) {
  if (q.zq.empty()) throw Error("nice subposet '" + q.name + "' has an empty generic-value set");
  if (!std::binary_search(q.elements.begin(), q.elements.end(), m.poset.top()))
    throw Error("nice subposet '" + q.name + "' does not contain the top element");
  const FinitePoset Q = m.poset.induced(q.elements);
  std::vector<NiceViolation> out;
  for (int z : q.zq) {
    Bits g(Q.size());
    for (int i = 0; i < Q.size(); ++i)
      if (m.E(z, q.elements[i])) g.set(i);
    if (!is_filter(Q, g)) {
      out.push_back({z, "G_z^Q for z=" + m.z_labels[z] + " is not a filter on " + q.name, {}});
    } else if (!meets_every_maximal_antichain(Q, g)) {
      std::vector<int> witness;
      for (int i : Q.minimal_elements()) witness.push_back(q.elements[i]);
      out.push_back({z, "G_z^Q for z=" + m.z_labels[z] + " misses a maximal antichain of " + q.name,
                     std::move(witness)});
    }
  }
  return out;
}

}  // namespace tiw
