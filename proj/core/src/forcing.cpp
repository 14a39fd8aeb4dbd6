#include "tiw/forcing.hpp"

namespace tiw {

void validate_real_name(const FinitePoset& p, const RealName& x) {
  if (x.values.size() != x.antichains.size()) throw Error("name: value table count differs from antichain count");
  for (int n = 0; n < x.length(); ++n) {
    if (x.values[n].size() != x.antichains[n].size())
      throw Error("name: h_" + std::to_string(n) + " is not total on A_" + std::to_string(n));
    for (int e : x.antichains[n])
      if (e < 0 || e >= p.size()) throw Error("name: antichain member out of range");
    if (!is_maximal_antichain(p, x.antichains[n]))
      throw Error("name: A_" + std::to_string(n) + " is not a maximal antichain");
  }
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::forces: return "forces";
    case Decision::refutes: return "refutes";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

Decision decide_forces_value(const FinitePoset& P, int p, const RealName& x, int n, std::int64_t m) {
  if (n < 0 || n >= x.length()) throw Error("coordinate " + std::to_string(n) + " out of range");
  bool some = false, all = true;
  for (std::size_t i = 0; i < x.antichains[n].size(); ++i) {
    if (!P.compatible(p, x.antichains[n][i])) continue;
    if (x.values[n][i] == m)
      some = true;
    else
      all = false;
  }
  if (all) return Decision::forces;
  if (!some) return Decision::refutes;
  return Decision::undecided;
}

bool is_tree(const SequenceTree& t) {
  for (const auto& s : t)
    if (!s.empty() && !t.count(std::vector<std::int64_t>(s.begin(), s.end() - 1))) return false;
  return true;
}

namespace {

bool selectors_ok(const FinitePoset& P, const RealName& x, const SequenceTree& t, int k, int i,
                  const Bits& common, std::vector<std::int64_t>& seq) {
  if (i == k) return t.count(seq) > 0;
  for (std::size_t j = 0; j < x.antichains[i].size(); ++j) {
    Bits next = common & P.down(x.antichains[i][j]);
    if (next.none()) continue;
    seq.push_back(x.values[i][j]);
    const bool ok = selectors_ok(P, x, t, k, i + 1, next, seq);
    seq.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool decide_forces_in_tree(const FinitePoset& P, int p, const RealName& x, const SequenceTree& t, int k) {
  if (k < 0 || k > x.length()) throw Error("k=" + std::to_string(k) + " exceeds the name length");
  std::vector<std::int64_t> seq;
  return selectors_ok(P, x, t, k, 0, P.down(p), seq);
}

std::vector<Bits> reduction_matrix(const FinitePoset& sub, const FinitePoset& sup, const std::vector<int>& map) {
  std::vector<Bits> red(sub.size(), Bits(sup.size()));
  for (int p = 0; p < sub.size(); ++p) {
    Bits r(sup.size());
    r.set();
    const Bits& d = sub.down(p);
    for (auto q = d.find_first(); q != Bits::npos; q = d.find_next(q)) r &= sup.compatible_set(map[q]);
    red[p] = std::move(r);
  }
  return red;
}

std::optional<EmbeddingWitness> check_complete_embedding(const FinitePoset& sub, const FinitePoset& sup,
                                                         const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != sub.size()) throw Error("embedding map has the wrong size");
  for (int i = 0; i < sub.size(); ++i)
    for (int j = 0; j < sub.size(); ++j) {
      if (sub.leq(i, j) != sup.leq(map[i], map[j]))
        return EmbeddingWitness{"order not preserved between '" + sub.label(i) + "' and '" + sub.label(j) + "'",
                                {}, -1};
      if (!sub.compatible(i, j) && sup.compatible(map[i], map[j]))
        return EmbeddingWitness{"incompatible '" + sub.label(i) + "' and '" + sub.label(j) +
                                    "' become compatible in the superposet",
                                extend_antichain(sub, {i, j}, Bits(sub.size()).set()), -1};
    }
  const auto red = reduction_matrix(sub, sup, map);
  Bits covered(sup.size());
  for (const auto& r : red) covered |= r;
  if (covered.all()) return std::nullopt;
  const int q = static_cast<int>((~covered).find_first());
  // No reduction: the sub elements incompatible with q are dense, so a
  // maximal antichain inside them witnesses non-maximality in sup.
  Bits pool(sub.size());
  for (int p = 0; p < sub.size(); ++p)
    if (!sup.compatible(map[p], q)) pool.set(p);
  return EmbeddingWitness{"'" + sup.label(q) + "' has no reduction in the subposet",
                          extend_antichain(sub, {}, pool), q};
}

std::vector<SystemViolation> check_reduction_persistence(const std::vector<Bits>& red_p0_q0,
                                                         const std::vector<Bits>& red_p1_q1,
                                                         const std::vector<int>& p0_in_p1,
                                                         const std::vector<int>& p0_in_q0,
                                                         const std::vector<int>& q0_in_q1) {
  std::vector<SystemViolation> out;
  (void)p0_in_q0;
  for (std::size_t p = 0; p < red_p0_q0.size(); ++p) {
    const Bits& row = red_p0_q0[p];
    const Bits& row1 = red_p1_q1[p0_in_p1[p]];
    for (auto q = row.find_first(); q != Bits::npos; q = row.find_next(q))
      if (!row1.test(q0_in_q1[q])) {
        out.push_back({"reduction not preserved", {}, static_cast<int>(p), static_cast<int>(q)});
        if (out.size() >= 16) return out;
      }
  }
  return out;
}

std::vector<SystemViolation> check_correct_system(const CorrectSystem& s) {
  std::vector<SystemViolation> out;
  auto embed = [&](const FinitePoset& a, const FinitePoset& b, const std::vector<int>& m, const char* what) {
    if (auto w = check_complete_embedding(a, b, m))
      out.push_back({std::string(what) + ": " + w->message, w->antichain, -1, w->element});
  };
  embed(*s.p0, *s.q0, s.p0_in_q0, "P0 in Q0");
  embed(*s.p1, *s.q1, s.p1_in_q1, "P1 in Q1");
  embed(*s.p0, *s.p1, s.p0_in_p1, "P0 in P1");
  embed(*s.q0, *s.q1, s.q0_in_q1, "Q0 in Q1");
  auto red00 = reduction_matrix(*s.p0, *s.q0, s.p0_in_q0);
  auto red11 = reduction_matrix(*s.p1, *s.q1, s.p1_in_q1);
  for (auto& v : check_reduction_persistence(red00, red11, s.p0_in_p1, s.p0_in_q0, s.q0_in_q1)) {
    v.message = "P0 element '" + s.p0->label(v.p) + "' is a reduction of '" + s.q0->label(v.q) +
                "' but not with respect to P1, Q1";
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tiw
