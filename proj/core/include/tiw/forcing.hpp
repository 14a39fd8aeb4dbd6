#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiw/poset.hpp"

namespace tiw {

/// Name for a real truncated to N coordinates: per coordinate a maximal
/// antichain A_n with values h_n on its members.
struct RealName {
  std::vector<std::vector<int>> antichains;
  std::vector<std::vector<std::int64_t>> values;  // values[n][i] = h_n(antichains[n][i])

  int length() const { return static_cast<int>(antichains.size()); }
};

/// Throws Error unless every A_n is a maximal antichain and h_n is total.
void validate_real_name(const FinitePoset& p, const RealName& x);

enum class Decision { forces, refutes, undecided };
std::string to_string(Decision d);

/// p forces x(n) = m iff every member of A_n compatible with p has value m;
/// refutes iff none does.
Decision decide_forces_value(const FinitePoset& P, int p, const RealName& x, int n, std::int64_t m);

/// Finite tree of natural sequences, closed under initial segments.
using SequenceTree = std::set<std::vector<std::int64_t>>;
bool is_tree(const SequenceTree& t);

/// p forces x|k in T iff for every selector s choosing q_i in A_i (i < k) such
/// that {q_i} together with p has a common lower bound, the value sequence
/// <h_i(q_i)> lies in T.  Throws Error when k exceeds the name length.
bool decide_forces_in_tree(const FinitePoset& P, int p, const RealName& x, const SequenceTree& t, int k);

/// red[p] (over sup indices): the q for which sub element p is a reduction,
/// i.e. every p' <= p in sub is compatible in sup with q.
std::vector<Bits> reduction_matrix(const FinitePoset& sub, const FinitePoset& sup, const std::vector<int>& map);

struct EmbeddingWitness {
  std::string message;
  std::vector<int> antichain;  // sub indices: maximal in sub, not maximal in sup
  int element = -1;            // sup index incompatible with every antichain member
};

/// `map` sends each sub element to its sup index.  Complete iff the order and
/// incompatibility are preserved and every sup element has a reduction in
/// sub (equivalently, maximal antichains of sub stay maximal in sup).
std::optional<EmbeddingWitness> check_complete_embedding(const FinitePoset& sub, const FinitePoset& sup,
                                                         const std::vector<int>& map);

/// <P0, P1, Q0, Q1> with inclusion maps P0->P1, P0->Q0, P1->Q1, Q0->Q1.
struct CorrectSystem {
  const FinitePoset* p0 = nullptr;
  const FinitePoset* p1 = nullptr;
  const FinitePoset* q0 = nullptr;
  const FinitePoset* q1 = nullptr;
  std::vector<int> p0_in_p1, p0_in_q0, p1_in_q1, q0_in_q1;
};

struct SystemViolation {
  std::string message;
  std::vector<int> antichain;
  int p = -1;
  int q = -1;
};

/// Every inclusion complete, and every reduction p in P0 of q in Q0 remains a
/// reduction with respect to P1, Q1.
std::vector<SystemViolation> check_correct_system(const CorrectSystem& s);

/// Reduction-persistence part alone, over precomputed reduction matrices.
std::vector<SystemViolation> check_reduction_persistence(const std::vector<Bits>& red_p0_q0,
                                                         const std::vector<Bits>& red_p1_q1,
                                                         const std::vector<int>& p0_in_p1,
                                                         const std::vector<int>& p0_in_q0,
                                                         const std::vector<int>& q0_in_q1);

}  // namespace tiw
