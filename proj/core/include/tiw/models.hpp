#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiw/poset.hpp"

namespace tiw {

/// A declared generic filter of a model together with the generic value it
/// produces.
struct AdmissibleFilter {
  Bits members;
  int eta = 0;  // index into the generic-value space
};

/// Desk-scale Borel poset: a finite poset, a finite space of generic values
/// (truncated reals), the membership relation E tabulated per value, the
/// declared admissible filters and a linked partition.
class BorelPosetModel {
 public:
  std::string name;
  FinitePoset poset;
  std::vector<std::string> z_labels;
  std::vector<Bits> e_rows;  // e_rows[z].test(p) <=> E(z, p)
  std::vector<AdmissibleFilter> admissible;
  std::vector<std::vector<int>> linked_partition;
  bool centered = false;

  int z_size() const { return static_cast<int>(z_labels.size()); }
  bool E(int z, int p) const { return e_rows.at(z).test(p); }
  std::optional<int> z_index(const std::string& label) const;
  std::optional<int> element(const std::string& label) const { return poset.find(label); }
  /// G_z := {p : E(z, p)} as a member set.
  const Bits& e_set(int z) const { return e_rows.at(z); }
};

/// Strings of length <= k over {0..m-1}, ordered by reverse extension;
/// generic values are the strings of length k and E(z, s) means s is a
/// prefix of z.  Admissible filters are the prefix filters.
BorelPosetModel cohen_model(int k, int m);

enum class EdFilters {
  by_value,       // G_z := {p : E(z,p)} for every generic value z
  minimal_upsets  // every up-set of a minimal element (the truncation pathology)
};

/// Eventually-different forcing truncated at length k over values {0..m-1}:
/// conditions (s, F) with s a string of length <= k and F a set of functions
/// k -> m.  (s',F') <= (s,F) iff s is a prefix of s', F is a subset of F' and
/// s'(i) != x(i) for every x in F and |s| <= i < |s'|.  E(z,(s,F)) holds iff s
/// is a prefix of z and z(i) != x(i) for every x in F and i >= |s|.
BorelPosetModel ed_model(int k, int m, EdFilters filters = EdFilters::by_value);

/// Element labels of the ED model: stem digits, '|', then the comma separated
/// functions of F (each as k digits).  The top element is "|".
std::string ed_label(const std::vector<int>& stem, const std::vector<std::vector<int>>& functions);

struct ModelViolation {
  std::string clause;  // "top", "E-characterization", "filter", "generic", "linked"
  int filter = -1;
  int element = -1;
  int z = -1;
  std::string message;
};

/// Checks E(z, top) for every z; p in G <=> E(eta(G), p) for every declared
/// filter G; every declared filter is a filter meeting every maximal
/// antichain; the linked partition (centered when declared).
std::vector<ModelViolation> validate_borel_model(const BorelPosetModel& m);

/// A subposet Q of a model (containing the top element) together with the
/// generic values Z_Q it is paired with.
struct NiceSubposet {
  std::string name;
  std::vector<int> elements;  // sorted model element indices
  std::vector<int> zq;        // generic value indices
  Bits member_bits(int n) const { return to_bits(elements, n); }
};

struct NiceViolation {
  int z = -1;
  std::string message;
  std::vector<int> witness;  // model element indices (e.g. a missed antichain)
};

/// For every z in Z_Q, {p in Q : E(z, p)} must be a filter on Q meeting every
/// maximal antichain of Q.  Throws Error when Z_Q is empty or top is not in Q.
std::vector<NiceViolation> check_nice_subposet(const BorelPosetModel& m, const NiceSubposet& q);

}  // namespace tiw
