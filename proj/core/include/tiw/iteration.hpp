#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tiw/forcing.hpp"
#include "tiw/models.hpp"
#include "tiw/template.hpp"

namespace tiw {

enum class Kind { B, R, C };
char kind_letter(Kind k);

/// Finite partial function from points to catalog entries, sorted by point.
struct Condition {
  std::vector<std::pair<int, int>> entries;  // (point rank, catalog index)

  bool empty() const { return entries.empty(); }
  Mask domain() const;
  int max_point() const { return entries.empty() ? -1 : entries.back().first; }
  /// Restriction to the strict past of x.
  Condition below(int x) const;
  std::optional<int> entry_at(int x) const;
  Condition with(int x, int entry) const;  // appends; x must exceed max_point()

  auto operator<=>(const Condition&) const = default;
};

/// Name decided by a single maximal antichain of P*|base.
template <class V>
struct DecisionTable {
  Mask base = 0;
  std::vector<Condition> antichain;
  std::vector<V> values;

  bool is_constant() const { return antichain.size() == 1 && antichain.front().empty(); }
};

/// One admissible value at a coordinate: a decision-table name for an
/// S_x-condition (B/R) or for an ordinal below gamma_x (C).
struct EntryName {
  enum class Origin { constant, declared, generated };
  std::string label;
  Origin origin = Origin::constant;
  DecisionTable<int> table;

  bool is_constant() const { return table.is_constant(); }
};

/// Small poset on {0..gamma-1} with maximum 0, used at C coordinates.
struct SmallPoset {
  std::string name;
  FinitePoset poset;
  std::vector<std::vector<int>> linked;
};

struct IterandAssignment {
  Kind kind = Kind::B;
  std::shared_ptr<const BorelPosetModel> model;  // B and R
  Mask support = 0;                              // C_x for R and C
  int gamma = 0;                                 // C
  std::vector<NiceSubposet> subposets;           // R: values of the iterand name
  std::vector<SmallPoset> posets;                // C: values of the iterand name
  DecisionTable<int> qname;                      // R/C: indexes subposets / posets
  std::vector<EntryName> declared;               // extra entry tables (C: widened poset only)
};

/// Name for a real over P*|A: one decision table per coordinate.
struct IterRealName {
  std::string label;
  std::vector<DecisionTable<std::int64_t>> coords;
  int length() const { return static_cast<int>(coords.size()); }
};

/// Generic object at one coordinate.  instance < 0 marks the trivial
/// iterand (C_x not contained in the ambient set).
struct Coord {
  int instance = -1;
  int filter = -1;          // B: admissible filter; R: index into Z_Q; C: minimal element
  std::uint64_t value = 0;  // B/R: generic value index; C: characteristic function bits

  auto operator<=>(const Coord&) const = default;
};

struct GenericSequence {
  Mask domain = 0;
  std::vector<Coord> coords;  // indexed by point rank

  auto operator<=>(const GenericSequence&) const = default;
};

struct IterationOptions {
  std::size_t max_conditions = 100000;
  std::size_t max_generics = 200000;
  std::size_t max_catalog = 4096;
};

class SimpleIteration;

/// Bulk semantics over the admissible generic sequences of one ambient set:
/// per condition, the set of generics whose induced filter contains it.
/// Entries are resolved against the widened catalogs, which extend the plain
/// ones without renumbering.
class Evaluator {
 public:
  Evaluator(const SimpleIteration& it, Mask ambient);

  const std::vector<GenericSequence>& generics() const { return *generics_; }
  Mask ambient() const { return ambient_; }
  std::size_t size() const { return generics_->size(); }

  const Bits& condition_bits(const Condition& p);
  /// Value of entry e at x under each generic; throws if the antichain is
  /// not met exactly once.
  const std::vector<int>& entry_values(int x, int e);
  bool forces_equal(const Condition& lower, int x, int e1, int e2);
  bool leq(const Condition& q, const Condition& p);

 private:
  const SimpleIteration& it_;
  Mask ambient_;
  const std::vector<GenericSequence>* generics_;
  std::map<Condition, Bits> cond_cache_;
  std::map<std::pair<int, int>, std::vector<int>> value_cache_;
};

struct BuiltPoset {
  Mask ambient = 0;
  bool widened = false;
  std::vector<Condition> conditions;  // index 0 is the empty condition
  std::map<Condition, int> index;
  FinitePoset poset;

  std::optional<int> find(const Condition& p) const;
};

class SimpleIteration {
 public:
  SimpleIteration(IndexedTemplate tmpl, std::vector<IterandAssignment> parts, IterationOptions options = {});
  /// Assignments produced point by point in order; the resolver for x may
  /// use the catalogs and posets of the points below x.
  using PartResolver = std::function<IterandAssignment(const SimpleIteration& partial, int x)>;
  SimpleIteration(IndexedTemplate tmpl, const PartResolver& resolve, IterationOptions options = {});

  const IndexedTemplate& tmpl() const { return tmpl_; }
  const LinearOrder& order() const { return tmpl_.order(); }
  int size() const { return tmpl_.size(); }
  Mask all() const { return order().all(); }
  const IterandAssignment& part(int x) const { return parts_.at(x); }
  const IterationOptions& options() const { return options_; }
  Mask kind_mask(Kind k) const;

  /// Entries admissible at x; widened adds non-literal ordinal tables at C.
  const std::vector<EntryName>& catalog(int x, bool widened = false) const;
  /// Constant entry with the given value (model element or ordinal).
  std::optional<int> find_constant(int x, int value) const;
  /// Declared or generated table by label.
  std::optional<int> find_table(int x, const std::string& label, bool widened = false) const;
  /// Index of the trivial entry at x (top of S_x, or ordinal 0).
  int trivial_entry(int x) const;
  int trivial_value(int x) const;

  /// Every A' in the trace of I_x on A witnessing p in P*|A (x = max dom p).
  std::vector<Mask> membership_witnesses(Mask a, const Condition& p, bool widened = false) const;
  bool member(Mask a, const Condition& p, bool widened = false) const;
  /// Canonical witness: the unique subset-least witness if it exists, else
  /// the least mask.  nullopt when p is not a member (or p is empty).
  std::optional<Mask> canonical_witness(Mask a, const Condition& p, bool widened = false) const;

  const std::vector<GenericSequence>& generics(Mask a) const;
  bool coord_contains(int x, const Coord& c, int value) const;
  bool in_filter(const Condition& p, const GenericSequence& g) const;
  int value_of(int x, int entry, const GenericSequence& g) const;
  int interpret_qname(int x, const GenericSequence& g) const;
  bool instance_leq(int x, int instance, int v, int w) const;

  const BuiltPoset& build(Mask a, bool widened = false) const;
  Evaluator& evaluator(Mask a) const;
  bool order_leq(Mask a, const Condition& q, const Condition& p) const;

  std::string format(const Condition& p, bool widened = false) const;
  std::string format_entry(int x, int e, bool widened = false) const;

 private:
  void make_catalog(int x);
  bool entry_ok(int x, int e, Mask a_prime, const Condition& rest, bool widened) const;
  bool entry_ok_raw(int x, int e, Mask a_prime, bool widened) const;
  void check_table(int x, const DecisionTable<int>& t, const std::string& what) const;
  bool entry_valid_everywhere(int x, const DecisionTable<int>& t) const;

  IndexedTemplate tmpl_;
  std::vector<IterandAssignment> parts_;
  IterationOptions options_;
  std::vector<std::vector<EntryName>> catalogs_;
  std::vector<std::vector<EntryName>> widened_catalogs_;

  mutable std::map<std::pair<Mask, bool>, std::unique_ptr<BuiltPoset>> built_;
  mutable std::map<Mask, std::unique_ptr<std::vector<GenericSequence>>> generics_;
  mutable std::map<Mask, std::unique_ptr<Evaluator>> evaluators_;
  mutable std::map<std::tuple<Mask, bool, Condition>, std::vector<Mask>> witness_cache_;
};

bool member_Pstar(const SimpleIteration& it, Mask a, const Condition& p);
bool order_leq(const SimpleIteration& it, Mask a, const Condition& q, const Condition& p);
const FinitePoset& build_poset(const SimpleIteration& it, Mask a);

/// Value of a decision table under a filter given as a member set of
/// build(base).  Throws Error("non-generic filter") when no antichain member
/// is in the filter and Error("not a filter") when two are.
template <class V>
V interpret_name(const SimpleIteration& it, const DecisionTable<V>& name, const Bits& filter) {
  const BuiltPoset& b = it.build(name.base);
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < name.antichain.size(); ++i) {
    auto idx = b.find(name.antichain[i]);
    if (!idx) throw Error("antichain member is not a condition over the name's base");
    if (static_cast<std::size_t>(*idx) < filter.size() && filter.test(*idx)) {
      if (hit) throw Error("not a filter: two antichain members lie in it");
      hit = i;
    }
  }
  if (!hit) throw Error("non-generic filter: no antichain member lies in it");
  return name.values[*hit];
}

/// Checks that the antichain of a name is maximal in P*|base.
void validate_iter_name(const SimpleIteration& it, const IterRealName& x);

struct DensityFailure {
  Condition condition;  // from the widened poset
  std::string message;
};
/// Every condition of the widened poset P|A has an extension in P*|A.
std::optional<DensityFailure> check_density_Pstar(const SimpleIteration& it, Mask a);

/// P*|A' completely embeds into P*|A (A' a subset of A).
std::optional<EmbeddingWitness> check_complete_embedding(const SimpleIteration& it, Mask sub, Mask sup);

/// Index map of build(sub) into build(sup); throws when a condition of the
/// smaller poset is missing from the larger one.
std::vector<int> inclusion_map(const SimpleIteration& it, Mask sub, Mask sup);

}  // namespace tiw
