#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiw/synth.hpp"

namespace tiw {

struct Failure {
  std::string check;
  std::string subject;  // serialized condition, name or set
  std::string point;    // serialized generic point, when relevant
  std::string expected;
  std::string actual;

  bool operator==(const Failure&) const = default;
  auto operator<=>(const Failure&) const = default;
};

struct Report {
  std::map<std::string, std::uint64_t> counts;  // per check: items checked
  std::uint64_t generics = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // at most kKeptFailures, in discovery order
  static constexpr std::size_t kKeptFailures = 32;
  bool sampled = false;
  double seconds = 0;

  bool pass() const { return failure_count == 0; }
  std::uint64_t checked() const;
  void fail(Failure f);
  void merge(const Report& o);
};

/// Structured (JSON) or text rendering.  Timing is omitted when
/// `with_timing` is false so that runs can be compared byte for byte.
std::string report_json(const Report& r, bool with_timing = true);
std::string report_text(const Report& r, bool with_timing = true);

struct VerifyOptions {
  SynthOptions synth;
  std::uint64_t seed = 1;
  std::size_t sample_generics = 20000;  // above this, generics are sampled
  int exhaustive_points = 6;            // above this, subset pairs are sampled
  std::size_t sample_pairs = 256;
};

/// Every admissible generic sequence over L, in enumeration order.
const std::vector<GenericSequence>& enumerate_generics(const SimpleIteration& it);
std::string format_generic(const SimpleIteration& it, const GenericSequence& g);

/// Members of build(L) lying in the filter induced by g.
Bits realize_filter(const SimpleIteration& it, const GenericSequence& g);
/// Problem description when `members` is not a filter meeting every
/// maximal antichain of build(L).
std::optional<std::string> audit_filter(const SimpleIteration& it, const Bits& members);

Report verify_main_theorem(const SimpleIteration& it, const std::vector<IterRealName>& names,
                           const VerifyOptions& opts = {});
Report verify_history_invariance(const SimpleIteration& it, const std::vector<IterRealName>& names,
                                 const VerifyOptions& opts = {});
Report verify_well_definedness(const SimpleIteration& it, const std::vector<IterRealName>& names,
                               const VerifyOptions& opts = {});
Report verify_density(const SimpleIteration& it, const VerifyOptions& opts = {});
/// Niceness of every R-coordinate subposet (plus `extra`) and correctness
/// of every four-poset system over the subset lattice.
Report verify_nice_and_correct(const SimpleIteration& it, const std::vector<std::pair<int, NiceSubposet>>& extra = {},
                               const VerifyOptions& opts = {});

/// Choosers picking the k-th membership witness (mod count), for
/// choice-independence checks.
std::vector<WitnessChooser> witness_choosers();

extern const std::vector<std::string> kAllChecks;  // main, history, well_defined, density, nice_correct
Report verify_checks(const SimpleIteration& it, const std::vector<IterRealName>& names,
                     const std::vector<std::string>& checks, const VerifyOptions& opts = {});

}  // namespace tiw
