#pragma once

#include "tiw/code.hpp"

namespace tiw {

struct SynthOptions {
  /// Picks A' when the past of max A is outside the hat family.  Defaults
  /// to the canonical membership witness.
  WitnessChooser choose;
  /// Test-only fault: negate every bit atom.
  bool flip_bits = false;
};

/// Code over R(p) equivalent, on generic sequences, to p lying in the
/// induced filter.  Throws Error when p is not in P*|A.
CodePtr synth_E(const SimpleIteration& it, Mask a, const Condition& p, const SynthOptions& opts = {});

/// Element-valued code for entry e at x.  Member codes are synthesized
/// over the base of the entry's table.
FCodePtr synth_entry(const SimpleIteration& it, int x, int e, const SynthOptions& opts = {});

/// Real-valued code: per coordinate, one case per antichain member.
FCodePtr synth_F(const SimpleIteration& it, Mask a, const IterRealName& x, const SynthOptions& opts = {});

/// Finite support iteration as a template iteration on 0 < 1 < ... with
/// full-powerset families.  Stage kinds must be B or C; C stages get the
/// full past as support.
SimpleIteration encode_fsi(std::vector<IterandAssignment> stages, IterationOptions options = {});

}  // namespace tiw
