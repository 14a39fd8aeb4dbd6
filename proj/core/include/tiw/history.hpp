#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiw/iteration.hpp"

namespace tiw {

/// H is a set of points; W gives, for each C point of H, a set of ordinals
/// as a bit mask.
struct History {
  Mask H = 0;
  std::map<int, std::uint64_t> W;

  bool operator==(const History&) const = default;
  void merge(const History& o);
};

/// Picks the A' used at a recursion step from the membership witnesses of
/// p in P*|A.  The default takes the canonical witness.
using WitnessChooser = std::function<Mask(int x, Mask a, const std::vector<Mask>& witnesses)>;

History history_of_condition(const SimpleIteration& it, Mask a, const Condition& p,
                             const WitnessChooser& choose = {});
/// Union over the histories of every antichain member of every coordinate.
History history_of_name(const SimpleIteration& it, Mask a, const IterRealName& x,
                        const WitnessChooser& choose = {});
/// History of the entry e at x: the union over its antichain members,
/// computed in P*|A'.
History history_of_entry(const SimpleIteration& it, Mask a_prime, int x, int e, const WitnessChooser& choose = {});

std::string format_history(const SimpleIteration& it, const History& h);

struct TupleSpace {
  Mask hs = 0;  // B and R points
  Mask hc = 0;  // C points
  std::map<int, std::uint64_t> W;

  bool operator==(const TupleSpace&) const = default;
};

TupleSpace tuple_space(const SimpleIteration& it, const History& h);
std::string format_tuple_space(const SimpleIteration& it, const TupleSpace& t);

/// Number of points of R(t); saturates at UINT64_MAX.
std::uint64_t tuple_space_size(const SimpleIteration& it, const TupleSpace& t);

/// Point of R(t).  values[x] is a Z index for x in H_S and a bit mask
/// (contained in W_x) for x in H_C.
struct TuplePoint {
  std::vector<std::optional<std::uint64_t>> values;

  bool operator==(const TuplePoint&) const = default;
  auto operator<=>(const TuplePoint&) const = default;
};

std::string format_point(const SimpleIteration& it, const TuplePoint& z);

/// Every point of R(t) in lexicographic order.  Throws ResourceError above
/// `cap` points.
std::vector<TuplePoint> enumerate_tuple_space(const SimpleIteration& it, const TupleSpace& t,
                                              std::size_t cap = 1u << 20);

TuplePoint restrict_tuple(const SimpleIteration& it, const GenericSequence& g, const TupleSpace& t);
/// Projection of a point of a larger space; throws when a component is missing.
TuplePoint restrict_tuple(const TuplePoint& z, const TupleSpace& t);

}  // namespace tiw
