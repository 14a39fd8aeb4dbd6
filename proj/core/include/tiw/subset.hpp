#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiw {

// Subsets of the linear order are bitmasks over point ranks.  Rank 0 is the
// least point, so "max(A)" is the highest set bit.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 31;

constexpr bool contains(Mask a, int x) { return (a >> x) & 1u; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr Mask bit(int x) { return Mask{1} << x; }
/// Strict past L_x as a mask.
constexpr Mask below(int x) { return bit(x) - 1; }
constexpr int max_point(Mask a) { return a == 0 ? -1 : 31 - std::countl_zero(a); }
constexpr int popcount(Mask a) { return std::popcount(a); }

/// Every subset of `a`, ascending by numeric mask value.
inline std::vector<Mask> subsets_of(Mask a) {
  std::vector<Mask> out;
  Mask s = 0;
  do {
    out.push_back(s);
    s = (s - a) & a;
  } while (s != 0);
  return out;
}

inline std::vector<int> points_of(Mask a) {
  std::vector<int> out;
  for (int x = 0; a != 0; ++x, a >>= 1)
    if (a & 1u) out.push_back(x);
  return out;
}

/// Base error for everything the workbench reports as a contract failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive construction would exceed a configured cap.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap, std::size_t limit)
      : Error("resource cap exceeded: " + cap + " > " + std::to_string(limit)),
        cap_(std::move(cap)),
        limit_(limit) {}
  const std::string& cap() const { return cap_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

}  // namespace tiw
