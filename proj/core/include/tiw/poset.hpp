#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tiw/subset.hpp"

namespace tiw {

using Bits = boost::dynamic_bitset<>;

/// Finite partial order with a maximum element.  Element i is identified by
/// its index; labels are for display and lookup only.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds from an explicit relation (pairs (i, j) meaning i <= j).  The
  /// reflexive-transitive closure is taken; throws if the result is not
  /// antisymmetric or `top` is not the maximum.
  static FinitePoset from_relation(std::vector<std::string> labels,
                                   const std::vector<std::pair<int, int>>& leq, int top);
  /// Builds from a complete order predicate (assumed reflexive/transitive;
  /// antisymmetry and maximality of `top` are still checked).
  template <class Leq>
  static FinitePoset from_predicate(std::vector<std::string> labels, Leq&& leq, int top) {
    const std::size_t n = labels.size();
    std::vector<Bits> down(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(static_cast<int>(j), static_cast<int>(i))) down[i].set(j);
    return FinitePoset(std::move(labels), std::move(down), top);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int top() const { return top_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;

  bool leq(int i, int j) const { return down_[j].test(i); }
  /// {j : j <= i}
  const Bits& down(int i) const { return down_[i]; }
  /// {j : i <= j}
  const Bits& up(int i) const { return up_[i]; }
  /// {j : j compatible with i}
  const Bits& compatible_set(int i) const { return compat_[i]; }
  bool compatible(int i, int j) const { return compat_[i].test(j); }

  std::vector<int> minimal_elements() const;
  /// Greatest lower bound of i and j among the elements of `within`, if any.
  std::optional<int> glb(int i, int j, const Bits* within = nullptr) const;

  /// Subposet on the given elements (which must contain top), with the
  /// induced order.  `index` receives the old index of each new element.
  FinitePoset induced(const std::vector<int>& elements) const;

 private:
  FinitePoset(std::vector<std::string> labels, std::vector<Bits> down, int top);

  std::vector<std::string> labels_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<Bits> compat_;
  int top_ = 0;
};

Bits to_bits(const std::vector<int>& elements, int n);
std::vector<int> from_bits(const Bits& b);

bool compatible(const FinitePoset& p, int a, int b);
/// Pairwise incompatible, and every element is compatible with some member.
bool is_antichain(const FinitePoset& p, const std::vector<int>& a);
bool is_maximal_antichain(const FinitePoset& p, const std::vector<int>& a);
/// Upward closed and downward directed (within the set).
bool is_filter(const FinitePoset& p, const Bits& g);
/// A filter meets every maximal antichain iff it contains a minimal element.
bool meets_every_maximal_antichain(const FinitePoset& p, const Bits& g);
/// Generic filters of a finite poset: up-sets of its minimal elements.
std::vector<Bits> admissible_filters_upsets(const FinitePoset& p);

/// Extends `seed` (an antichain contained in `pool`) greedily, in index order,
/// to an antichain maximal among the elements of `pool`.
std::vector<int> extend_antichain(const FinitePoset& p, std::vector<int> seed, const Bits& pool);

/// Partition blocks whose members are pairwise compatible (linked), or, when
/// `centered` is set, every subset of the block has a common lower bound.
/// Returns a description of the first failing block, or nullopt.
std::optional<std::string> check_linked_partition(const FinitePoset& p,
                                                  const std::vector<std::vector<int>>& blocks,
                                                  bool centered);

}  // namespace tiw
