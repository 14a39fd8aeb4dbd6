#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tiw/subset.hpp"

namespace tiw {

/// Finite linear order; a point's rank is its index in `labels`.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> rank(const std::string& label) const;
  int rank_or_throw(const std::string& label) const;
  Mask all() const { return size() == 0 ? 0 : (size() >= 32 ? ~Mask{0} : bit(size()) - 1); }

  std::string format(Mask a) const;  // "{a,b}"

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> rank_;
};

using RawFamilies = std::map<std::string, std::vector<std::vector<std::string>>>;

struct TemplateViolation {
  std::string axiom;  // "structure", "T1".."T5"
  int point = -1;
  std::vector<Mask> witness;
  std::string message;
};

class DepthCycleError : public Error {
 public:
  DepthCycleError(std::vector<Mask> cycle, std::string message)
      : Error(std::move(message)), cycle_(std::move(cycle)) {}
  const std::vector<Mask>& cycle() const { return cycle_; }

 private:
  std::vector<Mask> cycle_;
};

/// Indexed template <L, I>: for each point x a family of subsets of L_x.
/// Families are stored sorted and deduplicated.
class IndexedTemplate {
 public:
  IndexedTemplate() = default;
  IndexedTemplate(LinearOrder order, std::vector<std::vector<Mask>> families);

  const LinearOrder& order() const { return order_; }
  int size() const { return order_.size(); }
  const std::vector<Mask>& family(int x) const { return families_.at(x); }

  /// I_x restricted to A: {B & A : B in I_x}, sorted and deduplicated.
  std::vector<Mask> trace(int x, Mask a) const;
  /// A lies in the hat family of x: A is contained in some member of I_x.
  bool in_hat(int x, Mask a) const;

  /// Recursion predecessors of a nonempty A (see depth()).
  std::vector<Mask> predecessors(Mask a) const;
  /// Well-founded rank of A.  Throws DepthCycleError on a recursion cycle.
  int depth(Mask a) const;

 private:
  int depth_rec(Mask a, std::vector<Mask>& stack) const;

  LinearOrder order_;
  std::vector<std::vector<Mask>> families_;
  mutable std::unordered_map<Mask, int> depth_cache_;
};

/// Checks T1..T5 and returns either the validated template or every
/// violation found.
std::variant<IndexedTemplate, std::vector<TemplateViolation>> validate_template(
    const LinearOrder& order, const RawFamilies& families);

/// Same checks on an already-encoded family vector.
std::vector<TemplateViolation> check_template_axioms(const LinearOrder& order,
                                                     const std::vector<std::vector<Mask>>& families);

std::vector<Mask> trace_family(const IndexedTemplate& t, int x, Mask a);
int depth(const IndexedTemplate& t, Mask a);

/// Template on the points of A with traced families.  Ranks are renumbered;
/// `original_rank` (when given) receives the old rank of each new point.
IndexedTemplate restrict_template(const IndexedTemplate& t, Mask a,
                                  std::vector<int>* original_rank = nullptr);

/// Full-powerset template on a chain with the given labels.
IndexedTemplate full_powerset_template(const std::vector<std::string>& labels);

}  // namespace tiw
