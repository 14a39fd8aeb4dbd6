#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiw/history.hpp"

namespace tiw {

struct FCode;
struct BorelCode;
using CodePtr = std::shared_ptr<const BorelCode>;
using FCodePtr = std::shared_ptr<const FCode>;

/// Boolean syntax tree over the components of a tuple space.  Points are
/// referred to by label so that codes print and parse without context.
struct BorelCode {
  enum class Op { True, And, Or, Not, E, Bit };
  Op op = Op::True;
  std::vector<CodePtr> kids;  // And, Or, Not
  std::string point;          // E, Bit
  int ordinal = 0;            // Bit
  FCodePtr cond;              // E: element-valued code
};

struct FCase {
  CodePtr when;
  std::string element;     // element codes: label of an S_x condition
  std::int64_t value = 0;  // real codes
};

/// Element-valued (one coordinate, no default) or real-valued (one case
/// list per coordinate, with a default outside the domain D).
struct FCode {
  enum class Kind { element, real };
  Kind kind = Kind::real;
  bool constant = false;  // element code printed as (const "v")
  std::vector<std::vector<FCase>> coords;
  std::int64_t fallback = 0;
};

CodePtr code_true();
CodePtr code_and(std::vector<CodePtr> kids);  // drops True conjuncts, folds singletons
CodePtr code_and_raw(std::vector<CodePtr> kids);
CodePtr code_or(std::vector<CodePtr> kids);
CodePtr code_not(CodePtr kid);
CodePtr code_bit(std::string point, int ordinal);
CodePtr code_E(std::string point, FCodePtr cond);
FCodePtr fcode_const_element(std::string element);
FCodePtr fcode_element(std::vector<FCase> cases);
FCodePtr fcode_real(std::vector<std::vector<FCase>> coords, std::int64_t fallback = 0);

std::string print_code(const BorelCode& c);
std::string print_fcode(const FCode& f);
/// Throws Error with a position on malformed input.
CodePtr parse_code(const std::string& text);
FCodePtr parse_fcode(const std::string& text);

bool eval_code(const SimpleIteration& it, const BorelCode& c, const TuplePoint& z);

struct RealValue {
  std::vector<std::int64_t> values;
  bool outside_d = false;
  bool operator==(const RealValue&) const = default;
};
/// Element codes yield nullopt outside D; real codes fall back per coordinate.
std::optional<std::string> eval_element(const SimpleIteration& it, const FCode& f, const TuplePoint& z);
RealValue eval_fcode(const SimpleIteration& it, const FCode& f, const TuplePoint& z);

/// Components read by a code: B/R points, and per C point the ordinals read.
struct FreeComponents {
  Mask s = 0;
  std::map<int, std::uint64_t> bits;
  bool operator==(const FreeComponents&) const = default;
};
FreeComponents free_components(const SimpleIteration& it, const BorelCode& c);
FreeComponents free_components(const SimpleIteration& it, const FCode& f);
bool fits(const FreeComponents& f, const TupleSpace& t);

std::size_t code_size(const BorelCode& c);

/// Tri-state result of a code at a point.
enum class Outcome { no, yes, ill_formed };
Outcome outcome(const SimpleIteration& it, const BorelCode& c, const TuplePoint& z);

/// Semantic equality by exhaustive evaluation over R(t).
bool codes_equal(const SimpleIteration& it, const BorelCode& a, const BorelCode& b, const TupleSpace& t);
bool fcodes_equal(const SimpleIteration& it, const FCode& a, const FCode& b, const TupleSpace& t);

}  // namespace tiw
