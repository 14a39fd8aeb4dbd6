#include <gtest/gtest.h>

#include "support.hpp"
#include "tiw/code.hpp"

namespace tiw {
namespace {

const SimpleIteration& i1() { return test::shared("i1.json").it(); }
int rank(const char* l) { return i1().order().rank_or_throw(l); }

TuplePoint point(std::initializer_list<std::pair<const char*, std::uint64_t>> vals) {
  TuplePoint z;
  z.values.resize(i1().size());
  for (auto [l, v] : vals) z.values[rank(l)] = v;
  return z;
}

std::uint64_t za(const char* s) { return *i1().part(rank("a")).model->z_index(s); }

TEST(Code, Atoms) {
  const auto& it = i1();
  EXPECT_TRUE(eval_code(it, *code_true(), point({})));
  auto bit2 = code_bit("b", 2);
  EXPECT_TRUE(eval_code(it, *bit2, point({{"b", 0b100}})));
  EXPECT_FALSE(eval_code(it, *bit2, point({{"b", 0b000}})));
  auto e0 = code_E("a", fcode_const_element("0"));
  EXPECT_TRUE(eval_code(it, *e0, point({{"a", za("01")}})));
  EXPECT_FALSE(eval_code(it, *e0, point({{"a", za("10")}})));
}

TEST(Code, Connectives) {
  const auto& it = i1();
  auto e0 = code_E("a", fcode_const_element("0"));
  auto b2 = code_bit("b", 2);
  auto z = point({{"a", za("00")}, {"b", 0}});
  EXPECT_FALSE(eval_code(it, *code_and({e0, b2}), z));
  EXPECT_TRUE(eval_code(it, *code_or({e0, b2}), z));
  EXPECT_TRUE(eval_code(it, *code_not(b2), z));
  EXPECT_EQ(print_code(*code_and({code_true(), b2})), "(bit b 2)");
  EXPECT_EQ(print_code(*code_and({})), "(true)");
  EXPECT_EQ(print_code(*code_and_raw({code_true(), b2})), "(and (true) (bit b 2))");
}

TEST(Code, PrintAndParse) {
  const std::string s = R"((and (E a (const "0")) (or (bit b 1) (not (bit b 2)))))";
  EXPECT_EQ(print_code(*parse_code(s)), s);
  const std::string f = R"((real (coord (case (E a (const "0")) 5) (case (E a (const "1")) 7)) (default 0)))";
  EXPECT_EQ(print_fcode(*parse_fcode(f)), f);
  const std::string t = R"((E c (table (case (E a (const "0")) "|11") (case (E a (const "1")) "1|"))))";
  EXPECT_EQ(print_code(*parse_code(t)), t);
}

TEST(Code, ParseErrors) {
  EXPECT_THROW(parse_code("(and (true)"), Error);
  EXPECT_THROW(parse_code("(bit b x)"), Error);
  EXPECT_THROW(parse_code("(frob)"), Error);
  EXPECT_THROW(parse_code("(true) trailing"), Error);
}

TEST(Code, RealEvaluation) {
  const auto& it = i1();
  auto f = parse_fcode(R"((real (coord (case (E a (const "0")) 5) (case (E a (const "1")) 7)) (default 0)))");
  EXPECT_EQ(eval_fcode(it, *f, point({{"a", za("00")}})), (RealValue{{5}, false}));
  EXPECT_EQ(eval_fcode(it, *f, point({{"a", za("11")}})), (RealValue{{7}, false}));
  auto k = fcode_real({{FCase{code_true(), "", 9}}});
  EXPECT_EQ(eval_fcode(it, *k, point({})), (RealValue{{9}, false}));
}

TEST(Code, OutsideDomainFallsBack) {
  const auto& it = i1();
  auto f = fcode_real({{FCase{code_true(), "", 5}, FCase{code_true(), "", 7}}}, 0);
  EXPECT_EQ(eval_fcode(it, *f, point({})), (RealValue{{0}, true}));
  auto none = fcode_real({{FCase{code_not(code_true()), "", 5}}}, 0);
  EXPECT_EQ(eval_fcode(it, *none, point({})), (RealValue{{0}, true}));
}

TEST(Code, ElementCodes) {
  const auto& it = i1();
  auto t = fcode_element({FCase{code_E("a", fcode_const_element("0")), "|11", 0},
                          FCase{code_E("a", fcode_const_element("1")), "1|", 0}});
  EXPECT_EQ(eval_element(it, *t, point({{"a", za("01")}})), std::optional<std::string>("|11"));
  EXPECT_EQ(eval_element(it, *t, point({{"a", za("10")}})), std::optional<std::string>("1|"));
  auto amb = fcode_element({FCase{code_true(), "|11", 0}, FCase{code_true(), "1|", 0}});
  EXPECT_EQ(eval_element(it, *amb, point({})), std::nullopt);
  EXPECT_EQ(outcome(it, *code_E("c", amb), point({{"c", 0}})), Outcome::ill_formed);
}

TEST(Code, FreeComponents) {
  const auto& it = i1();
  auto c = parse_code(R"((and (E a (const "0")) (bit b 1) (bit b 2)))");
  auto fc = free_components(it, *c);
  EXPECT_EQ(fc.s, bit(rank("a")));
  EXPECT_EQ(fc.bits, (std::map<int, std::uint64_t>{{rank("b"), 0b110}}));
  EXPECT_TRUE(fits(fc, TupleSpace{bit(rank("a")), bit(rank("b")), {{rank("b"), 0b110}}}));
  EXPECT_FALSE(fits(fc, TupleSpace{bit(rank("a")), bit(rank("b")), {{rank("b"), 0b100}}}));
  // A constant element code counts its implicit (true) guard.
  EXPECT_EQ(code_size(*c), 5u);
  EXPECT_EQ(code_size(*parse_code(R"x((E c (table (case (E a (const "0")) "|11"))))x")), 3u);
}

TEST(Code, SemanticEquality) {
  const auto& it = i1();
  TupleSpace t{0, bit(rank("b")), {{rank("b"), 0b110}}};
  auto x = parse_code("(not (and (bit b 1) (bit b 2)))");
  auto y = parse_code("(or (not (bit b 1)) (not (bit b 2)))");
  auto w = parse_code("(or (bit b 1) (not (bit b 2)))");
  EXPECT_TRUE(codes_equal(it, *x, *y, t));
  EXPECT_FALSE(codes_equal(it, *x, *w, t));
}

}  // namespace
}  // namespace tiw
