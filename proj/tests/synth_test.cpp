#include <gtest/gtest.h>

#include "support.hpp"
#include "tiw/synth.hpp"
#include "tiw/verify.hpp"

namespace tiw {
namespace {

using test::cond;
using test::set_of;

const test::Loaded& i1l() { return test::shared("i1.json"); }
const SimpleIteration& i1() { return i1l().it(); }

// Direct semantics against code evaluation on every generic over L.
void expect_equivalent(const SimpleIteration& it, Mask a, const Condition& p, const SynthOptions& o = {}) {
  auto code = synth_E(it, a, p, o);
  auto t = tuple_space(it, history_of_condition(it, a, p));
  EXPECT_TRUE(fits(free_components(it, *code), t)) << it.format(p);
  for (const auto& g : it.generics(it.all()))
    ASSERT_EQ(it.in_filter(p, g), eval_code(it, *code, restrict_tuple(it, g, t)))
        << it.format(p) << " " << print_code(*code);
}

TEST(Synth, Examples) {
  const auto& it = i1();
  EXPECT_EQ(print_code(*synth_E(it, it.all(), Condition{})), "(true)");
  EXPECT_EQ(print_code(*synth_E(it, set_of(it, {"a", "b"}), cond(it, R"({"b":2})"))), "(bit b 2)");
  EXPECT_EQ(print_code(*synth_E(it, set_of(it, {"a"}), cond(it, R"({"a":"0"})"))), R"((E a (const "0")))");
  EXPECT_THROW(synth_E(it, set_of(it, {"b"}), cond(it, R"({"b":1})")), Error);
}

TEST(Synth, NameCodes) {
  const auto& it = i1();
  const auto& names = i1l().wb.names;
  EXPECT_EQ(print_fcode(*synth_F(it, it.all(), names[0])),
            R"((real (coord (case (E a (const "0")) 5) (case (E a (const "1")) 7)) (default 0)))");
  auto fb = synth_F(it, it.all(), names[1]);
  const int b = it.order().rank_or_throw("b");
  EXPECT_EQ(free_components(it, *fb), (FreeComponents{0, {{b, 0b110}}}));
  IterRealName constant{"k", {DecisionTable<std::int64_t>{0, {Condition{}}, {9}}}};
  auto fk = synth_F(it, it.all(), constant);
  for (const auto& g : it.generics(it.all()))
    EXPECT_EQ(eval_fcode(it, *fk, restrict_tuple(it, g, TupleSpace{})), (RealValue{{9}, false}));
}

TEST(Synth, MainEquivalenceOnI1) {
  const auto& it = i1();
  for (const auto& p : it.build(it.all()).conditions) expect_equivalent(it, it.all(), p);
}

TEST(Synth, EquivalenceUnderEveryWitnessChoice) {
  const auto& it = i1();
  for (const auto& choose : witness_choosers()) {
    SynthOptions o{choose, false};
    for (const auto& p : it.build(it.all()).conditions) expect_equivalent(it, it.all(), p, o);
  }
}

TEST(Synth, FlipBitsBreaksEquivalence) {
  const auto& it = i1();
  SynthOptions o;
  o.flip_bits = true;
  auto p = cond(it, R"({"b":2})");
  auto code = synth_E(it, it.all(), p, o);
  auto t = tuple_space(it, history_of_condition(it, it.all(), p));
  int mismatches = 0;
  for (const auto& g : it.generics(it.all()))
    mismatches += it.in_filter(p, g) != eval_code(it, *code, restrict_tuple(it, g, t));
  EXPECT_GT(mismatches, 0);
}

TEST(Synth, EmptyFsi) {
  auto it = encode_fsi({});
  EXPECT_EQ(it.size(), 0);
  IterRealName constant{"k", {DecisionTable<std::int64_t>{0, {Condition{}}, {3}}}};
  auto f = synth_F(it, 0, constant);
  EXPECT_EQ(eval_fcode(it, *f, TuplePoint{}), (RealValue{{3}, false}));
}

IterandAssignment cohen_stage() {
  IterandAssignment s;
  s.kind = Kind::B;
  s.model = std::make_shared<BorelPosetModel>(cohen_model(2, 2));
  return s;
}

IterandAssignment vee_stage() {
  IterandAssignment s;
  s.kind = Kind::C;
  s.gamma = 3;
  s.posets = {SmallPoset{"v3", FinitePoset::from_relation({"0", "1", "2"}, {{1, 0}, {2, 0}}, 0), {{0, 1}, {2}}}};
  return s;
}

DecisionTable<std::int64_t> table_at(const SimpleIteration& it, int x, Mask base, std::vector<int> vals,
                                     std::vector<std::int64_t> out) {
  DecisionTable<std::int64_t> t{base, {}, std::move(out)};
  for (int v : vals) t.antichain.push_back(Condition{}.with(x, *it.find_constant(x, v)));
  return t;
}

TEST(Synth, FsiCohenCohenReadsOnlyStageOne) {
  auto it = encode_fsi({cohen_stage(), cohen_stage()});
  const auto& m = *it.part(1).model;
  IterRealName x{"first1", {table_at(it, 1, bit(1), {*m.element("0"), *m.element("1")}, {0, 1})}};
  validate_iter_name(it, x);
  auto f = synth_F(it, it.all(), x);
  EXPECT_EQ(free_components(it, *f), (FreeComponents{bit(1), {}}));
  EXPECT_EQ(tuple_space(it, history_of_name(it, it.all(), x)).hs, bit(1));
}

TEST(Synth, FsiCohenThenSmallPosetMatchesHistory) {
  auto it = encode_fsi({cohen_stage(), vee_stage()});
  IterRealName x{"stage1", {table_at(it, 1, 0b11, {1, 2}, {0, 1})}};
  validate_iter_name(it, x);
  auto f = synth_F(it, it.all(), x);
  auto h = history_of_name(it, it.all(), x);
  EXPECT_EQ(free_components(it, *f).bits, h.W);
  EXPECT_EQ(h.W.at(1), 0b110u);
}

}  // namespace
}  // namespace tiw
