#include <gtest/gtest.h>

#include "support.hpp"

namespace tiw {
namespace {

using test::cond;
using test::set_of;

const SimpleIteration& i1() { return test::shared("i1.json").it(); }

TEST(Iteration, Membership) {
  const auto& it = i1();
  EXPECT_TRUE(member_Pstar(it, 0, Condition{}));
  EXPECT_TRUE(member_Pstar(it, set_of(it, {"a", "b"}), cond(it, R"({"b":2})")));
  EXPECT_FALSE(member_Pstar(it, set_of(it, {"b"}), cond(it, R"({"b":1})")));
  EXPECT_TRUE(member_Pstar(it, set_of(it, {"b"}), cond(it, R"({"b":0})")));
  // Entries outside A make a non-member, not an error.
  EXPECT_FALSE(member_Pstar(it, set_of(it, {"a"}), cond(it, R"({"b":0})")));
}

TEST(Iteration, TableEntryNeedsItsBase) {
  const auto& it = i1();
  auto p = cond(it, R"({"c":{"table":"t1"}})");
  EXPECT_TRUE(it.member(set_of(it, {"a", "c"}), p));
  EXPECT_FALSE(it.member(set_of(it, {"c"}), p));
}

TEST(Iteration, Order) {
  const auto& it = i1();
  const Mask all = it.all();
  auto p01 = cond(it, R"({"a":"01"})");
  auto p0 = cond(it, R"({"a":"0"})");
  EXPECT_TRUE(order_leq(it, all, p01, p0));
  EXPECT_FALSE(order_leq(it, all, p0, p01));
  EXPECT_TRUE(order_leq(it, all, p0, p0));
  auto b1 = cond(it, R"({"b":1})");
  auto b2 = cond(it, R"({"b":2})");
  EXPECT_FALSE(order_leq(it, all, b1, b2));
  EXPECT_FALSE(order_leq(it, all, b2, b1));
  const auto& b = it.build(all);
  EXPECT_FALSE(b.poset.compatible(*b.find(b1), *b.find(b2)));
}

TEST(Iteration, InterpretName) {
  const auto& it = i1();
  const int c = it.order().rank_or_throw("c");
  const auto& qn = it.part(c).qname;
  const auto& b = it.build(qn.base);
  Bits f(b.poset.size());
  for (int i = 0; i < b.poset.size(); ++i)
    if (b.poset.leq(*b.find(cond(it, R"({"a":"0"})")), i)) f.set(i);
  EXPECT_EQ(it.part(c).subposets.at(interpret_name(it, qn, f)).name, "full");
  EXPECT_THROW(interpret_name(it, qn, Bits(b.poset.size())), Error);
  Bits both = f;
  both.set(*b.find(cond(it, R"({"a":"1"})")));
  EXPECT_THROW(interpret_name(it, qn, both), Error);

  DecisionTable<std::int64_t> constant{0, {Condition{}}, {42}};
  Bits top(1);
  top.set(0);
  EXPECT_EQ(interpret_name(it, constant, top), 42);
}

TEST(Iteration, BuildSizes) {
  const auto& it = i1();
  EXPECT_EQ(build_poset(it, 0).size(), 1);
  const auto& b = it.build(set_of(it, {"b"}));
  ASSERT_EQ(b.conditions.size(), 2u);
  EXPECT_TRUE(b.conditions[0].empty());
  EXPECT_EQ(b.conditions[1], cond(it, R"({"b":0})"));
  EXPECT_GT(build_poset(it, set_of(it, {"a", "b"})).size(), build_poset(it, set_of(it, {"a"})).size());
  // The empty condition plus one per Cohen element, top included.
  EXPECT_EQ(build_poset(it, set_of(it, {"a"})).size(), 1 + 7);
}

TEST(Iteration, ResourceCap) {
  auto l = test::load("i1_oversized.json");
  EXPECT_THROW(l->it().build(l->it().all()), ResourceError);
}

TEST(Iteration, Generics) { EXPECT_EQ(i1().generics(i1().all()).size(), 32u); }

TEST(Iteration, DensityExample) {
  const auto& it = i1();
  const Mask ab = set_of(it, {"a", "b"});
  auto named = resolve_condition(it, parse_condition_literal(R"({"b":{"table":"w1"}})"), true);
  auto ext = cond(it, R"({"a":"0","b":1})");
  EXPECT_FALSE(it.member(ab, named));
  EXPECT_TRUE(it.member(ab, named, true));
  const auto& w = it.build(ab, true);
  EXPECT_TRUE(w.poset.leq(*w.find(ext), *w.find(named)));
  EXPECT_FALSE(w.poset.leq(*w.find(cond(it, R"({"a":"0","b":2})")), *w.find(named)));
}

TEST(Iteration, DensityEverywhere) {
  const auto& it = i1();
  for (Mask a : subsets_of(it.all())) {
    auto f = check_density_Pstar(it, a);
    EXPECT_FALSE(f.has_value()) << it.order().format(a) << ": " << (f ? f->message : "");
  }
}

TEST(Iteration, Embeddings) {
  const auto& it = i1();
  const Mask a = set_of(it, {"a"});
  EXPECT_FALSE(check_complete_embedding(it, a, a).has_value());
  EXPECT_FALSE(check_complete_embedding(it, a, set_of(it, {"a", "b"})).has_value());
  EXPECT_FALSE(check_complete_embedding(it, a, it.all()).has_value());
}

TEST(Iteration, AllEmbeddingsOnI1) {
  const auto& it = i1();
  for (Mask sup : subsets_of(it.all()))
    for (Mask sub : subsets_of(sup)) EXPECT_FALSE(check_complete_embedding(it, sub, sup).has_value());
}

TEST(Iteration, NamesValidate) {
  const auto& l = test::shared("i1.json");
  for (const auto& x : l.wb.names) EXPECT_NO_THROW(validate_iter_name(l.it(), x)) << x.label;
  IterRealName bad = l.wb.names.front();
  bad.coords[0].antichain.pop_back();
  bad.coords[0].values.pop_back();
  EXPECT_THROW(validate_iter_name(l.it(), bad), Error);
}

TEST(Iteration, Format) {
  const auto& it = i1();
  EXPECT_EQ(it.format(cond(it, R"({"a":"0","b":2})")), R"({"a":"0","b":2})");
}

}  // namespace
}  // namespace tiw
