#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "tiw/forcing.hpp"
#include "tiw/models.hpp"

namespace tiw {
namespace {

int el(const BorelPosetModel& m, const std::string& label) {
  auto e = m.element(label);
  if (!e) throw Error("no element " + label);
  return *e;
}

FinitePoset vee() { return FinitePoset::from_relation({"0", "1", "2"}, {{1, 0}, {2, 0}}, 0); }

RealName x57(const BorelPosetModel& c) { return {{{el(c, "0"), el(c, "1")}}, {{5, 7}}}; }

TEST(Forcing, Compatibility) {
  auto c = cohen_model(2, 2);
  EXPECT_TRUE(compatible(c.poset, el(c, "01"), el(c, "01")));
  EXPECT_FALSE(compatible(c.poset, el(c, "0"), el(c, "1")));
  auto e = ed_model(2, 2);
  EXPECT_TRUE(compatible(e.poset, el(e, "|11"), el(e, "0|")));
  EXPECT_TRUE(e.poset.leq(el(e, "00|11"), el(e, "|11")));
  EXPECT_TRUE(e.poset.leq(el(e, "00|11"), el(e, "0|")));
  // Extending the stem against a listed function is not allowed.
  EXPECT_FALSE(e.poset.leq(el(e, "10|11"), el(e, "|11")));
}

TEST(Forcing, MaximalAntichains) {
  auto c = cohen_model(2, 2);
  EXPECT_TRUE(is_maximal_antichain(c.poset, {el(c, "0"), el(c, "1")}));
  EXPECT_FALSE(is_maximal_antichain(c.poset, {el(c, "0")}));
  EXPECT_TRUE(is_maximal_antichain(c.poset, {c.poset.top()}));
  EXPECT_TRUE(is_maximal_antichain(vee(), {1, 2}));
}

TEST(Forcing, UpsetFilters) {
  auto v = admissible_filters_upsets(vee());
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(from_bits(v[0]), (std::vector<int>{0, 1}));
  EXPECT_EQ(from_bits(v[1]), (std::vector<int>{0, 2}));
  auto one = FinitePoset::from_relation({"0"}, {}, 0);
  EXPECT_EQ(admissible_filters_upsets(one).size(), 1u);
  auto c = cohen_model(2, 2);
  auto cf = admissible_filters_upsets(c.poset);
  EXPECT_EQ(cf.size(), 4u);
  for (const auto& g : cf) {
    EXPECT_TRUE(is_filter(c.poset, g));
    EXPECT_TRUE(meets_every_maximal_antichain(c.poset, g));
  }
}

TEST(Forcing, DecideValue) {
  auto c = cohen_model(2, 2);
  auto x = x57(c);
  EXPECT_EQ(decide_forces_value(c.poset, el(c, "0"), x, 0, 5), Decision::forces);
  EXPECT_EQ(decide_forces_value(c.poset, c.poset.top(), x, 0, 5), Decision::undecided);
  EXPECT_EQ(decide_forces_value(c.poset, el(c, "0"), x, 0, 7), Decision::refutes);
  EXPECT_THROW(decide_forces_value(c.poset, el(c, "0"), x, 1, 5), Error);
}

TEST(Forcing, DecideTree) {
  auto c = cohen_model(2, 2);
  auto x = x57(c);
  SequenceTree t{{}, {5}};
  EXPECT_TRUE(decide_forces_in_tree(c.poset, el(c, "0"), x, t, 1));
  EXPECT_FALSE(decide_forces_in_tree(c.poset, c.poset.top(), x, t, 1));
  SequenceTree all{{}, {5}, {7}};
  EXPECT_TRUE(decide_forces_in_tree(c.poset, c.poset.top(), x, all, 1));
  EXPECT_THROW(decide_forces_in_tree(c.poset, c.poset.top(), x, all, 2), Error);
}

TEST(Forcing, InvalidNameRejected) {
  auto c = cohen_model(2, 2);
  EXPECT_NO_THROW(validate_real_name(c.poset, x57(c)));
  RealName bad{{{el(c, "0")}}, {{5}}};
  EXPECT_THROW(validate_real_name(c.poset, bad), Error);
}

TEST(Models, CohenAndEdPass) {
  EXPECT_TRUE(validate_borel_model(cohen_model(2, 2)).empty());
  auto e = ed_model(2, 2);
  EXPECT_TRUE(validate_borel_model(e).empty());
  EXPECT_EQ(e.admissible.size(), 4u);
}

TEST(Models, EdFilterIsUpsetOfFullF) {
  auto e = ed_model(2, 2);
  for (int z = 0; z < e.z_size(); ++z) {
    const int low = el(e, e.z_labels[z] + "|00,01,10,11");
    EXPECT_EQ(e.e_set(z), e.poset.up(low)) << e.z_labels[z];
  }
}

TEST(Models, NaiveEdFiltersFailWithPinnedWitness) {
  auto e = ed_model(2, 2, EdFilters::minimal_upsets);
  auto v = validate_borel_model(e);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.size(), 94u);
  EXPECT_EQ(v[0].clause, "E-characterization");
  EXPECT_EQ(v[0].filter, 0);
  EXPECT_EQ(e.poset.label(v[0].element), "|00");
  // The offending filter is the up-set of the stemless condition listing every function.
  EXPECT_EQ(e.admissible[0].members, e.poset.up(el(e, "|00,01,10,11")));
}

TEST(Models, EdCenteredByStem) {
  auto e = ed_model(2, 2);
  std::map<std::string, std::vector<int>> blocks;
  for (int p = 0; p < e.poset.size(); ++p) {
    const auto& l = e.poset.label(p);
    blocks[l.substr(0, l.find('|'))].push_back(p);
  }
  std::vector<std::vector<int>> part;
  for (auto& [_, b] : blocks) part.push_back(b);
  EXPECT_EQ(check_linked_partition(e.poset, part, true), std::nullopt);
}

TEST(Nice, Examples) {
  auto c = cohen_model(2, 2);
  std::vector<int> all(c.poset.size()), zs(c.z_size());
  std::iota(all.begin(), all.end(), 0);
  std::iota(zs.begin(), zs.end(), 0);
  EXPECT_TRUE(check_nice_subposet(c, {"full", all, zs}).empty());
  EXPECT_TRUE(check_nice_subposet(c, {"top", {c.poset.top()}, zs}).empty());
  std::vector<int> q{c.poset.top(), el(c, "0"), el(c, "00"), el(c, "01")};
  std::sort(q.begin(), q.end());
  EXPECT_TRUE(check_nice_subposet(c, {"q", q, {*c.z_index("00"), *c.z_index("01")}}).empty());
  EXPECT_THROW(check_nice_subposet(c, {"q", q, {}}), Error);
}

TEST(Nice, MissedAntichainIsReported) {
  auto c = cohen_model(2, 2);
  // {top, 0, 00, 01} paired with z = 10: G_z^Q = {top} misses {0} which is maximal in Q.
  std::vector<int> q{c.poset.top(), el(c, "0"), el(c, "00"), el(c, "01")};
  std::sort(q.begin(), q.end());
  auto v = check_nice_subposet(c, {"q", q, {*c.z_index("10")}});
  EXPECT_FALSE(v.empty());
}

TEST(CorrectSystem, Degenerate) {
  auto p = vee();
  std::vector<int> id{0, 1, 2};
  CorrectSystem s{&p, &p, &p, &p, id, id, id, id};
  EXPECT_TRUE(check_correct_system(s).empty());
}

TEST(CorrectSystem, BrokenCompletenessHasAntichainWitness) {
  auto trivial = FinitePoset::from_relation({"0"}, {}, 0);
  auto q0 = vee();
  // Q1 adds a third child of the top, so {1,2} stops being maximal.
  auto q1 = FinitePoset::from_relation({"0", "1", "2", "3"}, {{1, 0}, {2, 0}, {3, 0}}, 0);
  CorrectSystem s{&trivial, &trivial, &q0, &q1, {0}, {0}, {0}, {0, 1, 2}};
  auto v = check_correct_system(s);
  ASSERT_FALSE(v.empty());
  auto hit = std::find_if(v.begin(), v.end(), [](const auto& x) { return x.antichain == std::vector<int>{1, 2}; });
  EXPECT_NE(hit, v.end());
}

}  // namespace
}  // namespace tiw
