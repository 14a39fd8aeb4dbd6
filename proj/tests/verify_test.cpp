#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tiw/verify.hpp"

namespace tiw {
namespace {

using test::cond;

const test::Loaded& i1l() { return test::shared("i1.json"); }
const SimpleIteration& i1() { return i1l().it(); }

TEST(Generics, EmptyOrder) {
  auto it = encode_fsi({});
  ASSERT_EQ(enumerate_generics(it).size(), 1u);
  EXPECT_EQ(format_generic(it, enumerate_generics(it)[0]), "<>");
}

TEST(Generics, I1Count) {
  const auto& it = i1();
  const int a = it.order().rank_or_throw("a"), c = it.order().rank_or_throw("c");
  const auto& za = *it.part(a).model;
  // Oracle: per Cohen value, two minimal elements at b times |Z_Q| of the subposet the name selects.
  std::size_t expected = 0;
  for (int z = 0; z < za.z_size(); ++z) {
    const int sub = za.z_labels[z][0] == '0' ? 0 : 1;
    expected += 2 * it.part(c).subposets.at(sub).zq.size();
  }
  EXPECT_EQ(enumerate_generics(it).size(), expected);
  EXPECT_EQ(expected, 32u);
}

TEST(Generics, Fsi2Count) { EXPECT_EQ(enumerate_generics(test::shared("fsi2.json").it()).size(), 16u); }

TEST(Filters, RealizedFilters) {
  const auto& it = i1();
  const auto& b = it.build(it.all());
  const int pb = it.order().rank_or_throw("b");
  auto b1 = *b.find(cond(it, R"({"b":1})"));
  auto b2 = *b.find(cond(it, R"({"b":2})"));
  for (const auto& g : enumerate_generics(it)) {
    auto f = realize_filter(it, g);
    EXPECT_TRUE(f.test(0));
    EXPECT_EQ(f.test(b1) + f.test(b2), 1);
    if (g.coords[pb].value == 0b101) {
      EXPECT_TRUE(f.test(b2));
      EXPECT_FALSE(f.test(b1));
    }
    EXPECT_EQ(audit_filter(it, f), std::nullopt) << format_generic(it, g);
  }
}

TEST(Verify, I1Passes) {
  const auto& l = i1l();
  auto r = verify_checks(l.it(), l.wb.names, kAllChecks);
  EXPECT_TRUE(r.pass()) << report_text(r, false);
  EXPECT_EQ(r.generics, 32u);
  EXPECT_GT(r.counts.at("main"), 0u);
}

TEST(Verify, Fsi2BothStages) {
  const auto& l = test::shared("fsi2.json");
  auto r = verify_main_theorem(l.it(), l.wb.names);
  EXPECT_TRUE(r.pass()) << report_text(r, false);
  auto f = synth_F(l.it(), l.it().all(), l.wb.names.at(1));
  EXPECT_EQ(free_components(l.it(), *f).s, Mask{0b11});
  EXPECT_TRUE(verify_well_definedness(l.it(), l.wb.names).pass());
}

TEST(Verify, FlippedBitsAreCaught) {
  const auto& l = i1l();
  VerifyOptions o;
  o.synth.flip_bits = true;
  auto r = verify_main_theorem(l.it(), l.wb.names, o);
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.failures.empty());
  EXPECT_FALSE(r.failures.front().point.empty());
  EXPECT_LE(r.failures.size(), Report::kKeptFailures);
}

TEST(Verify, HistoryOnSmallOrders) {
  auto one = encode_fsi({[] {
    IterandAssignment s;
    s.model = std::make_shared<BorelPosetModel>(cohen_model(2, 2));
    return s;
  }()});
  EXPECT_TRUE(verify_history_invariance(one, {}).pass());
  const auto& f3 = test::shared("fsi3.json");
  EXPECT_TRUE(verify_history_invariance(f3.it(), f3.wb.names).pass());
}

TEST(Verify, NonNiceInjection) {
  const auto& it = i1();
  const int c = it.order().rank_or_throw("c");
  const auto& m = *it.part(c).model;
  NiceSubposet bad{"stems-without-00", {}, {}};
  for (const char* l : {"|", "0|", "1|", "01|", "10|", "11|"}) bad.elements.push_back(*m.element(l));
  std::sort(bad.elements.begin(), bad.elements.end());
  for (int z = 0; z < m.z_size(); ++z) bad.zq.push_back(z);
  auto r = verify_nice_and_correct(it, {{c, bad}});
  EXPECT_FALSE(r.pass());
  auto hit = std::find_if(r.failures.begin(), r.failures.end(), [](const Failure& f) { return f.check == "nice"; });
  ASSERT_NE(hit, r.failures.end());
  EXPECT_NE(hit->subject.find("stems-without-00"), std::string::npos);
}

TEST(Verify, I1NiceAndCorrect) { EXPECT_TRUE(verify_nice_and_correct(i1()).pass()); }

// Case-(2) template: conditions never mention both a and a later point whose
// family omits it, so coordinate-wise generics are not directed.
TEST(Verify, I2ExpectedFailures) {
  const auto& l = test::shared("i2.json");
  const auto& it = l.it();
  auto main = verify_main_theorem(it, l.wb.names);
  EXPECT_EQ(main.failure_count, 32u);
  for (const auto& f : main.failures) EXPECT_EQ(f.check, "filter_audit");
  EXPECT_EQ(main.counts.at("main"), 5504u);
  auto nc = verify_nice_and_correct(it);
  EXPECT_EQ(nc.failure_count, 6u);
  for (const auto& f : nc.failures) EXPECT_EQ(f.check, "embedding");
  EXPECT_TRUE(verify_history_invariance(it, l.wb.names).pass());
  EXPECT_TRUE(verify_well_definedness(it, l.wb.names).pass());
  EXPECT_TRUE(verify_density(it).pass());
  EXPECT_EQ(verify_checks(it, l.wb.names, kAllChecks).failure_count, 38u);
}

TEST(Report, JsonWithoutTimingIsStable) {
  const auto& l = i1l();
  auto a = verify_density(l.it());
  auto b = verify_density(l.it());
  EXPECT_EQ(report_json(a, false), report_json(b, false));
  EXPECT_EQ(report_json(a, false).find("seconds"), std::string::npos);
}

}  // namespace
}  // namespace tiw
