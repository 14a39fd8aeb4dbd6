#include <gtest/gtest.h>

#include <algorithm>

#include "tiw/template.hpp"

namespace tiw {
namespace {

LinearOrder chain3() { return LinearOrder({"0", "1", "2"}); }

RawFamilies fsi3_raw() {
  return {{"0", {{}}}, {"1", {{}, {"0"}}}, {"2", {{}, {"0"}, {"1"}, {"0", "1"}}}};
}

IndexedTemplate fsi3() { return std::get<IndexedTemplate>(validate_template(chain3(), fsi3_raw())); }

// Independent oracle: T1..T4 by direct enumeration.
bool axioms_hold(const std::vector<std::vector<Mask>>& fam) {
  const int n = static_cast<int>(fam.size());
  auto has = [&](int x, Mask b) { return std::find(fam[x].begin(), fam[x].end(), b) != fam[x].end(); };
  for (int x = 0; x < n; ++x) {
    if (!has(x, 0)) return false;
    for (Mask a : fam[x])
      for (Mask b : fam[x])
        if (!has(x, a | b) || !has(x, a & b)) return false;
    for (int y = x + 1; y < n; ++y) {
      for (Mask a : fam[x])
        if (!has(y, a)) return false;
      for (Mask b : fam[y])
        if (!has(x, b & below(x))) return false;
    }
  }
  return true;
}

TEST(Template, Fsi3IsValid) {
  auto r = validate_template(chain3(), fsi3_raw());
  ASSERT_TRUE(std::holds_alternative<IndexedTemplate>(r));
  const auto& t = std::get<IndexedTemplate>(r);
  std::vector<std::vector<Mask>> fam;
  for (int x = 0; x < 3; ++x) fam.push_back(t.family(x));
  EXPECT_TRUE(axioms_hold(fam));
}

TEST(Template, MissingEmptySetViolatesT1) {
  auto raw = fsi3_raw();
  raw["1"] = {{"0"}};
  auto r = validate_template(chain3(), raw);
  ASSERT_TRUE(std::holds_alternative<std::vector<TemplateViolation>>(r));
  const auto& v = std::get<std::vector<TemplateViolation>>(r);
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const auto& e) { return e.axiom == "T1" && e.point == 1; }));
}

TEST(Template, MissingUnionViolatesT2WithWitness) {
  auto raw = fsi3_raw();
  raw["2"] = {{}, {"0"}, {"1"}};
  auto r = validate_template(chain3(), raw);
  ASSERT_TRUE(std::holds_alternative<std::vector<TemplateViolation>>(r));
  const auto& v = std::get<std::vector<TemplateViolation>>(r);
  auto t2 = std::find_if(v.begin(), v.end(), [](const auto& e) { return e.axiom == "T2" && e.point == 2; });
  ASSERT_NE(t2, v.end());
  std::vector<Mask> w = t2->witness;
  std::sort(w.begin(), w.end());
  ASSERT_GE(w.size(), 2u);
  EXPECT_EQ(w[0], bit(0));
  EXPECT_EQ(w[1], bit(1));
}

TEST(Template, NonSubsetOfPastIsStructural) {
  auto raw = fsi3_raw();
  raw["1"] = {{}, {"2"}};
  auto r = validate_template(chain3(), raw);
  ASSERT_TRUE(std::holds_alternative<std::vector<TemplateViolation>>(r));
  EXPECT_EQ(std::get<std::vector<TemplateViolation>>(r).front().axiom, "structure");
}

TEST(Template, Traces) {
  auto t = fsi3();
  EXPECT_EQ(trace_family(t, 2, bit(0) | bit(2)), (std::vector<Mask>{0, bit(0)}));
  EXPECT_EQ(trace_family(t, 1, 0), (std::vector<Mask>{0}));
  EXPECT_EQ(trace_family(t, 0, 7), (std::vector<Mask>{0}));
}

TEST(Template, Depths) {
  auto t = fsi3();
  EXPECT_EQ(depth(t, 0), 0);
  EXPECT_EQ(depth(t, bit(2)), 1);
  EXPECT_EQ(depth(t, 7), 3);
}

TEST(Template, RestrictToPrefixIsFsi2) {
  auto t = fsi3();
  auto r = restrict_template(t, bit(0) | bit(1));
  auto f2 = full_powerset_template({"0", "1"});
  ASSERT_EQ(r.size(), 2);
  for (int x = 0; x < 2; ++x) EXPECT_EQ(r.family(x), f2.family(x));
}

TEST(Template, RestrictToEmptyAndGap) {
  auto t = fsi3();
  EXPECT_EQ(restrict_template(t, 0).size(), 0);
  std::vector<int> orig;
  auto r = restrict_template(t, bit(0) | bit(2), &orig);
  EXPECT_EQ(orig, (std::vector<int>{0, 2}));
  EXPECT_EQ(r.family(1), (std::vector<Mask>{0, bit(0)}));
}

TEST(Template, RestrictToWholeReproduces) {
  auto t = fsi3();
  auto r = restrict_template(t, 7);
  for (int x = 0; x < 3; ++x) EXPECT_EQ(r.family(x), t.family(x));
}

TEST(Template, HatIsDownwardClosure) {
  LinearOrder o({"a", "b", "c"});
  RawFamilies raw{{"a", {{}}}, {"b", {{}, {"a"}}}, {"c", {{}, {"a"}, {"a", "b"}}}};
  auto t = std::get<IndexedTemplate>(validate_template(o, raw));
  EXPECT_TRUE(t.in_hat(2, bit(1)));
  EXPECT_TRUE(t.in_hat(2, bit(0) | bit(1)));
  EXPECT_FALSE(t.in_hat(1, bit(2)));
}

TEST(Template, FullPowersetChainsValidate) {
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    auto t = full_powerset_template(labels);
    std::vector<std::vector<Mask>> fam;
    for (int x = 0; x < n; ++x) fam.push_back(t.family(x));
    EXPECT_TRUE(check_template_axioms(t.order(), fam).empty()) << n;
    EXPECT_TRUE(axioms_hold(fam)) << n;
  }
}

}  // namespace
}  // namespace tiw
