#include <gtest/gtest.h>

#include "liewedge/props.hpp"

using namespace liewedge;

class Suites : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Suites, PassesOnSmallSample) {
  const auto& s = all_suites().at(GetParam());
  SuiteResult r = run_suite(s, 60, 11);
  EXPECT_EQ(r.cases, 60u) << s.name;
  EXPECT_EQ(r.failures, 0u) << s.name << ": " << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Props, Suites, ::testing::Range<std::size_t>(0, 9),
                         [](const auto& info) {
                           std::string n = all_suites().at(info.param).name;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(Props, SameSeedSameCases) {
  props::Rng a = props::suite_rng(7, 3), b = props::suite_rng(7, 3), c = props::suite_rng(8, 3);
  EXPECT_EQ(props::random_vec(a, 6), props::random_vec(b, 6));
  EXPECT_NE(props::suite_rng(7, 3)(), c());
}

TEST(Props, KktPartners) {
  EXPECT_EQ(kkt_partner("sym:3"), "sp(6,R)");
  EXPECT_EQ(kkt_partner("hermC:2"), "su(2,2)");
  EXPECT_EQ(kkt_partner("hermH:3"), "so*(12)");
  EXPECT_EQ(kkt_partner("mink:4"), "su(2,2)");
  EXPECT_EQ(kkt_partner("hermH:1"), "sl(2,R)");
  EXPECT_EQ(kkt_partner("hermO3"), "e7(-25)");
}

TEST(Props, PeirceComponentsSumBack) {
  JordanAlgebra v = build_jordan("hermC:3");
  PeirceDecomposition pd = peirce_frame(v, v.frame);
  props::Rng rng = props::suite_rng(1, 1);
  Vec x = props::random_vec(rng, v.n);
  Vec s = zero_vec(v.n);
  for (const auto& [k, c] : props::peirce_components(pd, x)) {
    EXPECT_TRUE(pd.block(k.first, k.second).contains(c));
    s = add(s, c);
  }
  EXPECT_EQ(s, x);
}

TEST(Props, BrokenSuiteIsReported) {
  SuiteInfo bad{"bad", [](std::size_t, std::uint64_t) -> SuiteResult { throw ContractError("boom"); }};
  SuiteResult r = run_suite(bad, 5, 1);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.first_failure.find("boom"), std::string::npos);
}
