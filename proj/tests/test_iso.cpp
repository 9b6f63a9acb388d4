#include <gtest/gtest.h>

#include "liewedge/iso.hpp"
#include "liewedge/kkt.hpp"

using namespace liewedge;

TEST(Iso, CanonicalLowRank) {
  EXPECT_EQ(iso_label(canonical(IsoType{"su", {1, 1}})), "sl(2,R)");
  EXPECT_EQ(iso_label(canonical(IsoType{"sp_R", {2}})), "sl(2,R)");
  EXPECT_EQ(iso_label(canonical(IsoType{"so", {2, 3}})), "sp(4,R)");
  EXPECT_EQ(iso_label(canonical(IsoType{"so", {4, 2}})), "su(2,2)");
  EXPECT_EQ(iso_label(canonical(IsoType{"so", {2, 6}})), "so*(8)");
  EXPECT_EQ(iso_label(canonical(IsoType{"so_star", {6}})), "su(3,1)");
  EXPECT_EQ(iso_label(canonical(IsoType{"su", {1, 3}})), "su(3,1)");
}

TEST(Iso, ParseRoundTrip) {
  for (std::string s : {"sl(2,R)", "sp(4,R)", "su(3,2)", "so*(8)", "so(2,5)", "e7(-25)", "so(4,C)", "sp(2,1)",
                        "so*(8)+sl(2,R)", "sl(2,R)+sl(2,R)", "0"})
    EXPECT_EQ(iso_label(parse_iso(s)), s) << s;
  EXPECT_EQ(iso_label(parse_iso("sl(2,R)+so(2,5)")), "so(2,5)+sl(2,R)");
  EXPECT_EQ(iso_label(parse_iso("so(2,4)")), "su(2,2)");
  EXPECT_THROW(parse_iso("gl(3)"), ContractError);
  EXPECT_THROW(parse_iso("su(2"), ContractError);
}

TEST(Iso, Dimensions) {
  EXPECT_EQ(iso_dim(IsoType{"e7", {}}), 133u);
  EXPECT_EQ(iso_dim(IsoType{"so_star", {8}}), 28u);
  EXPECT_EQ(iso_dim(IsoType{"su", {2, 2}}), 15u);
  EXPECT_EQ(iso_dim(IsoType{"so_C", {4}}), 12u);
  EXPECT_EQ(iso_dim(IsoType{"sp", {1, 1}}), 10u);
}

TEST(Iso, FixedAlgebraTypes) {
  EXPECT_EQ(iso_label(*fixed_algebra_type("so", 3, 1)), "so(1,2)");
  EXPECT_EQ(iso_label(*fixed_algebra_type("so", 6, 2)), "so(2,2)");
  EXPECT_EQ(iso_label(*fixed_algebra_type("sp", 10, 1)), "sp(1,1)");
  EXPECT_EQ(iso_label(*fixed_algebra_type("so_C", 12, 2)), "so(4,C)");
  EXPECT_FALSE(fixed_algebra_type("so_C", 12, 1));
  EXPECT_EQ(fixed_kind("so(3,2)"), "so");
  EXPECT_EQ(fixed_kind("sp(2,1)"), "sp");
  EXPECT_EQ(fixed_kind("so(5,C)"), "so_C");
  EXPECT_EQ(fixed_kind("str(V)"), "");
}

// The catalog applied to each whole realization must return the family it was built from.
TEST(Iso, CatalogAgainstRealizations) {
  struct Case {
    std::string spec, expect;
  };
  std::vector<Case> cases{{"su:1,1", "sl(2,R)"}, {"su:2,1", "su(2,1)"}, {"su:2,2", "su(2,2)"},
                          {"su:3,1", "su(3,1)"}, {"su:3,2", "su(3,2)"}, {"su:3,3", "su(3,3)"},
                          {"sp:1", "sl(2,R)"},   {"sp:2", "sp(4,R)"},   {"sp:3", "sp(6,R)"},
                          {"sostar:4", "so*(8)"}, {"sostar:5", "so*(10)"}, {"sostar:3", "su(3,1)"},
                          {"so2:1", "sl(2,R)"},  {"so2:3", "sp(4,R)"},  {"so2:4", "su(2,2)"},
                          {"so2:5", "so(2,5)"},  {"kkt:mink:4", "su(2,2)"}, {"kkt:hermC:2", "su(2,2)"},
                          {"kkt:sym:3", "sp(6,R)"}};
  for (const auto& c : cases) {
    Realization r = build_any(c.spec);
    Identification id = identify_iso_type(r, Subspace::full(r.dim()));
    EXPECT_EQ(iso_label(id.iso), c.expect) << c.spec;
    EXPECT_EQ(id.ideals.size(), 1u) << c.spec;
  }
}

TEST(Iso, SumOfIdeals) {
  // h = 1/2 H_1 in sp(4,R): g_t is the sl2 spanned by the first triple
  Realization r = build("sp:2");
  Subspace s = sum(sum(r.level({rat(1, 2), 0}, 1), r.level({rat(1, 2), 0}, -1)),
                   Subspace::span_of(std::vector<Vec>{r.H[0]}, r.dim()));
  EXPECT_EQ(iso_label(identify_iso_type(r, s).iso), "sl(2,R)");
  std::vector<Vec> two{r.X[0], r.Y[0], r.H[0], r.X[1], r.Y[1], r.H[1]};
  EXPECT_EQ(iso_label(identify_iso_type(r, Subspace::span_of(two, r.dim())).iso), "sl(2,R)+sl(2,R)");
  EXPECT_THROW(identify_iso_type(r, Subspace::span_of(std::vector<Vec>{r.X[0], r.X[1], r.Y[0]}, r.dim())),
               ContractError);
}
