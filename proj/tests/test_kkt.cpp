#include <gtest/gtest.h>

#include "liewedge/kkt.hpp"

using namespace liewedge;

TEST(Kkt, DerivationAlgebraDimensions) {
  // Der Sym(n) = so(n), Der Herm(n,C) = su(n), Der M^d = so(d-1)
  EXPECT_EQ(derivation_algebra(build_jordan("sym:3")).dim(), 3u);
  EXPECT_EQ(derivation_algebra(build_jordan("hermC:3")).dim(), 8u);
  EXPECT_EQ(derivation_algebra(build_jordan("mink:4")).dim(), 3u);
  EXPECT_EQ(derivation_algebra(build_jordan("sym:1")).dim(), 0u);
}

TEST(Kkt, Sym2GivesSp4) {
  Realization r = build_kkt("sym:2");
  EXPECT_EQ(r.dim(), 10u);
  EXPECT_EQ(r.rank(), 2u);
  EXPECT_TRUE(r.tube());
  EXPECT_EQ(r.pattern.middle_mult, 1u);
  EXPECT_EQ(r.pattern.short_mult, 0u);
}

TEST(Kkt, MinkowskiGivesSo2n) {
  for (std::size_t d : {3u, 4u, 5u}) {
    Realization r = build_kkt("mink:" + std::to_string(d));
    EXPECT_EQ(r.dim(), (d + 2) * (d + 1) / 2);
    EXPECT_EQ(r.rank(), 2u);
    EXPECT_EQ(r.pattern.middle_mult, d - 2);
  }
}

TEST(Kkt, RankOne) {
  Realization r = build_kkt("sym:1");
  EXPECT_EQ(r.dim(), 3u);
  EXPECT_EQ(r.rank(), 1u);
}

TEST(Kkt, IdentityExtendsToIdentity) {
  JordanAlgebra v = build_jordan("hermC:2");
  KKT k = kkt_lie(v);
  EXPECT_EQ(extend_involution_to_lie(k, Matrix::identity(v.n)), Matrix::identity(k.g->dim()));
}

TEST(Kkt, ExtendedInvolutionsFixGrading) {
  JordanAlgebra v = build_jordan("mink:4");
  KKT k = kkt_lie(v);
  Matrix s = Matrix::identity(4);
  for (std::size_t i = 1; i < 4; ++i) s(i, i) = -1;
  Matrix phi = extend_involution_to_lie(k, s);
  EXPECT_EQ(phi * phi, Matrix::identity(k.g->dim()));
  // grading element 1/2 (e_U - e_D) direction: L(e) is fixed
  Vec le = k.str_vec(v.left_mult(v.unit));
  EXPECT_EQ(phi.apply(le), le);
}

TEST(Kkt, CayleyInvolutionRecord) {
  Realization r = build_kkt("sym:2");
  auto recs = standard_involutions(r);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].key, "cayley");
  EXPECT_EQ(recs[0].fixed_dim, 4u);  // gl(2,R)
  EXPECT_EQ(recs[0].fixed_rank, 2u);
}

TEST(Kkt, BuildAnyDispatch) {
  EXPECT_EQ(build_any("kkt:hermC:2").dim(), 15u);
  EXPECT_EQ(build_any("su:2,2").dim(), 15u);
  EXPECT_THROW(build_any("kkt:nope:2"), ContractError);
}
