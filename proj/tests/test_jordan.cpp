#include <gtest/gtest.h>

#include "liewedge/kkt.hpp"

using namespace liewedge;

namespace {

Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(x);
  return v;
}

// (xx)y = x(xy) and (yx)x = y(xx)
bool alternative(const CompositionAlgebra& a, const Vec& x, const Vec& y) {
  return a.mul(a.mul(x, x), y) == a.mul(x, a.mul(x, y)) && a.mul(a.mul(y, x), x) == a.mul(y, a.mul(x, x));
}

}  // namespace

TEST(Composition, OctonionsAlternativeNotAssociative) {
  CompositionAlgebra o(8);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 100; ++t) {
    Vec x(8), y(8);
    for (auto& c : x) c = d(rng);
    for (auto& c : y) c = d(rng);
    ASSERT_TRUE(alternative(o, x, y));
    // norm is multiplicative
    EXPECT_EQ(dot(o.mul(x, y), o.mul(x, y)), dot(x, x) * dot(y, y));
  }
  bool assoc = true;
  for (std::size_t i = 0; i < 8 && assoc; ++i)
    for (std::size_t j = 0; j < 8 && assoc; ++j)
      for (std::size_t k = 0; k < 8 && assoc; ++k) {
        Vec a = unit_vec(8, i), b = unit_vec(8, j), c = unit_vec(8, k);
        assoc = o.mul(o.mul(a, b), c) == o.mul(a, o.mul(b, c));
      }
  EXPECT_FALSE(assoc);
  // x conj(x) = |x|^2
  Vec x = ints({1, 2, 0, -1, 3, 0, 0, 1});
  EXPECT_EQ(o.mul(x, o.conj(x)), scale(unit_vec(8, 0), dot(x, x)));
}

TEST(Composition, RejectsBadDimension) { EXPECT_THROW(CompositionAlgebra(3), ContractError); }

TEST(Jordan, DirectFamiliesDimensions) {
  struct Case {
    std::string spec;
    std::size_t dim, rank, off;
  };
  std::vector<Case> cases{{"sym:1", 1, 1, 0},  {"sym:3", 6, 3, 1},   {"hermC:3", 9, 3, 2},
                          {"hermH:2", 6, 2, 4}, {"hermH:3", 15, 3, 4}, {"mink:5", 5, 2, 3},
                          {"mink:1", 1, 1, 0},  {"hermO3", 27, 3, 8}};
  for (const auto& c : cases) {
    JordanAlgebra v = build_jordan(c.spec);
    EXPECT_EQ(v.n, c.dim) << c.spec;
    EXPECT_EQ(v.rank(), c.rank) << c.spec;
    PeirceDecomposition pd = peirce_frame(v, v.frame);
    EXPECT_EQ(pd.off_dim(), c.off) << c.spec;
    EXPECT_TRUE(peirce_rules_hold(v, pd)) << c.spec;
  }
}

TEST(Jordan, BadSpecs) {
  EXPECT_THROW(build_jordan("sym:0"), ContractError);
  EXPECT_THROW(build_jordan("hermO:4"), ContractError);
  EXPECT_THROW(build_jordan("foo:2"), ContractError);
  EXPECT_THROW(build_jordan("sym:2x"), ContractError);
}

TEST(Jordan, SymOneIsReals) {
  JordanAlgebra v = build_jordan("sym:1");
  EXPECT_EQ(v.mul(ints({3}), ints({-5})), ints({-15}));
}

TEST(Jordan, MinkowskiProduct) {
  JordanAlgebra v = build_jordan("mink:4");
  // (x,v)(y,w) = (xy + <v,w>, xw + yv)
  Vec a = ints({2, 1, 0, -1}), b = ints({1, 3, 2, 1});
  EXPECT_EQ(v.mul(a, b), ints({2 + 3 - 1, 2 * 3 + 1, 2 * 2, 2 * 1 - 1}));
  EXPECT_EQ(v.unit, ints({1, 0, 0, 0}));
}

TEST(Jordan, UnitMapsAreIdentity) {
  for (std::string spec : {"sym:3", "hermC:2", "mink:3"}) {
    JordanAlgebra v = build_jordan(spec);
    EXPECT_EQ(v.left_mult(v.unit), Matrix::identity(v.n));
    EXPECT_EQ(v.quadratic_rep(v.unit), Matrix::identity(v.n));
  }
}

TEST(Jordan, PeirceReflectionOnSym2) {
  JordanAlgebra v = build_jordan("sym:2");  // basis E11, E22, E12+E21
  Vec w = sub(scale(v.frame[0], 2), v.unit);
  Matrix expect = Matrix::identity(3);
  expect(2, 2) = -1;
  EXPECT_EQ(v.quadratic_rep(w), expect);
}

TEST(Jordan, PeirceSpacesOfSym2) {
  JordanAlgebra v = build_jordan("sym:2");
  PeirceSpaces ps = peirce(v, v.frame[0]);
  EXPECT_EQ(ps.v1, Subspace::span_of({unit_vec(3, 0)}, 3));
  EXPECT_EQ(ps.vhalf, Subspace::span_of({unit_vec(3, 2)}, 3));
  EXPECT_EQ(ps.v0, Subspace::span_of({unit_vec(3, 1)}, 3));
  PeirceSpaces pe = peirce(v, v.unit);
  EXPECT_EQ(pe.v1.dim(), 3u);
  PeirceSpaces pz = peirce(v, zero_vec(3));
  EXPECT_EQ(pz.v0.dim(), 3u);
  EXPECT_THROW(peirce(v, ints({2, 0, 0})), ContractError);
}

TEST(Jordan, ConeExamples) {
  JordanAlgebra v = build_jordan("sym:2");
  EXPECT_TRUE(in_cone_closure(v, v.unit));
  EXPECT_FALSE(in_cone_closure(v, scale(v.unit, -1)));
  EXPECT_FALSE(in_cone_closure(v, ints({1, 1, 2})));  // [[1,2],[2,1]]
  EXPECT_TRUE(in_cone_closure(v, ints({1, 1, 1})));   // [[1,1],[1,1]]
}

TEST(Jordan, SubalgebrasOfOctonionMatrices) {
  JordanAlgebra v = build_jordan("hermO3");
  JordanAlgebra v2 = subalgebra_Vj(v, v.frame, 2);
  EXPECT_EQ(v2.n, 10u);
  EXPECT_EQ(v2.rank(), 2u);
  EXPECT_EQ(simple_jordan_type(v2.rank(), v2.n), "M^10");
  validate_jordan(v2);
  JordanAlgebra v1 = subalgebra_Vj(v, v.frame, 1);
  EXPECT_EQ(v1.n, 1u);
  EXPECT_EQ(simple_jordan_type(1, v1.n), "R");
  EXPECT_EQ(subalgebra_Vj(v, v.frame, 3).n, 27u);
  EXPECT_THROW(subalgebra_Vj(v, v.frame, 4), ContractError);
}

TEST(Jordan, ClassifyMinkowskiInvolutions) {
  JordanAlgebra v = build_jordan("mink:5");
  Matrix neg = Matrix::identity(5);
  for (std::size_t i = 1; i < 5; ++i) neg(i, i) = -1;
  JordanInvolution a = classify_involution(v, neg, v.frame);
  EXPECT_EQ(a.cls, "nonsplit");
  EXPECT_EQ(a.fixed_rank, 1u);
  Matrix refl = Matrix::identity(5);
  for (std::size_t i = 2; i < 5; ++i) refl(i, i) = -1;
  JordanInvolution b = classify_involution(v, refl, v.frame);
  EXPECT_EQ(b.cls, "peirce-reflection");
  EXPECT_EQ(b.fixed.dim(), 2u);
  EXPECT_EQ(b.fixed_type, "R+R");
  Matrix two = Matrix::identity(5);
  two(3, 3) = two(4, 4) = -1;
  JordanInvolution c = classify_involution(v, two, v.frame);
  EXPECT_EQ(c.cls, "split-simple");
  EXPECT_EQ(c.fixed_type, "M^3");
}

TEST(Jordan, ClassifyComplexConjugation) {
  JordanAlgebra v = build_jordan("hermC:2");  // E11, E22, 1·E12, i·E12
  Matrix s = Matrix::identity(4);
  s(3, 3) = -1;
  JordanInvolution j = classify_involution(v, s, v.frame);
  EXPECT_EQ(j.cls, "split-simple");
  EXPECT_EQ(j.fixed.dim(), 3u);
  EXPECT_EQ(j.fixed_rank, 2u);
  EXPECT_EQ(j.fixed_type, "M^3");  // rank-2 algebras are named as Minkowski: Sym(2,R) = M^3
  EXPECT_EQ(cone_section_span(v, j.fixed, 5).dim(), 3u);
}

TEST(Jordan, ConeSectionTrivialCases) {
  JordanAlgebra v = build_jordan("hermC:2");
  EXPECT_EQ(cone_section_span(v, Subspace::full(4), 1).dim(), 4u);
  EXPECT_EQ(cone_section_span(v, Subspace::zero(4), 1).dim(), 0u);
  // off-diagonal block is not a subalgebra
  EXPECT_THROW(cone_section_span(v, Subspace::span_of({unit_vec(4, 2)}, 4), 1), ContractError);
}

TEST(Jordan, FromGradingSp4IsSym2) {
  Realization r = build("sp:2");
  GradedJordan gj = frame_from_grid(r);
  const JordanAlgebra& v = gj.v;
  ASSERT_EQ(v.n, 3u);
  ASSERT_EQ(v.rank(), 2u);
  // unit law x·b = b
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(v.mul(v.unit, unit_vec(3, i)), unit_vec(3, i));
  // explicit isomorphism from Sym(2,R): E11 -> c1, E22 -> c2, E12+E21 -> b with b^2 = e
  PeirceDecomposition pd = peirce_frame(v, v.frame);
  Vec b = pd.block(0, 1).vector(0);
  Vec b2 = v.square(b);
  Scalar t = b2[0] / v.unit[0];
  ASSERT_EQ(b2, scale(v.unit, t));
  auto root = rational_sqrt(t);
  ASSERT_TRUE(root.has_value());
  b = scale(b, 1 / *root);
  JordanAlgebra sym = build_jordan("sym:2");
  Matrix phi = Matrix::from_columns({v.frame[0], v.frame[1], b}, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(phi.apply(sym.mul(unit_vec(3, i), unit_vec(3, j))), v.mul(phi.col(i), phi.col(j)));
}

TEST(Jordan, FromGradingSu22IsHerm2C) {
  GradedJordan gj = frame_from_grid(build("su:2,2"));
  EXPECT_EQ(gj.v.n, 4u);
  EXPECT_EQ(gj.v.rank(), 2u);
  EXPECT_EQ(peirce_frame(gj.v, gj.v.frame).off_dim(), 2u);
}

TEST(Jordan, FrameFromGridSmall) {
  GradedJordan a = frame_from_grid(build("su:1,1"));
  EXPECT_EQ(a.v.rank(), 1u);
  EXPECT_EQ(a.v.frame[0], a.v.unit);
  GradedJordan b = frame_from_grid(build("so2:3"));
  EXPECT_EQ(b.v.n, 3u);
  EXPECT_EQ(b.v.rank(), 2u);
  EXPECT_THROW(frame_from_grid(build("su:2,1")), ContractError);
}
