#include <gtest/gtest.h>

#include <random>

#include "liewedge/exact_linalg.hpp"

using namespace liewedge;

namespace {

// Faddeev-LeVerrier, kept separate from the library's Hessenberg charpoly.
std::vector<Scalar> charpoly_flv(const Matrix& a) {
  const std::size_t n = a.rows;
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    Matrix t = a * m;
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

std::vector<Scalar> poly_rem(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Scalar f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  return a;
}

int sign_changes(const std::vector<int>& s) {
  int n = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++n;
    last = v;
  }
  return n;
}

// Number of negative real roots via a Sturm chain.
int negative_roots(std::vector<Scalar> p) {
  while (!p.empty() && sgn(p.front()) == 0) p.erase(p.begin());
  if (p.size() <= 1) return 0;
  std::vector<std::vector<Scalar>> chain{p};
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(static_cast<long>(i)));
  chain.push_back(d);
  while (chain.back().size() > 1) {
    auto r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(r);
  }
  std::vector<int> at_minf, at_zero;
  for (const auto& q : chain) {
    int lead = sgn(q.back());
    at_minf.push_back(((q.size() - 1) % 2 == 0) ? lead : -lead);
    at_zero.push_back(sgn(q.front()));
  }
  return sign_changes(at_minf) - sign_changes(at_zero);
}

bool psd_oracle(const Matrix& m) { return negative_roots(charpoly_flv(m)) == 0; }

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, bool make_gram) {
  std::uniform_int_distribution<int> d(-3, 3);
  if (make_gram) {
    std::uniform_int_distribution<std::size_t> kd(0, n);
    std::size_t k = kd(rng);
    Matrix b(k, n);
    for (auto& x : b.a) x = d(rng);
    return b.transpose() * b;
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

}  // namespace

TEST(ExactLinalg, RrefExample) {
  Matrix m{{2, 4}, {1, 2}};
  EXPECT_EQ(rref(m), (Matrix{{1, 2}, {0, 0}}));
}

TEST(ExactLinalg, PsdExamples) {
  EXPECT_FALSE(is_psd_symmetric(Matrix{{1, 2}, {2, 1}}));
  EXPECT_TRUE(is_psd_symmetric(Matrix{{1, 1}, {1, 1}}));
  EXPECT_TRUE(is_psd_symmetric(Matrix{{0, 0}, {0, 0}}));
  EXPECT_FALSE(is_psd_symmetric(Matrix{{0, 1}, {1, 0}}));
  EXPECT_THROW(is_psd_symmetric(Matrix{{1, 2}, {0, 1}}), ContractError);
}

TEST(ExactLinalg, RationalParsing) {
  EXPECT_EQ(parse_rational("-3/6"), rat(-1, 2));
  EXPECT_EQ(to_string(rat(3, 2)), "3/2");
  EXPECT_EQ(to_string(rat(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), ContractError);
  EXPECT_THROW(parse_rational("abc"), ContractError);
}

TEST(ExactLinalg, KernelAndIntersection) {
  Matrix m{{1, 1, 0}, {0, 1, 1}};
  Subspace k = kernel(m);
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(is_zero(m.apply(k.vector(0))));
  Subspace a = Subspace::span_of(std::vector<Vec>{{1, 0, 0}, {0, 1, 0}}, 3);
  Subspace b = Subspace::span_of(std::vector<Vec>{{0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(intersect(a, b).dim(), 1u);
  EXPECT_EQ(sum(a, b).dim(), 3u);
}

TEST(ExactLinalg, EchelonMatchesRref) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> vs(5, Vec(6));
    for (auto& v : vs)
      for (auto& x : v) x = d(rng) * d(rng);
    Echelon e(6);
    for (const auto& v : vs) e.add(v);
    EXPECT_EQ(e.subspace(), Subspace::span_of(vs, 6));
    Matrix m = Matrix::from_rows(vs, 6);
    for (const auto& k : e.kernel_basis()) EXPECT_TRUE(is_zero(m.apply(k)));
    EXPECT_EQ(e.kernel_basis().size() + e.rank(), 6u);
  }
}

TEST(ExactLinalg, SimultaneousEigenspacesSp4Coroots) {
  // ad of the two coroots of sp(4) in the basis of 4x4 matrices, acting by commutator on gl(4)
  // restricted to sp(4): just check the 9 joint eigenspaces of the diagonal pair on sp(4) coordinates.
  auto d = [](long a, long b, long c, long e) {
    Matrix m(4, 4);
    m(0, 0) = a; m(1, 1) = b; m(2, 2) = c; m(3, 3) = e;
    return m;
  };
  Matrix h1 = d(1, 0, -1, 0), h2 = d(0, 1, 0, -1);
  // sp(4) basis: block matrices [[A,B],[C,-A^T]] with B,C symmetric
  std::vector<Matrix> basis;
  auto e = [](std::size_t i, std::size_t j) {
    Matrix m(4, 4);
    m(i, j) = 1;
    return m;
  };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) basis.push_back(e(i, j) - e(2 + j, 2 + i));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i; j < 2; ++j) {
      basis.push_back(i == j ? e(i, 2 + j) : e(i, 2 + j) + e(j, 2 + i));
      basis.push_back(i == j ? e(2 + i, j) : e(2 + i, j) + e(2 + j, i));
    }
  ASSERT_EQ(basis.size(), 10u);
  auto ad = [&](const Matrix& h) {
    // all basis elements are eigenvectors of ad(h) here
    Matrix out(10, 10);
    for (std::size_t k = 0; k < 10; ++k) {
      Matrix c = h * basis[k] - basis[k] * h;
      Scalar lam = 0;
      for (std::size_t t = 0; t < 16; ++t)
        if (sgn(basis[k].a[t]) != 0) {
          lam = c.a[t] / basis[k].a[t];
          break;
        }
      out(k, k) = lam;
    }
    return out;
  };
  auto parts = simultaneous_eigenspaces({ad(h1), ad(h2)}, 10);
  EXPECT_EQ(parts.size(), 9u);
  std::size_t total = 0;
  for (const auto& [k, s] : parts) total += s.dim();
  EXPECT_EQ(total, 10u);
}

TEST(ExactLinalg, NonCommutingFamilyThrows) {
  Matrix a{{1, 0}, {0, 0}}, b{{0, 1}, {0, 0}};
  EXPECT_THROW(simultaneous_eigenspaces({a, b}, 2), ContractError);
}

TEST(ExactLinalg, ResidualDimensionReported) {
  Matrix rot{{0, -1}, {1, 0}};
  try {
    simultaneous_eigenspaces({rot}, 2);
    FAIL();
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("residual dimension 2"), std::string::npos);
  }
}

TEST(ExactLinalgProperty, RrefIdempotent) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m(4, 5);
    for (auto& x : m.a) x = Scalar(d(rng), std::max(1, std::abs(d(rng))));
    Matrix r = rref(m);
    EXPECT_EQ(rref(r), r);
  }
}

TEST(ExactLinalgProperty, PsdAgreesWithSturmOracle) {
  std::mt19937_64 rng(13);
  int psd_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix m = random_symmetric(rng, n, trial % 2 == 0);
    bool oracle = psd_oracle(m);
    psd_seen += oracle;
    EXPECT_EQ(is_psd_symmetric(m), oracle) << "trial " << trial;
  }
  EXPECT_GT(psd_seen, 50);
}

TEST(ExactLinalgProperty, EigenspaceDimensionsSumToAmbient) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    // P D P^{-1} with unitriangular P keeps rational eigenvalues
    const std::size_t n = 4;
    Matrix p = Matrix::identity(n), pinv;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) p(i, j) = d(rng);
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = p(i, j);
      aug(i, n + i) = 1;
    }
    rref_inplace(aug);
    pinv = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) pinv(i, j) = aug(i, n + j);
    Matrix dm(n, n);
    for (std::size_t i = 0; i < n; ++i) dm(i, i) = d(rng);
    Matrix m = p * dm * pinv;
    std::size_t total = 0;
    for (const auto& lam : rational_eigenvalues(m)) total += eigenspace(m, lam).dim();
    EXPECT_EQ(total, n);
  }
}
