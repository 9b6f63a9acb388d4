#pragma once

#include <iterator>
#include <random>
#include <set>

#include "lie_core.hpp"

namespace liewedge {

// ---------------------------------------------------------------- composition algebras

/// Real composition algebra of dimension 1, 2, 4 or 8 from Cayley-Dickson doubling
/// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
class CompositionAlgebra {
public:
  explicit CompositionAlgebra(std::size_t d) : d_(d) {
    if (d != 1 && d != 2 && d != 4 && d != 8) throw ContractError("composition algebra dimension must be 1, 2, 4 or 8");
    table_.assign(d * d, {0, 0});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<long> a(d, 0), b(d, 0);
        a[i] = 1;
        b[j] = 1;
        auto c = mul_int(a, b);
        for (std::size_t k = 0; k < d; ++k)
          if (c[k] != 0) table_[i * d + j] = {static_cast<int>(c[k]), k};
      }
  }

  std::size_t dim() const { return d_; }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        if (sgn(b[j]) == 0) continue;
        const auto& [s, k] = table_[i * d_ + j];
        if (s > 0)
          out[k] += a[i] * b[j];
        else
          out[k] -= a[i] * b[j];
      }
    }
    return out;
  }

  Vec conj(Vec a) const {
    for (std::size_t i = 1; i < d_; ++i) a[i] = -a[i];
    return a;
  }

  /// e_i e_j = sign * e_k
  std::pair<int, std::size_t> basis_product(std::size_t i, std::size_t j) const { return table_[i * d_ + j]; }

private:
  static std::vector<long> conj_int(std::vector<long> a) {
    for (std::size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
    return a;
  }

  static std::vector<long> mul_int(const std::vector<long>& x, const std::vector<long>& y) {
    const std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    const std::size_t h = n / 2;
    std::vector<long> a(x.begin(), x.begin() + static_cast<long>(h)), b(x.begin() + static_cast<long>(h), x.end());
    std::vector<long> c(y.begin(), y.begin() + static_cast<long>(h)), d(y.begin() + static_cast<long>(h), y.end());
    auto ac = mul_int(a, c), db = mul_int(conj_int(d), b), da = mul_int(d, a), bc = mul_int(b, conj_int(c));
    std::vector<long> out(n);
    for (std::size_t i = 0; i < h; ++i) {
      out[i] = ac[i] - db[i];
      out[h + i] = da[i] + bc[i];
    }
    return out;
  }

  std::size_t d_;
  std::vector<std::pair<int, std::size_t>> table_;
};

// ---------------------------------------------------------------- Jordan algebras

struct JordanAlgebra {
  std::size_t n = 0;
  std::vector<SparseVec> prod;  // prod[i*n+j] = e_i · e_j
  Vec unit;
  Matrix gram;                  // associative inner product
  std::string label;
  std::vector<Vec> frame;       // a Jordan frame when known

  std::size_t dim() const { return n; }
  std::size_t rank() const { return frame.size(); }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b[j]) == 0) continue;
        const auto& p = prod[i * n + j];
        if (p.empty()) continue;
        Scalar t = a[i] * b[j];
        for (const auto& [k, v] : p) out[k] += t * v;
      }
    }
    return out;
  }

  Vec square(const Vec& a) const { return mul(a, a); }
  Scalar inner(const Vec& a, const Vec& b) const { return dot(a, gram.apply(b)); }

  /// L(x): column j is x · e_j.
  Matrix left_mult(const Vec& x) const {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, v] : prod[i * n + j]) m(k, j) += x[i] * v;
    }
    return m;
  }

  /// P(x) = 2 L(x)^2 - L(x^2).
  Matrix quadratic_rep(const Vec& x) const {
    Matrix l = left_mult(x);
    return Scalar(2) * (l * l) - left_mult(square(x));
  }

  /// Adjoint with respect to the inner product.
  Matrix adjoint(const Matrix& t) const { return inverse(gram) * t.transpose() * gram; }
};

/// Builds the product tensor from a bilinear function on basis indices.
template <class F>
std::vector<SparseVec> product_table(std::size_t n, F&& f) {
  std::vector<SparseVec> p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      p[i * n + j] = to_sparse(f(i, j));
      p[j * n + i] = p[i * n + j];
    }
  return p;
}

/// Checks commutativity, unit, Jordan identity x(x^2 y) = x^2(xy) for x in basis ∪ pairwise sums and y
/// in basis, and associativity of the inner product on basis triples. Throws naming the failure.
inline void validate_jordan(const JordanAlgebra& v) {
  const std::size_t n = v.n;
  if (v.prod.size() != n * n || v.unit.size() != n || v.gram.rows != n) throw ContractError(v.label + ": inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (v.prod[i * n + j] != v.prod[j * n + i]) throw ContractError(v.label + ": product not commutative");
  for (std::size_t i = 0; i < n; ++i)
    if (v.mul(v.unit, unit_vec(n, i)) != unit_vec(n, i)) throw ContractError(v.label + ": unit law fails");
  if (!v.gram.is_symmetric() || !is_pd_symmetric(v.gram)) throw ContractError(v.label + ": inner product not positive definite");
  std::vector<Vec> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(unit_vec(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec s = unit_vec(n, i);
      s[j] = 1;
      xs.push_back(std::move(s));
    }
  std::vector<Matrix> lb;
  for (std::size_t j = 0; j < n; ++j) lb.push_back(v.left_mult(unit_vec(n, j)));
  for (const auto& x : xs) {
    Matrix lx = v.left_mult(x), lx2 = v.left_mult(v.square(x));
    // [L(x), L(x^2)] = 0 is the Jordan identity for all y at once
    if (!(lx * lx2 == lx2 * lx)) throw ContractError(v.label + ": Jordan identity fails");
  }
  // <e_i e_j, e_k> = <e_j, e_i e_k>  <=>  G L(e_i) symmetric
  for (std::size_t i = 0; i < n; ++i)
    if (!(v.gram * lb[i]).is_symmetric()) throw ContractError(v.label + ": inner product not associative");
}

namespace detail {

/// Herm(n, F) with basis: diagonal E_ii, then for i<j and each unit e_a the element e_a E_ij + conj(e_a) E_ji.
inline JordanAlgebra hermitian_matrices(std::size_t nn, std::size_t d, const std::string& label) {
  CompositionAlgebra f(d);
  struct Slot {
    std::size_t i, j, a;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < nn; ++i) slots.push_back({i, i, 0});
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j)
      for (std::size_t a = 0; a < d; ++a) slots.push_back({i, j, a});
  const std::size_t n = slots.size();
  using Mat = std::vector<Vec>;  // nn*nn entries, each a d-vector
  auto to_mat = [&](std::size_t b) {
    Mat m(nn * nn, zero_vec(d));
    const auto& s = slots[b];
    m[s.i * nn + s.j][s.a] = 1;
    if (s.i != s.j) m[s.j * nn + s.i] = f.conj(m[s.i * nn + s.j]);
    return m;
  };
  std::vector<Mat> mats;
  for (std::size_t b = 0; b < n; ++b) mats.push_back(to_mat(b));
  auto matmul = [&](const Mat& x, const Mat& y) {
    Mat z(nn * nn, zero_vec(d));
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t k = 0; k < nn; ++k) {
        if (is_zero(x[i * nn + k])) continue;
        for (std::size_t j = 0; j < nn; ++j)
          if (!is_zero(y[k * nn + j])) z[i * nn + j] = add(z[i * nn + j], f.mul(x[i * nn + k], y[k * nn + j]));
      }
    return z;
  };
  auto coords = [&](const Mat& m) {
    Vec c = zero_vec(n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& s = slots[b];
      c[b] = m[s.i * nn + s.j][s.a];
    }
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t a = 1; a < d; ++a)
        if (sgn(m[i * nn + i][a]) != 0) throw ContractError(label + ": diagonal not real");
    return c;
  };
  JordanAlgebra v;
  v.n = n;
  v.label = label;
  v.prod = product_table(n, [&](std::size_t i, std::size_t j) {
    Mat a = matmul(mats[i], mats[j]), b = matmul(mats[j], mats[i]);
    for (std::size_t t = 0; t < a.size(); ++t) a[t] = scale(add(a[t], b[t]), rat(1, 2));
    return coords(a);
  });
  v.unit = zero_vec(n);
  for (std::size_t i = 0; i < nn; ++i) v.unit[i] = 1;
  // trace form: <E_ii,E_ii> = 1, off-diagonal basis elements 2
  v.gram = Matrix(n, n);
  for (std::size_t b = 0; b < n; ++b) v.gram(b, b) = slots[b].i == slots[b].j ? 1 : 2;
  for (std::size_t i = 0; i < nn; ++i) v.frame.push_back(unit_vec(n, i));
  return v;
}

}  // namespace detail

/// Minkowski algebra M^d = R × R^{d-1}: (x,v)(y,w) = (xy + <v,w>, xw + yv), inner product xy + <v,w>.
inline JordanAlgebra minkowski(std::size_t d) {
  if (d < 1) throw ContractError("Minkowski algebra needs d >= 1");
  JordanAlgebra v;
  v.n = d;
  v.label = "M^" + std::to_string(d);
  v.prod = product_table(d, [&](std::size_t i, std::size_t j) {
    Vec out = zero_vec(d);
    if (i == 0)
      out[j] = 1;
    else if (i == j)
      out[0] = 1;
    return out;
  });
  v.unit = unit_vec(d, 0);
  v.gram = Matrix::identity(d);
  if (d == 1) {
    v.frame = {unit_vec(1, 0)};
  } else {
    Vec c1 = zero_vec(d), c2 = zero_vec(d);
    c1[0] = c2[0] = rat(1, 2);
    c1[1] = rat(1, 2);
    c2[1] = rat(-1, 2);
    v.frame = {c1, c2};
  }
  return v;
}

/// Direct families: sym:n, hermC:n, hermH:n, hermO:n (n <= 3), hermO3, mink:d.
inline JordanAlgebra build_jordan(const std::string& spec) {
  auto colon = spec.find(':');
  std::string fam = spec.substr(0, colon);
  int k = 0;
  if (fam == "hermO3") {
    fam = "hermO";
    k = 3;
  } else {
    if (colon == std::string::npos) throw ContractError("bad Jordan spec '" + spec + "'");
    std::size_t used = 0;
    try {
      k = std::stoi(spec.substr(colon + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || colon + 1 + used != spec.size()) throw ContractError("bad Jordan size in '" + spec + "'");
  }
  if (k < 1) throw ContractError("Jordan family size must be >= 1");
  const auto n = static_cast<std::size_t>(k);
  JordanAlgebra v;
  if (fam == "sym")
    v = detail::hermitian_matrices(n, 1, "Sym(" + std::to_string(k) + ",R)");
  else if (fam == "hermC")
    v = detail::hermitian_matrices(n, 2, "Herm(" + std::to_string(k) + ",C)");
  else if (fam == "hermH")
    v = detail::hermitian_matrices(n, 4, "Herm(" + std::to_string(k) + ",H)");
  else if (fam == "hermO") {
    if (k > 3) throw ContractError("Herm(n,O) is a Jordan algebra only for n <= 3");
    v = detail::hermitian_matrices(n, 8, "Herm(" + std::to_string(k) + ",O)");
  } else if (fam == "mink")
    v = minkowski(n);
  else
    throw ContractError("unknown Jordan family '" + fam + "'");
  validate_jordan(v);
  return v;
}

// ---------------------------------------------------------------- cone, Peirce, frames

/// x lies in the closed symmetric cone iff L(x) is positive semidefinite; G·L(x) is the
/// symmetric form of L(x) with respect to the inner product.
inline bool in_cone_closure(const JordanAlgebra& v, const Vec& x) { return is_psd_symmetric(v.gram * v.left_mult(x)); }

struct PeirceSpaces {
  Subspace v0, vhalf, v1;
};

inline PeirceSpaces peirce(const JordanAlgebra& v, const Vec& c) {
  if (v.square(c) != c) throw ContractError("peirce: element is not idempotent");
  Matrix l = v.left_mult(c);
  PeirceSpaces ps{eigenspace(l, 0), eigenspace(l, rat(1, 2)), eigenspace(l, 1)};
  if (ps.v0.dim() + ps.vhalf.dim() + ps.v1.dim() != v.n) throw ContractError("peirce: eigenvalue outside {0,1/2,1}");
  return ps;
}

struct PeirceDecomposition {
  std::vector<Vec> frame;
  std::vector<Subspace> diagonal;
  std::map<std::pair<std::size_t, std::size_t>, Subspace> off;

  const Subspace& block(std::size_t i, std::size_t j) const {
    if (i == j) return diagonal.at(i);
    return off.at({std::min(i, j), std::max(i, j)});
  }
  std::size_t off_dim() const { return off.empty() ? 0 : off.begin()->second.dim(); }
};

/// Frame checks: idempotents, pairwise orthogonal, summing to the unit, primitive (dim V_1(c) = 1).
inline void validate_frame(const JordanAlgebra& v, const std::vector<Vec>& f) {
  Vec s = zero_vec(v.n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (v.square(f[i]) != f[i]) throw ContractError("frame element " + std::to_string(i) + " is not idempotent");
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!is_zero(v.mul(f[i], f[j]))) throw ContractError("frame elements are not orthogonal");
    if (eigenspace(v.left_mult(f[i]), 1).dim() != 1) throw ContractError("frame element is not primitive");
    s = add(s, f[i]);
  }
  if (s != v.unit) throw ContractError("frame does not sum to the unit");
}

inline PeirceDecomposition peirce_frame(const JordanAlgebra& v, const std::vector<Vec>& f) {
  validate_frame(v, f);
  const std::size_t r = f.size();
  PeirceDecomposition pd;
  pd.frame = f;
  std::vector<Subspace> half;
  for (const auto& c : f) {
    PeirceSpaces ps = peirce(v, c);
    pd.diagonal.push_back(ps.v1);
    half.push_back(ps.vhalf);
  }
  std::size_t total = r;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Subspace b = intersect(half[i], half[j]);
      total += b.dim();
      pd.off.emplace(std::make_pair(i, j), std::move(b));
    }
  if (total != v.n) throw ContractError("Peirce blocks do not fill the algebra");
  return pd;
}

/// Target of V_A · V_B for index sets A, B (size 1 = diagonal block).
inline Subspace peirce_target(const PeirceDecomposition& pd, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                              std::size_t n) {
  std::set<std::size_t> a{i, j}, b{k, l}, both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.begin()));
  if (both.empty()) return Subspace::zero(n);
  if (a == b) {
    if (a.size() == 1) return pd.block(i, i);
    return sum(pd.block(i, i), pd.block(j, j));
  }
  if (a.size() == 1) return pd.block(k, l);
  if (b.size() == 1) return pd.block(i, j);
  std::vector<std::size_t> sd;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sd));
  return pd.block(sd[0], sd[1]);
}

/// Checks the Peirce multiplication rules on all basis pairs of all blocks.
inline bool peirce_rules_hold(const JordanAlgebra& v, const PeirceDecomposition& pd) {
  const std::size_t r = pd.frame.size();
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) blocks.emplace_back(i, j);
  for (const auto& [i, j] : blocks)
    for (const auto& [k, l] : blocks) {
      Subspace t = peirce_target(pd, i, j, k, l, v.n);
      const Subspace& x = pd.block(i, j);
      const Subspace& y = pd.block(k, l);
      for (std::size_t a = 0; a < x.dim(); ++a)
        for (std::size_t b = 0; b < y.dim(); ++b)
          if (!t.contains(v.mul(x.vector(a), y.vector(b)))) return false;
    }
  return true;
}

/// Restriction of the product to a unital subalgebra S with unit u; coordinates are S-coordinates.
inline JordanAlgebra jordan_subalgebra(const JordanAlgebra& v, const Subspace& s, const Vec& u, const std::string& label,
                                       const std::vector<Vec>& frame_in_v = {}) {
  if (!s.contains(u)) throw ContractError("subalgebra does not contain its unit");
  JordanAlgebra w;
  w.n = s.dim();
  w.label = label;
  auto basis = s.vectors();
  w.prod = product_table(w.n, [&](std::size_t i, std::size_t j) {
    Vec p = v.mul(basis[i], basis[j]);
    if (!s.contains(p)) throw ContractError("subspace is not closed under the Jordan product");
    return s.coords(p);
  });
  w.unit = s.coords(u);
  w.gram = Matrix(w.n, w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j) w.gram(i, j) = v.inner(basis[i], basis[j]);
  for (const auto& c : frame_in_v) w.frame.push_back(s.coords(c));
  return w;
}

/// V^(j) = V_1(c_1 + ... + c_j).
inline JordanAlgebra subalgebra_Vj(const JordanAlgebra& v, const std::vector<Vec>& f, std::size_t j) {
  if (j < 1 || j > f.size()) throw ContractError("subalgebra_Vj: index out of range");
  Vec c = zero_vec(v.n);
  for (std::size_t i = 0; i < j; ++i) c = add(c, f[i]);
  Subspace s = peirce(v, c).v1;
  std::vector<Vec> fr(f.begin(), f.begin() + static_cast<long>(j));
  return jordan_subalgebra(v, s, c, v.label + "^(" + std::to_string(j) + ")", fr);
}

/// Name of a simple euclidean Jordan algebra from rank and dimension.
inline std::string simple_jordan_type(std::size_t rank, std::size_t dim) {
  auto s = [](std::size_t v) { return std::to_string(v); };
  if (rank == 0) return "0";
  if (rank == 1) return dim == 1 ? "R" : "?";
  if (rank == 2) return "M^" + s(dim);
  const std::size_t pairs = rank * (rank - 1) / 2;
  if ((dim - rank) % pairs != 0) return "?";
  switch ((dim - rank) / pairs) {
    case 1: return "Sym(" + s(rank) + ",R)";
    case 2: return "Herm(" + s(rank) + ",C)";
    case 4: return "Herm(" + s(rank) + ",H)";
    case 8: return rank == 3 ? "Herm(3,O)" : "?";
    default: return "?";
  }
}

// ---------------------------------------------------------------- involutions

struct JordanInvolution {
  Matrix sigma;
  std::string cls;  // split-simple | peirce-reflection | nonsplit
  Subspace fixed;
  std::vector<Vec> fixed_frame;  // in V-coordinates
  std::size_t fixed_rank = 0;
  std::string fixed_type;
  Vec reflection_idempotent;  // c with sigma = P(2c - e), when a reflection
};

inline bool is_jordan_automorphism(const JordanAlgebra& v, const Matrix& s) {
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t j = i; j < v.n; ++j) {
      Vec lhs = s.apply(to_dense(v.prod[i * v.n + j], v.n));
      if (lhs != v.mul(s.col(i), s.col(j))) return false;
    }
  return true;
}

/// Classifies sigma relative to the frame f, which sigma must either fix pointwise or permute in pairs.
inline JordanInvolution classify_involution(const JordanAlgebra& v, const Matrix& sigma, const std::vector<Vec>& f) {
  const std::size_t n = v.n, r = f.size();
  if (!(sigma * sigma == Matrix::identity(n)) || !is_jordan_automorphism(v, sigma))
    throw ContractError("classify_involution: not an involutive Jordan automorphism");
  JordanInvolution out;
  out.sigma = sigma;
  out.fixed = eigen_within(sigma, Subspace::full(n), 1);
  std::vector<long> partner(r, -1);
  for (std::size_t k = 0; k < r; ++k) {
    Vec img = sigma.apply(f[k]);
    for (std::size_t l = 0; l < r; ++l)
      if (img == f[l]) partner[k] = static_cast<long>(l);
    if (partner[k] < 0) throw ContractError("classify_involution: frame is not sigma-adapted");
  }
  bool fixes = true, pairs = true;
  for (std::size_t k = 0; k < r; ++k) {
    if (partner[k] != static_cast<long>(k)) fixes = false;
    if (partner[k] == static_cast<long>(k)) pairs = false;
  }
  std::size_t s_rank = 0;
  if (fixes) {
    out.fixed_frame = f;
    s_rank = r;
    PeirceDecomposition pd = peirce_frame(v, f);
    // sign pattern s_i s_j on V_ij
    std::vector<int> sgnv(r, 1);
    bool scalar = true;
    for (std::size_t j = 1; j < r && scalar; ++j) {
      const Subspace& b = pd.block(0, j);
      if (b.dim() == 0) continue;
      Vec x = b.vector(0), y = sigma.apply(x);
      if (y == x)
        sgnv[j] = 1;
      else if (y == scale(x, -1))
        sgnv[j] = -1;
      else
        scalar = false;
    }
    for (std::size_t i = 0; i < r && scalar; ++i)
      for (std::size_t j = i + 1; j < r && scalar; ++j) {
        const Subspace& b = pd.block(i, j);
        for (std::size_t a = 0; a < b.dim() && scalar; ++a)
          if (sigma.apply(b.vector(a)) != scale(b.vector(a), sgnv[i] * sgnv[j])) scalar = false;
      }
    if (scalar) {
      out.cls = "peirce-reflection";
      out.reflection_idempotent = zero_vec(n);
      for (std::size_t i = 0; i < r; ++i)
        if (sgnv[i] > 0) out.reflection_idempotent = add(out.reflection_idempotent, f[i]);
      Vec w = sub(scale(out.reflection_idempotent, 2), v.unit);
      if (!(v.quadratic_rep(w) == sigma)) throw ContractError("classify_involution: block pattern is not P(2c-e)");
      std::size_t plus = 0;
      for (auto sg : sgnv) plus += sg > 0;
      const std::size_t m = pd.off_dim();
      auto piece = [&](std::size_t rr) { return simple_jordan_type(rr, rr + rr * (rr - 1) / 2 * m); };
      if (plus == r || plus == 0)
        out.fixed_type = piece(r);
      else
        out.fixed_type = piece(std::max(plus, r - plus)) + "+" + piece(std::min(plus, r - plus));
    } else {
      out.cls = "split-simple";
      out.fixed_type = simple_jordan_type(r, out.fixed.dim());
    }
  } else if (pairs) {
    out.cls = "nonsplit";
    for (std::size_t k = 0; k < r; ++k)
      if (partner[k] > static_cast<long>(k)) out.fixed_frame.push_back(add(f[k], f[static_cast<std::size_t>(partner[k])]));
    s_rank = out.fixed_frame.size();
    out.fixed_type = simple_jordan_type(s_rank, out.fixed.dim());
  } else {
    throw ContractError("classify_involution: sigma neither fixes nor pairs the frame");
  }
  out.fixed_rank = s_rank;
  if (out.cls == "nonsplit" ? 2 * s_rank != r : s_rank != r)
    throw ContractError("classify_involution: rank arithmetic violated");
  return out;
}

/// Span of squares of elements of a unital subalgebra; certifies by sampling that every square lies in the
/// subalgebra and in the closed cone. Squares of basis elements and of their sums with the unit are included,
/// which already span by polarization.
inline Subspace cone_section_span(const JordanAlgebra& v, const Subspace& sub, std::uint64_t seed,
                                  std::size_t samples = 50) {
  if (sub.dim() == 0) return sub;
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = i; j < sub.dim(); ++j)
      if (!sub.contains(v.mul(sub.vector(i), sub.vector(j))))
        throw ContractError("cone_section_span: subspace is not closed under the product");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  Echelon e(v.n);
  auto take = [&](const Vec& x) {
    Vec s = v.square(x);
    if (!sub.contains(s) || !in_cone_closure(v, s)) throw ContractError("cone_section_span: square outside the cone section");
    e.add(s);
  };
  for (std::size_t t = 0; t < samples; ++t) {
    Vec x = zero_vec(v.n);
    for (std::size_t i = 0; i < sub.dim(); ++i) axpy(x, Scalar(d(rng)), sub.vector(i));
    take(x);
  }
  Vec u = zero_vec(v.n);
  for (std::size_t i = 0; i < sub.dim(); ++i) u = add(u, sub.vector(i));
  for (std::size_t i = 0; i < sub.dim() && e.rank() < sub.dim(); ++i) {
    take(sub.vector(i));
    take(add(sub.vector(i), u));
  }
  Subspace span = e.subspace();
  if (span != sub) throw ContractError("cone_section_span: squares span a proper subspace");
  return span;
}

// ---------------------------------------------------------------- from a grading

struct GradedJordan {
  JordanAlgebra v;
  Subspace top;  // g_1(h) inside g
};

/// Jordan algebra on a subspace s playing the role of g_1: a·b = 1/2 [[a,y],b], unit x,
/// inner product -killing(a, theta b). Coordinates are s-coordinates.
inline JordanAlgebra jordan_on_subspace(const LieAlgebra& g, const Subspace& s, const Vec& x, const Vec& y,
                                        const Matrix& theta, const std::string& label) {
  auto basis = s.vectors();
  std::vector<Vec> ay;
  for (const auto& a : basis) ay.push_back(g.bracket(a, y));
  JordanAlgebra v;
  v.n = s.dim();
  v.label = label;
  v.prod = product_table(v.n, [&](std::size_t i, std::size_t j) {
    Vec p = scale(g.bracket(ay[i], basis[j]), rat(1, 2));
    if (!s.contains(p)) throw ContractError("jordan_on_subspace: product leaves the subspace");
    return s.coords(p);
  });
  v.unit = s.coords(x);
  v.gram = Matrix(v.n, v.n);
  const Matrix& k = g.killing_matrix();
  std::vector<Vec> tb;
  for (const auto& b : basis) tb.push_back(k.apply(theta.apply(b)));
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t j = i; j < v.n; ++j) v.gram(i, j) = v.gram(j, i) = -dot(basis[i], tb[j]);
  validate_jordan(v);
  return v;
}

/// Jordan algebra on g_1(h) for a 3-grading h with sl2-triple (2h, x, y) and theta x = -y.
inline GradedJordan jordan_from_grading(const LieAlgebra& g, const Vec& h, const Vec& x, const Vec& y,
                                        const Matrix& theta) {
  const std::size_t n = g.dim();
  Grading gr = grading_of(g, h);
  for (const auto& [lam, s] : gr.parts)
    if (lam != -1 && lam != 0 && lam != 1) throw ContractError("jordan_from_grading: grading is not a 3-grading");
  Vec h2 = scale(h, 2);
  if (g.bracket(h2, x) != scale(x, 2) || g.bracket(h2, y) != scale(y, -2) || g.bracket(x, y) != h2)
    throw ContractError("jordan_from_grading: (2h, x, y) is not an sl2-triple");
  if (theta.apply(x) != scale(y, -1)) throw ContractError("jordan_from_grading: theta x != -y");
  GradedJordan out;
  out.top = gr.part(1, n);
  out.v = jordan_on_subspace(g, out.top, x, y, theta, "V(" + g.label() + ")");
  return out;
}

}  // namespace liewedge
