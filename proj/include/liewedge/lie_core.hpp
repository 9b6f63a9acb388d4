#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "exact_linalg.hpp"

namespace liewedge {

/// Finite-dimensional Lie algebra over the rationals, stored by sparse structure constants.
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// consts[i*n+j] holds [e_i, e_j] as a sparse vector.
  LieAlgebra(std::size_t n, std::vector<SparseVec> consts, std::string label, bool validate = true)
      : n_(n), c_(std::move(consts)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
    if (c_.size() != n_ * n_) throw ContractError("structure tensor has wrong size");
    if (validate) {
      check_antisymmetry();
      check_jacobi();
    }
  }

  std::size_t dim() const { return n_; }
  const std::string& label() const { return label_; }
  const SparseVec& c(std::size_t i, std::size_t j) const { return c_[i * n_ + j]; }

  const std::optional<Matrix>& theta() const { return theta_; }
  void set_theta(Matrix t) {
    if (t.rows != n_ || t.cols != n_) throw ContractError("theta has wrong size");
    theta_ = std::move(t);
  }

  const std::optional<std::vector<Matrix>>& realization() const { return realization_; }
  void set_realization(std::vector<Matrix> ms) { realization_ = std::move(ms); }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_) throw ContractError("bracket: dimension mismatch");
    Vec out = zero_vec(n_);
    Scalar t;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(y[j]) == 0 || i == j) continue;
        const auto& cij = c(i, j);
        if (cij.empty()) continue;
        t = x[i] * y[j];
        for (const auto& [k, v] : cij) out[k] += t * v;
      }
    }
    return out;
  }

  Vec bracket_basis(std::size_t i, const Vec& y) const { return bracket(unit_vec(n_, i), y); }

  /// Column j of ad(x) is [x, e_j].
  Matrix ad(const Vec& x) const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, v] : c(i, j)) m(k, j) += x[i] * v;
    }
    return m;
  }

  /// Gram matrix of the Killing form on the basis, computed once.
  const Matrix& killing_matrix() const {
    std::call_once(cache_->killing_once, [this] { cache_->killing = compute_killing(); });
    return cache_->killing;
  }

  Scalar killing(const Vec& x, const Vec& y) const {
    const Matrix& k = killing_matrix();
    Scalar s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(y[j]) != 0 && sgn(k(i, j)) != 0) s += x[i] * k(i, j) * y[j];
    }
    return s;
  }

  /// Killing form via the trace of ad(x)ad(y), without the cached Gram matrix.
  Scalar killing_direct(const Vec& x, const Vec& y) const {
    Matrix ax = ad(x), ay = ad(y);
    Scalar s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(ax(i, j)) != 0 && sgn(ay(j, i)) != 0) s += ax(i, j) * ay(j, i);
    return s;
  }

private:
  struct Cache {
    std::once_flag killing_once;
    Matrix killing;
  };

  void check_antisymmetry() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!c(i, i).empty()) throw ContractError(label_ + ": [e_i,e_i] != 0 at i=" + std::to_string(i));
      for (std::size_t j = i + 1; j < n_; ++j) {
        const auto& a = c(i, j);
        const auto& b = c(j, i);
        bool ok = a.size() == b.size();
        for (std::size_t t = 0; ok && t < a.size(); ++t) ok = a[t].first == b[t].first && a[t].second == -b[t].second;
        if (!ok) throw ContractError(label_ + ": antisymmetry fails");
      }
    }
  }

  void check_jacobi() const {
    Vec acc = zero_vec(n_);
    std::vector<std::uint32_t> touched;
    auto add_bb = [&](std::size_t i, std::size_t j, std::size_t k) {
      // accumulates [[e_i,e_j],e_k]
      for (const auto& [a, v] : c(i, j))
        for (const auto& [b, w] : c(a, k)) {
          if (sgn(acc[b]) == 0) touched.push_back(b);
          acc[b] += v * w;
        }
    };
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          add_bb(i, j, k);
          add_bb(j, k, i);
          add_bb(k, i, j);
          for (auto b : touched)
            if (sgn(acc[b]) != 0)
              throw ContractError(label_ + ": Jacobi identity fails at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
          for (auto b : touched) acc[b] = 0;
          touched.clear();
        }
  }

  Matrix compute_killing() const {
    // (ad e_i)_{ab} = c(i,b)[a]
    std::vector<std::unordered_map<std::uint64_t, Scalar>> ads(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t b = 0; b < n_; ++b)
        for (const auto& [a, v] : c(i, b)) ads[i][static_cast<std::uint64_t>(a) * n_ + b] = v;
    Matrix k(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        Scalar s = 0;
        const auto& small = ads[i].size() <= ads[j].size() ? ads[i] : ads[j];
        const auto& large = ads[i].size() <= ads[j].size() ? ads[j] : ads[i];
        for (const auto& [key, v] : small) {
          std::uint64_t a = key / n_, b = key % n_;
          auto it = large.find(b * n_ + a);
          if (it != large.end()) s += v * it->second;
        }
        k(i, j) = s;
        k(j, i) = s;
      }
    return k;
  }

  std::size_t n_ = 0;
  std::vector<SparseVec> c_;
  std::string label_;
  std::optional<Matrix> theta_;
  std::optional<std::vector<Matrix>> realization_;
  std::shared_ptr<Cache> cache_;
};

inline Scalar killing_form(const LieAlgebra& g, const Vec& x, const Vec& y) { return g.killing(x, y); }

/// Eigenspace decomposition of ad(h).
struct Grading {
  Vec generator;
  Scalar rescale = 1;
  std::map<Scalar, Subspace> parts;

  Subspace part(const Scalar& lambda, std::size_t n) const {
    auto it = parts.find(lambda);
    return it == parts.end() ? Subspace::zero(n) : it->second;
  }
};

inline Grading grading_of(const LieAlgebra& g, const Vec& h) {
  Grading gr;
  gr.generator = h;
  Matrix a = g.ad(h);
  std::size_t got = 0;
  for (const auto& lam : rational_eigenvalues(a)) {
    Subspace e = eigenspace(a, lam);
    got += e.dim();
    gr.parts.emplace(lam, std::move(e));
  }
  if (got != g.dim())
    throw ContractError("grading_of: residual dimension " + std::to_string(g.dim() - got) +
                        " (generator not diagonalizable over the rationals)");
  return gr;
}

/// Same decomposition with the generator rescaled so that the top eigenvalue is 1.
inline Grading normalized_grading_of(const LieAlgebra& g, const Vec& h) {
  Grading gr = grading_of(g, h);
  if (gr.parts.empty() || sgn(gr.parts.rbegin()->first) <= 0) return gr;
  Scalar top = gr.parts.rbegin()->first;
  Grading out;
  out.generator = scale(h, 1 / top);
  out.rescale = 1 / top;
  for (auto& [lam, s] : gr.parts) out.parts.emplace(lam / top, s);
  return out;
}

inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  Echelon e(g.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) e.add(g.bracket(a.vector(i), b.vector(j)));
  return e.subspace();
}

inline Subspace subalgebra_generated(const LieAlgebra& g, const Subspace& s) {
  Echelon e(g.dim());
  std::vector<Vec> basis;
  std::deque<Vec> fresh;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (e.add(s.vector(i))) fresh.push_back(s.vector(i));
  while (!fresh.empty()) {
    Vec v = std::move(fresh.front());
    fresh.pop_front();
    basis.push_back(v);
    for (const auto& w : basis) {
      Vec b = g.bracket(v, w);
      if (!is_zero(b) && e.add(b)) fresh.push_back(std::move(b));
    }
  }
  return e.subspace();
}

/// Smallest ad(within)-invariant subspace containing v.
inline Subspace ideal_generated(const LieAlgebra& g, const Subspace& within, const Vec& v) {
  Echelon e(g.dim());
  std::deque<Vec> fresh;
  if (e.add(v)) fresh.push_back(v);
  const auto ws = within.vectors();
  while (!fresh.empty() && e.rank() < within.dim()) {
    Vec x = std::move(fresh.front());
    fresh.pop_front();
    for (const auto& w : ws) {
      Vec b = g.bracket(w, x);
      if (!is_zero(b) && e.add(b)) fresh.push_back(std::move(b));
      if (e.rank() == within.dim()) break;
    }
  }
  return e.rank() == within.dim() ? within : e.subspace();
}

/// {x in within : [x, i] = 0 for all i in ideal}.
inline Subspace centralizer_in(const LieAlgebra& g, const Subspace& within, const Subspace& of) {
  const std::size_t m = within.dim();
  if (m == 0) return within;
  std::vector<Vec> rows;
  std::vector<Matrix> cols;
  Matrix sys(of.dim() * g.dim(), m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < of.dim(); ++i) {
      Vec b = g.bracket(within.vector(k), of.vector(i));
      for (std::size_t t = 0; t < g.dim(); ++t) sys(i * g.dim() + t, k) = b[t];
    }
  Subspace ker = kernel(sys);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) out.push_back(within.from_coords(ker.vector(i)));
  if (out.empty()) return Subspace::zero(g.dim());
  return Subspace::span_of(out, g.dim());
}

/// {x in within : killing(x, y) = 0 for all y in of}.
inline Subspace killing_complement_in(const LieAlgebra& g, const Subspace& within, const Subspace& of) {
  const std::size_t m = within.dim();
  if (m == 0) return within;
  const Matrix& k = g.killing_matrix();
  Matrix sys(of.dim(), m);
  std::vector<Vec> kof;
  for (std::size_t i = 0; i < of.dim(); ++i) kof.push_back(k.apply(of.vector(i)));
  for (std::size_t c = 0; c < m; ++c) {
    Vec w = within.vector(c);
    for (std::size_t i = 0; i < of.dim(); ++i) sys(i, c) = dot(kof[i], w);
  }
  Subspace ker = kernel(sys);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) out.push_back(within.from_coords(ker.vector(i)));
  if (out.empty()) return Subspace::zero(g.dim());
  return Subspace::span_of(out, g.dim());
}

/// Splits a semisimple subalgebra into minimal ideals: the ideal generated by one
/// vector is split off together with its Killing-orthogonal complement, until
/// nothing splits. Candidate generators come from hints first (root vectors work
/// best), then from the basis.
inline std::vector<Subspace> ideal_decomposition(const LieAlgebra& g, const Subspace& s,
                                                 const std::vector<Vec>& hints = {}) {
  std::vector<Subspace> done;
  std::deque<Subspace> todo{s};
  while (!todo.empty()) {
    Subspace t = std::move(todo.front());
    todo.pop_front();
    if (t.dim() == 0) continue;
    std::vector<Vec> cands;
    for (const auto& h : hints)
      if (!is_zero(h) && t.contains(h)) cands.push_back(h);
    for (std::size_t i = 0; i < t.dim(); ++i) cands.push_back(t.vector(i));
    bool split = false;
    for (const auto& v : cands) {
      Subspace i = ideal_generated(g, t, v);
      if (i.dim() == t.dim()) continue;
      Subspace j = killing_complement_in(g, t, i);
      if (i.dim() + j.dim() != t.dim() || intersect(i, j).dim() != 0)
        throw ContractError("ideal_decomposition: Killing form is degenerate (not semisimple)");
      todo.push_back(std::move(i));
      todo.push_back(std::move(j));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(t));
  }
  std::sort(done.begin(), done.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.pivots() < b.pivots();
  });
  return done;
}

inline std::vector<Subspace> ideal_decomposition(const LieAlgebra& g) {
  if (rank(g.killing_matrix()) != g.dim())
    throw ContractError("ideal_decomposition: Killing form is degenerate (not semisimple)");
  return ideal_decomposition(g, Subspace::full(g.dim()));
}

/// Linear map on coordinates given by a square matrix acting on columns.
struct LinearAutomorphism {
  Matrix matrix;
  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

inline bool preserves_brackets(const LieAlgebra& g, const Matrix& phi) {
  const std::size_t n = g.dim();
  std::vector<Vec> img(n);
  for (std::size_t j = 0; j < n; ++j) img[j] = phi.col(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = zero_vec(n);
      for (const auto& [k, v] : g.c(i, j)) axpy(lhs, v, img[k]);
      if (lhs != g.bracket(img[i], img[j])) return false;
    }
  return true;
}

inline bool is_involutive_automorphism(const LieAlgebra& g, const LinearAutomorphism& phi) {
  const Matrix& m = phi.matrix;
  if (m.rows != g.dim() || m.cols != g.dim()) return false;
  if (!(m * m == Matrix::identity(g.dim()))) return false;
  return preserves_brackets(g, m);
}

/// Fixed space of a linear map restricted to a subspace, for eigenvalue s (+1 or -1).
inline Subspace eigen_within(const Matrix& phi, const Subspace& s, const Scalar& lambda) {
  if (s.dim() == 0) return s;
  std::vector<Vec> diffs;
  Matrix sys(s.ambient_dim(), s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vec v = s.vector(k);
    Vec d = sub(phi.apply(v), scale(v, lambda));
    for (std::size_t t = 0; t < s.ambient_dim(); ++t) sys(t, k) = d[t];
  }
  Subspace ker = kernel(sys);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) out.push_back(s.from_coords(ker.vector(i)));
  if (out.empty()) return Subspace::zero(s.ambient_dim());
  return Subspace::span_of(out, s.ambient_dim());
}

/// Joint ad-eigenspaces of a commuting family; zero functional kept as the centralizer.
struct RootData {
  std::size_t rank = 0;
  std::map<EigenKey, Subspace> spaces;

  std::map<EigenKey, std::size_t> multiplicities() const {
    std::map<EigenKey, std::size_t> m;
    for (const auto& [k, s] : spaces)
      if (!is_zero(k)) m[k] = s.dim();
    return m;
  }
  std::size_t centralizer_dim() const {
    for (const auto& [k, s] : spaces)
      if (is_zero(k)) return s.dim();
    return 0;
  }
};

inline RootData restricted_root_data(const LieAlgebra& g, const std::vector<Vec>& a_basis) {
  for (std::size_t i = 0; i < a_basis.size(); ++i)
    for (std::size_t j = i + 1; j < a_basis.size(); ++j)
      if (!is_zero(g.bracket(a_basis[i], a_basis[j])))
        throw ContractError("restricted_root_data: a_basis is not abelian");
  std::vector<Matrix> ads;
  for (const auto& a : a_basis) ads.push_back(g.ad(a));
  RootData rd;
  rd.rank = a_basis.size();
  rd.spaces = simultaneous_eigenspaces(ads, g.dim());
  return rd;
}

/// Checks [g_a, g_b] inside g_{a+b} on basis pairs.
inline bool grading_is_compatible(const LieAlgebra& g, const Grading& gr) {
  for (const auto& [a, sa] : gr.parts)
    for (const auto& [b, sb] : gr.parts) {
      Subspace target = gr.part(a + b, g.dim());
      for (std::size_t i = 0; i < sa.dim(); ++i)
        for (std::size_t j = 0; j < sb.dim(); ++j)
          if (!target.contains(g.bracket(sa.vector(i), sb.vector(j)))) return false;
    }
  return true;
}

inline bool is_abelian(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!is_zero(g.bracket(s.vector(i), s.vector(j)))) return false;
  return true;
}

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.vector(i), s.vector(j)))) return false;
  return true;
}

/// B_theta(x,y) = -killing(x, theta y) is positive definite.
inline bool theta_is_cartan(const LieAlgebra& g, const Matrix& theta) {
  const std::size_t n = g.dim();
  Matrix b = g.killing_matrix() * theta;
  b = Scalar(-1) * b;
  if (!b.is_symmetric()) return false;
  (void)n;
  return is_pd_symmetric(b);
}

/// Extends a linear map given on the top part g_1 of a 3-grading to all of g:
/// theta*sigma*theta on g_{-1}, and [a,b] -> [phi a, phi b] on g_0 = [g_{-1}, g_1].
/// Throws when g_0 is not spanned by those brackets or the result is not an automorphism.
inline Matrix extend_from_degree_one(const LieAlgebra& g, const Grading& gr, const Matrix& theta, const Matrix& sigma,
                                     bool check = true) {
  const std::size_t n = g.dim();
  Subspace top = gr.part(1, n);
  std::vector<Vec> src, img;
  std::vector<Vec> tops, topi, bots, boti;
  for (std::size_t i = 0; i < top.dim(); ++i) {
    Vec u = top.vector(i);
    Vec su = sigma.apply(u);
    if (!top.contains(su)) throw ContractError("extension: map does not preserve the degree-one part");
    tops.push_back(u);
    topi.push_back(su);
    bots.push_back(theta.apply(u));
    boti.push_back(theta.apply(su));
  }
  Echelon zero_part(n);
  std::vector<Vec> zs, zi;
  for (std::size_t i = 0; i < bots.size() && zero_part.rank() < gr.part(0, n).dim(); ++i)
    for (std::size_t j = 0; j < tops.size(); ++j) {
      Vec b = g.bracket(bots[i], tops[j]);
      if (zero_part.add(b)) {
        zs.push_back(std::move(b));
        zi.push_back(g.bracket(boti[i], topi[j]));
      }
    }
  if (zero_part.rank() != gr.part(0, n).dim())
    throw ContractError("extension: degree-zero part not generated by [g_-1, g_1]");
  for (auto* p : {&tops, &bots, &zs}) src.insert(src.end(), p->begin(), p->end());
  for (auto* p : {&topi, &boti, &zi}) img.insert(img.end(), p->begin(), p->end());
  if (src.size() != n) throw ContractError("extension: grading parts do not span the algebra");
  Matrix b = Matrix::from_columns(src, n), im = Matrix::from_columns(img, n);
  Matrix phi = im * inverse(b);
  if (check && !preserves_brackets(g, phi)) throw ContractError("extension: result is not an automorphism");
  return phi;
}

/// Matrix-model helper: basis matrices in flattened echelon form so coordinates are pivot reads.
struct MatrixModel {
  std::size_t N = 0;
  std::vector<Matrix> basis;
  std::vector<std::size_t> pivots;

  Vec coords(const Matrix& m) const {
    Vec c(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) c[i] = m.a[pivots[i]];
    Matrix back = element(c);
    if (!(back == m)) throw ContractError("matrix is not in the span of the model");
    return c;
  }

  Matrix element(const Vec& c) const {
    Matrix m(N, N);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (sgn(c[i]) != 0)
        for (std::size_t t = 0; t < m.a.size(); ++t)
          if (sgn(basis[i].a[t]) != 0) m.a[t] += c[i] * basis[i].a[t];
    return m;
  }

  /// Coordinate matrix of a linear map on matrices.
  template <class F>
  Matrix linear_map(F&& f) const {
    const std::size_t n = basis.size();
    Matrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec c = coords(f(basis[j]));
      for (std::size_t i = 0; i < n; ++i) out(i, j) = c[i];
    }
    return out;
  }
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Builds a Lie algebra from a spanning set of N×N matrices closed under commutators.
inline std::pair<LieAlgebra, MatrixModel> matrix_lie_algebra(const std::vector<Matrix>& gens, std::size_t N,
                                                            const std::string& label) {
  std::vector<Vec> flat;
  for (const auto& m : gens) flat.emplace_back(m.a);
  Subspace s = Subspace::span_of(flat, N * N);
  MatrixModel model;
  model.N = N;
  model.pivots = s.pivots();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Matrix m(N, N);
    m.a = s.vector(i);
    model.basis.push_back(std::move(m));
  }
  const std::size_t n = model.basis.size();
  std::vector<SparseVec> consts(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec c = model.coords(commutator(model.basis[i], model.basis[j]));
      consts[i * n + j] = to_sparse(c);
      consts[j * n + i] = to_sparse(scale(c, -1));
    }
  LieAlgebra g(n, std::move(consts), label);
  g.set_realization(model.basis);
  return {std::move(g), std::move(model)};
}

}  // namespace liewedge
