#pragma once

#include "jordan.hpp"
#include "realizations.hpp"

namespace liewedge {

/// g = V ⊕ str(V) ⊕ V̄ with str(V) = L(V) ⊕ Der(V). Basis order: V (n), then L(e_i) (n), then a basis of
/// Der(V), then V̄ (n). Brackets:
///   [u, v̄] = 2(L(uv) + [L(u), L(v)]),  [T, u] = T u,  [T, v̄] = -(T* v)‾,  [T1, T2] = T1 T2 - T2 T1,
/// with T* the adjoint for the inner product of V. theta(u) = -ū, theta(T) = -T*.
struct KKT {
  JordanAlgebra v;
  std::size_t n = 0;
  std::size_t der_dim = 0;
  Subspace der;  // flattened n×n derivation matrices
  std::shared_ptr<const LieAlgebra> g;

  std::size_t up(std::size_t i) const { return i; }
  std::size_t str(std::size_t a) const { return n + a; }
  std::size_t down(std::size_t i) const { return 2 * n + der_dim + i; }
  std::size_t str_dim() const { return n + der_dim; }

  Matrix str_matrix(std::size_t a) const {
    if (a < n) return v.left_mult(unit_vec(n, a));
    Matrix m(n, n);
    m.a = der.vector(a - n);
    return m;
  }

  /// Coordinates of T = L(a) + D: a = T(e), D = T - L(a).
  Vec str_coords(const Matrix& t) const {
    Vec a = t.apply(v.unit);
    Matrix d = t - v.left_mult(a);
    if (!der.contains(d.a)) throw ContractError("kkt: matrix is not in the structure algebra");
    Vec dc = der.coords(d.a);
    a.insert(a.end(), dc.begin(), dc.end());
    return a;
  }

  Vec up_vec(const Vec& x) const {
    Vec out = zero_vec(g->dim());
    for (std::size_t i = 0; i < n; ++i) out[up(i)] = x[i];
    return out;
  }
  Vec down_vec(const Vec& x) const {
    Vec out = zero_vec(g->dim());
    for (std::size_t i = 0; i < n; ++i) out[down(i)] = x[i];
    return out;
  }
  Vec str_vec(const Matrix& t) const {
    Vec c = str_coords(t);
    Vec out = zero_vec(g->dim());
    for (std::size_t a = 0; a < c.size(); ++a) out[str(a)] = c[a];
    return out;
  }
};

/// Der(V) as the kernel of D(xy) = (Dx)y + x(Dy) over basis pairs.
inline Subspace derivation_algebra(const JordanAlgebra& v) {
  const std::size_t n = v.n;
  auto var = [n](std::size_t row, std::size_t col) { return static_cast<std::uint32_t>(row * n + col); };
  Echelon e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<std::map<std::uint32_t, Scalar>> rows(n);
      for (const auto& [l, c] : v.prod[i * n + j])
        for (std::size_t t = 0; t < n; ++t) rows[t][var(t, l)] += c;
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [t, c] : v.prod[k * n + j]) rows[t][var(k, i)] -= c;
        for (const auto& [t, c] : v.prod[i * n + k]) rows[t][var(k, j)] -= c;
      }
      for (auto& r : rows) {
        SparseVec sv;
        for (auto& [idx, c] : r)
          if (sgn(c) != 0) sv.emplace_back(idx, c);
        if (!sv.empty()) e.add(std::move(sv));
      }
    }
  auto ker = e.kernel_basis();
  if (ker.empty()) return Subspace::zero(n * n);
  return Subspace::span_of(ker, n * n);
}

inline KKT kkt_lie(const JordanAlgebra& v) {
  KKT k;
  k.v = v;
  const std::size_t n = v.n;
  k.n = n;
  k.der = derivation_algebra(v);
  k.der_dim = k.der.dim();
  const std::size_t s = n + k.der_dim, dim = 2 * n + s;
  const Matrix ginv = inverse(v.gram);

  std::vector<Matrix> L, S;
  for (std::size_t i = 0; i < n; ++i) L.push_back(v.left_mult(unit_vec(n, i)));
  for (std::size_t a = 0; a < s; ++a) S.push_back(k.str_matrix(a));
  // derivations are skew for an associative inner product; the L part is self-adjoint
  for (std::size_t a = n; a < s; ++a)
    if (!(ginv * S[a].transpose() * v.gram == Scalar(-1) * S[a]))
      throw ContractError("kkt: derivation is not skew-adjoint");
  // inner derivations must lie in Der
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!k.der.contains((L[i] * L[j] - L[j] * L[i]).a)) throw ContractError("kkt: inner derivation outside Der");

  std::vector<SparseVec> c(dim * dim);
  auto set = [&](std::size_t a, std::size_t b, const Vec& val) {
    c[a * dim + b] = to_sparse(val);
    c[b * dim + a] = to_sparse(scale(val, -1));
  };
  auto str_to_g = [&](const Vec& sc) {
    Vec out = zero_vec(dim);
    for (std::size_t a = 0; a < s; ++a) out[n + a] = sc[a];
    return out;
  };
  auto str_coords_fast = [&](const Matrix& t) {
    Vec a = t.apply(v.unit);
    Matrix d = t - v.left_mult(a);
    Vec dc = k.der.coords(d.a);
    a.insert(a.end(), dc.begin(), dc.end());
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // [u_i, v̄_j] = 2 (L(e_i e_j) + [L_i, L_j])
      Matrix t = v.left_mult(to_dense(v.prod[i * n + j], n)) + (L[i] * L[j] - L[j] * L[i]);
      set(k.up(i), 2 * n + k.der_dim + j, scale(str_to_g(str_coords_fast(t)), 2));
    }
  for (std::size_t a = 0; a < s; ++a) {
    const bool is_l = a < n;
    for (std::size_t i = 0; i < n; ++i) {
      Vec up = zero_vec(dim), down = zero_vec(dim);
      for (std::size_t t = 0; t < n; ++t) {
        up[t] = S[a](t, i);
        // T* = T on L(V), -T on Der
        down[2 * n + k.der_dim + t] = is_l ? -S[a](t, i) : S[a](t, i);
      }
      set(n + a, i, up);
      set(n + a, 2 * n + k.der_dim + i, down);
    }
    for (std::size_t b = a + 1; b < s; ++b) set(n + a, n + b, str_to_g(str_coords_fast(S[a] * S[b] - S[b] * S[a])));
  }
  LieAlgebra g(dim, std::move(c), "kkt(" + v.label + ")");
  Matrix theta(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    theta(2 * n + k.der_dim + i, i) = -1;
    theta(i, 2 * n + k.der_dim + i) = -1;
    theta(n + i, n + i) = -1;
  }
  for (std::size_t a = n; a < s; ++a) theta(n + a, n + a) = 1;
  g.set_theta(std::move(theta));
  k.g = std::make_shared<const LieAlgebra>(std::move(g));
  return k;
}

/// Realization data for the KKT algebra of V with V's frame: H_k = 2 L(c_k), X_k = c_k.
inline Realization kkt_realization(const KKT& k, const std::string& name) {
  if (k.v.frame.empty()) throw ContractError("kkt_realization: Jordan algebra has no frame");
  Realization r;
  r.family = "kkt";
  r.name = name;
  r.g = k.g;
  for (const auto& c : k.v.frame) {
    r.H.push_back(k.str_vec(Scalar(2) * k.v.left_mult(c)));
    r.X.push_back(k.up_vec(c));
  }
  return finish_realization(std::move(r));
}

/// sigma on g_1 = V, theta sigma theta on g_{-1}, T -> sigma T sigma^{-1} on str(V).
inline Matrix extend_involution_to_lie(const KKT& k, const Matrix& sigma) {
  const std::size_t n = k.n, dim = k.g->dim();
  if (!is_jordan_automorphism(k.v, sigma)) throw ContractError("extend_involution_to_lie: not a Jordan automorphism");
  Matrix sinv = inverse(sigma);
  Matrix phi(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      phi(k.up(t), k.up(i)) = sigma(t, i);
      phi(k.down(t), k.down(i)) = sigma(t, i);
    }
  for (std::size_t a = 0; a < k.str_dim(); ++a) {
    Vec img = k.str_coords(sigma * k.str_matrix(a) * sinv);
    for (std::size_t b = 0; b < img.size(); ++b) phi(k.str(b), k.str(a)) = img[b];
  }
  if (!preserves_brackets(*k.g, phi)) throw ContractError("extend_involution_to_lie: extension is not an automorphism");
  if (!(phi * *k.g->theta() == *k.g->theta() * phi)) throw ContractError("extend_involution_to_lie: does not commute with theta");
  return phi;
}

/// Jordan algebra on g_1(h), h = 1/2 sum H_k, with unit sum X_k and the frame {X_k}; tube type only.
inline GradedJordan frame_from_grid(const Realization& r) {
  if (!r.tube()) throw ContractError(r.name + ": frame_from_grid needs a tube type realization");
  Vec half(r.rank(), rat(1, 2));
  Vec x = zero_vec(r.dim()), y = zero_vec(r.dim());
  for (std::size_t k = 0; k < r.rank(); ++k) {
    x = add(x, r.X[k]);
    y = add(y, r.Y[k]);
  }
  GradedJordan gj = jordan_from_grading(*r.g, r.a_element(half), x, y, r.theta());
  for (const auto& xk : r.X) gj.v.frame.push_back(gj.top.coords(xk));
  validate_frame(gj.v, gj.v.frame);
  return gj;
}

/// Builds kkt(V) for a Jordan spec and checks that the degree-one part returns V up to isomorphism
/// (same dimension, rank and Peirce off-block dimension).
inline Realization build_kkt(const std::string& jordan_spec) {
  JordanAlgebra v = build_jordan(jordan_spec);
  KKT k = kkt_lie(v);
  Realization r = kkt_realization(k, "kkt(" + v.label + ")");
  r.params.clear();
  GradedJordan back = frame_from_grid(r);
  PeirceDecomposition a = peirce_frame(v, v.frame), b = peirce_frame(back.v, back.v.frame);
  if (back.v.n != v.n || back.v.rank() != v.rank() || a.off_dim() != b.off_dim())
    throw ContractError(r.name + ": round trip does not return the Jordan algebra");
  return r;
}

/// Realizations for every family spec, including kkt:<jordan spec>.
inline Realization build_any(const std::string& spec) {
  if (spec.rfind("kkt:", 0) == 0) return build_kkt(spec.substr(4));
  return build(spec);
}

}  // namespace liewedge
