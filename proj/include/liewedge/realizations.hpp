#pragma once

#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "lie_core.hpp"

namespace liewedge {

/// Restricted root pattern relative to the coroots H_1..H_r.
struct RootPattern {
  std::size_t rank = 0;
  std::size_t long_mult = 0;    // 2e_k
  std::size_t middle_mult = 0;  // e_i +- e_j
  std::size_t short_mult = 0;   // e_k, nonzero only for non-tube
  std::size_t centralizer = 0;  // dim of the zero weight space
  bool tube() const { return short_mult == 0; }
  bool operator==(const RootPattern&) const = default;
};

/// A hermitian simple Lie algebra with its grid: coroots H_k, sl2-triples (H_k, X_k, Y_k),
/// Cartan involution theta and H-element H0.
struct Realization {
  std::string family;  // su, sp, sostar, so2, kkt
  std::vector<int> params;
  std::string name;
  std::shared_ptr<const LieAlgebra> g;
  std::shared_ptr<const MatrixModel> model;  // null for algebras without matrices
  std::vector<Vec> H, X, Y;
  Vec H0;
  Subspace k, p;
  RootPattern pattern;
  std::map<EigenKey, Subspace> roots;  // keyed by (alpha(H_1), ..., alpha(H_r))

  std::size_t rank() const { return H.size(); }
  std::size_t dim() const { return g->dim(); }
  bool tube() const { return pattern.tube(); }
  const Matrix& theta() const { return *g->theta(); }

  Vec a_element(const Vec& lambda) const {
    if (lambda.size() != H.size()) throw ContractError("a_element: expected " + std::to_string(H.size()) + " coordinates");
    Vec out = zero_vec(dim());
    for (std::size_t i = 0; i < H.size(); ++i)
      if (sgn(lambda[i]) != 0) axpy(out, lambda[i], H[i]);
    return out;
  }

  /// Sum of the root spaces (including zero) on which alpha(sum lambda_k H_k) = value.
  Subspace level(const Vec& lambda, const Scalar& value) const {
    std::vector<Vec> vs;
    for (const auto& [key, s] : roots) {
      Scalar v = 0;
      for (std::size_t i = 0; i < key.size(); ++i) v += key[i] * lambda[i];
      if (v == value) {
        auto b = s.vectors();
        vs.insert(vs.end(), b.begin(), b.end());
      }
    }
    if (vs.empty()) return Subspace::zero(dim());
    return Subspace::span_of(vs, dim());
  }

  /// Spectrum of ad(sum lambda_k H_k), read off the root decomposition.
  std::set<Scalar> spectrum(const Vec& lambda) const {
    std::set<Scalar> out;
    for (const auto& [key, s] : roots) {
      Scalar v = 0;
      for (std::size_t i = 0; i < key.size(); ++i) v += key[i] * lambda[i];
      out.insert(v);
    }
    return out;
  }
};

namespace detail {

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline Matrix diag(const std::vector<long>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

/// Complex N×N matrix re + i·im as a real 2N×2N matrix with 2×2 blocks [[a,-b],[b,a]].
inline Matrix realify(const Matrix& re, const Matrix& im) {
  const std::size_t n = re.rows;
  Matrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(2 * i, 2 * j) = re(i, j);
      r(2 * i + 1, 2 * j + 1) = re(i, j);
      r(2 * i, 2 * j + 1) = -im(i, j);
      r(2 * i + 1, 2 * j) = im(i, j);
    }
  return r;
}

inline Matrix realify(const Matrix& re) { return realify(re, Matrix(re.rows, re.cols)); }

/// Realified complex conjugation is D R D with this D.
inline Matrix conj_sign(std::size_t n) {
  std::vector<long> d;
  for (std::size_t i = 0; i < n; ++i) {
    d.push_back(1);
    d.push_back(-1);
  }
  return diag(d);
}

inline Matrix complex_unit(std::size_t n) { return realify(Matrix(n, n), Matrix::identity(n)); }

/// Real matrices R (M×M) satisfying linear constraints; each constraint maps R to a matrix that must vanish.
inline std::vector<Matrix> solve_matrix_constraints(std::size_t m,
                                                    const std::vector<std::function<Vec(const Matrix&)>>& cons) {
  const std::size_t nvars = m * m;
  // constraint value of unit matrix E_u for every output slot
  std::vector<std::vector<Vec>> images(cons.size());
  for (std::size_t c = 0; c < cons.size(); ++c)
    for (std::size_t u = 0; u < nvars; ++u) images[c].push_back(cons[c](unit_matrix(m, u / m, u % m)));
  Echelon e(nvars);
  for (std::size_t c = 0; c < cons.size(); ++c) {
    const std::size_t outs = images[c].empty() ? 0 : images[c][0].size();
    for (std::size_t t = 0; t < outs; ++t) {
      SparseVec row;
      for (std::size_t u = 0; u < nvars; ++u)
        if (sgn(images[c][u][t]) != 0) row.emplace_back(static_cast<std::uint32_t>(u), images[c][u][t]);
      if (!row.empty()) e.add(std::move(row));
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : e.kernel_basis()) {
    Matrix r(m, m);
    r.a = v;
    out.push_back(std::move(r));
  }
  return out;
}

inline std::function<Vec(const Matrix&)> preserves_form(const Matrix& f) {
  return [f](const Matrix& r) { return (r.transpose() * f + f * r).a; };
}

inline std::function<Vec(const Matrix&)> commutes_with(const Matrix& c) {
  return [c](const Matrix& r) { return (r * c - c * r).a; };
}

inline std::function<Vec(const Matrix&)> complex_trace_free() {
  return [](const Matrix& r) {
    Scalar re = 0, im = 0;
    for (std::size_t j = 0; 2 * j < r.rows; ++j) {
      re += r(2 * j, 2 * j);
      im += r(2 * j + 1, 2 * j);
    }
    return Vec{re, im};
  };
}

inline Vec apply_ad_power(const LieAlgebra& g, const Vec& x, Vec v, int times) {
  for (int i = 0; i < times; ++i) v = g.bracket(x, v);
  return v;
}

inline RootPattern analyse_roots(const std::map<EigenKey, Subspace>& roots, std::size_t r) {
  RootPattern pat;
  pat.rank = r;
  bool first_long = true, first_mid = true, first_short = true;
  std::size_t nlong = 0, nmid = 0, nshort = 0;
  auto same = [](std::size_t& slot, bool& first, std::size_t d) {
    if (first) {
      slot = d;
      first = false;
    } else if (slot != d) {
      throw ContractError("root multiplicities are not uniform");
    }
  };
  for (const auto& [key, s] : roots) {
    std::size_t nz = 0, twos = 0, ones = 0;
    for (const auto& c : key) {
      if (sgn(c) != 0) ++nz;
      if (abs(c) == 2) ++twos;
      if (abs(c) == 1) ++ones;
    }
    if (nz == 0) {
      pat.centralizer = s.dim();
    } else if (nz == 1 && twos == 1) {
      same(pat.long_mult, first_long, s.dim());
      ++nlong;
    } else if (nz == 2 && ones == 2) {
      same(pat.middle_mult, first_mid, s.dim());
      ++nmid;
    } else if (nz == 1 && ones == 1) {
      same(pat.short_mult, first_short, s.dim());
      ++nshort;
    } else {
      std::ostringstream os;
      os << "unexpected restricted root (";
      for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << to_string(key[i]);
      os << ")";
      throw ContractError(os.str());
    }
  }
  if (nlong != 2 * r || nmid != 2 * r * (r - 1) || (nshort != 0 && nshort != 2 * r))
    throw ContractError("restricted roots do not form a system of type C or BC");
  return pat;
}

}  // namespace detail

/// Completes a realization from g (with theta) and coroots: root data, grid, H-element, checks.
inline Realization finish_realization(Realization r) {
  const LieAlgebra& g = *r.g;
  if (!g.theta()) throw ContractError(r.name + ": missing Cartan involution");
  const Matrix& th = *g.theta();
  const std::size_t n = g.dim();
  if (!is_involutive_automorphism(g, {th})) throw ContractError(r.name + ": theta is not an involutive automorphism");
  if (!theta_is_cartan(g, th)) throw ContractError(r.name + ": B_theta is not positive definite");
  r.k = eigen_within(th, Subspace::full(n), 1);
  r.p = eigen_within(th, Subspace::full(n), -1);
  for (const auto& h : r.H)
    if (!r.p.contains(h)) throw ContractError(r.name + ": coroot not in p");
  RootData rd = restricted_root_data(g, r.H);
  r.roots = std::move(rd.spaces);
  r.pattern = detail::analyse_roots(r.roots, r.H.size());

  const std::size_t rk = r.H.size();
  Vec h0;
  if (!r.X.empty()) {
    // grid supplied by the caller (Jordan-algebra constructions): tube formula for H0
    if (!r.tube() || r.X.size() != rk) throw ContractError(r.name + ": supplied grid needs tube type");
    r.Y.clear();
    h0 = zero_vec(n);
    for (const auto& x : r.X) {
      r.Y.push_back(scale(th.apply(x), -1));
      axpy(h0, rat(1, 2), sub(x, r.Y.back()));
    }
  } else {
    // H-element: center of k, scaled so that ad(H0)^2 = -1 on p
    Subspace zk = centralizer_in(g, r.k, r.k);
    if (zk.dim() != 1) throw ContractError(r.name + ": center of k has dimension " + std::to_string(zk.dim()));
    Vec z = zk.vector(0);
    Vec pv = r.p.vector(0);
    Vec z2 = detail::apply_ad_power(g, z, pv, 2);
    Scalar c = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(pv[i]) != 0) {
        c = -z2[i] / pv[i];
        break;
      }
    auto root = rational_sqrt(c);
    if (!root || sgn(*root) == 0) throw ContractError(r.name + ": H-element normalization is not rational");
    h0 = scale(z, 1 / *root);

    r.X.assign(rk, {});
    r.Y.assign(rk, {});
    for (std::size_t k = 0; k < rk; ++k) {
      EigenKey key(rk, Scalar(0));
      key[k] = 2;
      auto it = r.roots.find(key);
      if (it == r.roots.end() || it->second.dim() != 1) throw ContractError(r.name + ": long root space not a line");
      Vec x = it->second.vector(0);
      Vec y = scale(th.apply(x), -1);
      Vec xy = g.bracket(x, y);
      // xy = s * H_k with s > 0
      Scalar s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(r.H[k][i]) != 0) {
          s = xy[i] / r.H[k][i];
          break;
        }
      if (xy != scale(r.H[k], s) || sgn(s) <= 0) throw ContractError(r.name + ": [X,-theta X] not a positive multiple of H");
      auto sq = rational_sqrt(s);
      if (!sq) throw ContractError(r.name + ": grid normalization is not rational");
      x = scale(x, 1 / *sq);
      if (k == 0 && sgn(g.killing(x, h0)) > 0) h0 = scale(h0, -1);
      Scalar b = g.killing(x, h0);
      if (sgn(b) == 0) throw ContractError(r.name + ": grid element orthogonal to H-element");
      if (sgn(b) > 0) x = scale(x, -1);
      r.X[k] = x;
      r.Y[k] = scale(th.apply(x), -1);
    }
  }
  r.H0 = h0;
  for (std::size_t k = 0; k < rk; ++k) {
    EigenKey key(rk, Scalar(0));
    key[k] = 2;
    auto it = r.roots.find(key);
    if (it == r.roots.end() || !it->second.contains(r.X[k])) throw ContractError(r.name + ": X_k outside the long root space");
    if (sgn(g.killing(r.X[k], h0)) >= 0) throw ContractError(r.name + ": grid element on the wrong side of H0");
  }

  for (std::size_t k = 0; k < rk; ++k) {
    if (g.bracket(r.H[k], r.X[k]) != scale(r.X[k], 2) || g.bracket(r.H[k], r.Y[k]) != scale(r.Y[k], -2) ||
        g.bracket(r.X[k], r.Y[k]) != r.H[k])
      throw ContractError(r.name + ": grid triple relations fail");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    Vec once = g.bracket(h0, e);
    if (detail::apply_ad_power(g, h0, once, 2) != scale(once, -1)) throw ContractError(r.name + ": ad(H0)^3 != -ad(H0)");
  }
  if (eigen_within(g.ad(h0), Subspace::full(n), 0) != r.k) throw ContractError(r.name + ": ker ad(H0) != k");
  if (r.tube()) {
    Vec expect = zero_vec(n);
    for (std::size_t k = 0; k < rk; ++k) axpy(expect, rat(1, 2), sub(r.X[k], r.Y[k]));
    if (expect != h0) throw ContractError(r.name + ": H0 differs from the tube formula");
  }
  return r;
}

inline std::string family_name(const std::string& fam, const std::vector<int>& ps) {
  auto i = [](int v) { return std::to_string(v); };
  if (fam == "su") return "su(" + i(ps.at(0)) + "," + i(ps.at(1)) + ")";
  if (fam == "sp") return "sp(" + i(2 * ps.at(0)) + ",R)";
  if (fam == "sostar") return "so*(" + i(2 * ps.at(0)) + ")";
  if (fam == "so2") return "so(2," + i(ps.at(0)) + ")";
  return fam;
}

namespace detail {

inline Realization from_matrices(const std::string& fam, std::vector<int> ps, const std::vector<Matrix>& span,
                                 std::size_t m, const std::vector<Matrix>& coroots, std::size_t expected_dim) {
  Realization r;
  r.family = fam;
  r.params = std::move(ps);
  r.name = family_name(fam, r.params);
  auto [g, model] = matrix_lie_algebra(span, m, r.name);
  if (g.dim() != expected_dim)
    throw ContractError(r.name + ": built dimension " + std::to_string(g.dim()) + ", expected " +
                        std::to_string(expected_dim));
  g.set_theta(model.linear_map([](const Matrix& x) { return Scalar(-1) * x.transpose(); }));
  for (const auto& h : coroots) r.H.push_back(model.coords(h));
  r.g = std::make_shared<const LieAlgebra>(std::move(g));
  r.model = std::make_shared<const MatrixModel>(std::move(model));
  return finish_realization(std::move(r));
}

}  // namespace detail

/// su(p,q) = { Z : Z* J + J Z = 0, tr Z = 0 }, J = diag(I_p, -I_q), p >= q >= 1.
inline Realization build_su(int p, int q) {
  if (q < 1 || p < q) throw ContractError("su(p,q) needs p >= q >= 1");
  using namespace detail;
  const std::size_t n = static_cast<std::size_t>(p + q);
  std::vector<long> j;
  for (int i = 0; i < p + q; ++i) j.push_back(i < p ? 1 : -1);
  auto span = solve_matrix_constraints(
      2 * n, {commutes_with(complex_unit(n)), preserves_form(realify(diag(j))), complex_trace_free()});
  std::vector<Matrix> hs;
  for (int k = 0; k < q; ++k)
    hs.push_back(realify(unit_matrix(n, k, p + k) + unit_matrix(n, p + k, k)));
  return from_matrices("su", {p, q}, span, 2 * n, hs, n * n - 1);
}

/// sp(2n,R) = { R : R^T Omega + Omega R = 0 }.
inline Realization build_sp(int nn) {
  if (nn < 1) throw ContractError("sp(2n,R) needs n >= 1");
  using namespace detail;
  const std::size_t n = static_cast<std::size_t>(nn);
  Matrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega(i, n + i) = 1;
    omega(n + i, i) = -1;
  }
  auto span = solve_matrix_constraints(2 * n, {preserves_form(omega)});
  std::vector<Matrix> hs;
  for (std::size_t k = 0; k < n; ++k) hs.push_back(unit_matrix(2 * n, k, k) - unit_matrix(2 * n, n + k, n + k));
  return from_matrices("sp", {nn}, span, 2 * n, hs, n * (2 * n + 1));
}

/// so*(2n) = u(n,n) ∩ { Z = J Zbar J^{-1} }, J = [[0,I],[-I,0]], n >= 3.
inline Realization build_sostar(int nn) {
  if (nn < 3) throw ContractError("so*(2n) needs n >= 3");
  using namespace detail;
  const std::size_t n = static_cast<std::size_t>(nn), N = 2 * n;
  std::vector<long> j;
  for (std::size_t i = 0; i < N; ++i) j.push_back(i < n ? 1 : -1);
  Matrix jn(N, N);
  for (std::size_t i = 0; i < n; ++i) {
    jn(i, n + i) = 1;
    jn(n + i, i) = -1;
  }
  Matrix antilinear = realify(jn) * conj_sign(N);
  auto span = solve_matrix_constraints(
      2 * N, {commutes_with(complex_unit(N)), preserves_form(realify(diag(j))), commutes_with(antilinear)});
  std::vector<Matrix> hs;
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    Matrix b = unit_matrix(n, 2 * k, 2 * k + 1) - unit_matrix(n, 2 * k + 1, 2 * k);
    Matrix z(N, N);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        z(a, n + c) = b(a, c);
        z(n + a, c) = -b(a, c);
      }
    hs.push_back(realify(z));
  }
  return from_matrices("sostar", {nn}, span, 2 * N, hs, n * (2 * n - 1));
}

/// so(2,n) = { R : R^T J + J R = 0 }, J = diag(1,1,-1,...,-1), n >= 1, n != 2.
inline Realization build_so2(int nn) {
  if (nn < 1 || nn == 2) throw ContractError("so(2,n) needs n >= 1 and n != 2");
  using namespace detail;
  const std::size_t n = static_cast<std::size_t>(nn), N = n + 2;
  std::vector<long> j{1, 1};
  for (std::size_t i = 0; i < n; ++i) j.push_back(-1);
  auto span = solve_matrix_constraints(N, {preserves_form(diag(j))});
  Matrix a1 = unit_matrix(N, 0, 2) + unit_matrix(N, 2, 0);
  std::vector<Matrix> hs;
  if (n == 1) {
    hs.push_back(Scalar(2) * a1);
  } else {
    Matrix a2 = unit_matrix(N, 1, 3) + unit_matrix(N, 3, 1);
    hs.push_back(a1 + a2);
    hs.push_back(a1 - a2);
  }
  return from_matrices("so2", {nn}, span, N, hs, N * (N - 1) / 2);
}

/// Parses "su:p,q", "sp:n", "sostar:n", "so2:n".
inline std::pair<std::string, std::vector<int>> parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ContractError("bad algebra spec '" + spec + "' (expected family:params)");
  std::string fam = spec.substr(0, colon);
  std::vector<int> ps;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ContractError("bad parameter '" + item + "' at position " + std::to_string(colon + 1) + " in '" + spec + "'");
    ps.push_back(v);
  }
  return {fam, ps};
}

inline Realization build(const std::string& fam, const std::vector<int>& ps) {
  auto need = [&](std::size_t k) {
    if (ps.size() != k) throw ContractError(fam + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (fam == "su") {
    need(2);
    return build_su(ps[0], ps[1]);
  }
  if (fam == "sp") {
    need(1);
    return build_sp(ps[0]);
  }
  if (fam == "sostar") {
    need(1);
    return build_sostar(ps[0]);
  }
  if (fam == "so2") {
    need(1);
    return build_so2(ps[0]);
  }
  throw ContractError("unknown family '" + fam + "'");
}

inline Realization build(const std::string& spec) {
  auto [fam, ps] = parse_family_spec(spec);
  return build(fam, ps);
}

// ---------------------------------------------------------------- Weyl group and flips

struct SignedPermutation {
  std::vector<std::size_t> perm;  // output slot i takes input perm[i]
  std::vector<int> sign;          // multiplied into that input
};

inline std::pair<Vec, SignedPermutation> weyl_normalize(const Vec& coords) {
  const std::size_t n = coords.size();
  SignedPermutation sp;
  sp.perm.resize(n);
  std::iota(sp.perm.begin(), sp.perm.end(), 0);
  std::stable_sort(sp.perm.begin(), sp.perm.end(),
                   [&](std::size_t a, std::size_t b) { return abs(coords[a]) > abs(coords[b]); });
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& c = coords[sp.perm[i]];
    sp.sign.push_back(sgn(c) < 0 ? -1 : 1);
    out[i] = abs(c);
  }
  return {out, sp};
}

inline bool is_half_odd(const Scalar& q) { return q.get_den() == 2; }

inline bool is_integral_hyperbolic(const Realization& r, const Vec& lambda) {
  for (const auto& v : r.spectrum(lambda))
    if (v.get_den() != 1) return false;
  return true;
}

/// Criterion: tube type and every coordinate in Z + 1/2.
inline bool flips_wmin(const Realization& r, const Vec& lambda) {
  if (!r.tube()) return false;
  for (const auto& c : lambda)
    if (!is_half_odd(c)) return false;
  return true;
}

/// exp(i pi ad h) for integral h, as the map (-1)^alpha(h) on root spaces.
inline Matrix exp_i_pi_ad(const Realization& r, const Vec& lambda) {
  if (!is_integral_hyperbolic(r, lambda)) throw ContractError("exp_i_pi_ad: element is not integral hyperbolic");
  const std::size_t n = r.dim();
  std::vector<Vec> cols, imgs;
  for (const auto& [key, s] : r.roots) {
    Scalar v = 0;
    for (std::size_t i = 0; i < key.size(); ++i) v += key[i] * lambda[i];
    mpz_class vi = v.get_num();
    bool odd = mpz_odd_p(vi.get_mpz_t());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      cols.push_back(s.vector(i));
      imgs.push_back(odd ? scale(s.vector(i), -1) : s.vector(i));
    }
  }
  return Matrix::from_columns(imgs, n) * inverse(Matrix::from_columns(cols, n));
}

/// Direct test of tau(H0) = -H0 for tau = exp(i pi ad h).
inline bool flips_by_exp(const Realization& r, const Vec& lambda) {
  if (!is_integral_hyperbolic(r, lambda)) return false;
  Matrix t = exp_i_pi_ad(r, lambda);
  return t.apply(r.H0) == scale(r.H0, -1);
}

inline Vec half_spectrum_representative(const Vec& lambda) {
  Vec out;
  for (const auto& c : lambda) {
    if (!is_half_odd(c)) throw ContractError("half_spectrum_representative: coordinate " + to_string(c) + " not in Z+1/2");
    mpz_class k = Scalar(c - rat(1, 2)).get_num();
    out.push_back(mpz_even_p(k.get_mpz_t()) ? rat(1, 2) : rat(-1, 2));
  }
  return out;
}

// ---------------------------------------------------------------- involutions

struct InvolutionRecord {
  std::string key;           // cli selector: cayley, split, nonsplit, split-q<k>
  std::string cls;           // cayley | split | nonsplit
  std::string fixed_label;   // expected isomorphism type of g^tau
  Matrix phi;
  std::size_t fixed_dim = 0;
  std::size_t fixed_rank = 0;
  std::vector<Vec> a_h;      // basis of a^tau in lambda-coordinates (one row per basis element)
  bool commutes_with_theta = false;

  Vec lambda_of(const Vec& kappa) const {
    if (kappa.size() != a_h.size())
      throw ContractError("h has " + std::to_string(kappa.size()) + " coordinates, expected " + std::to_string(a_h.size()));
    Vec out = zero_vec(a_h.empty() ? 0 : a_h[0].size());
    for (std::size_t i = 0; i < a_h.size(); ++i) axpy(out, kappa[i], a_h[i]);
    return out;
  }
};

/// Cayley involution exp(i pi ad H), H = 1/2 sum H_k; tube type only.
inline Matrix cayley_involution(const Realization& r) {
  if (!r.tube()) throw ContractError(r.name + " is not of tube type: no Cayley type involution");
  Vec half(r.rank(), rat(1, 2));
  const std::size_t n = r.dim();
  // spectrum of ad H is {-1,0,1}: exp(i pi ad H) = id - 2 ad(H)^2
  Matrix a = r.g->ad(r.a_element(half));
  return Matrix::identity(n) - Scalar(2) * (a * a);
}

namespace detail {

struct FixedExpectation {
  std::string label;
  std::size_t dim;
  std::size_t rank;
};

inline InvolutionRecord make_record(const Realization& r, std::string key, std::string cls, Matrix phi,
                                    const FixedExpectation& ex) {
  const LieAlgebra& g = *r.g;
  const std::size_t n = g.dim();
  InvolutionRecord rec;
  rec.key = std::move(key);
  rec.cls = std::move(cls);
  rec.fixed_label = ex.label;
  rec.phi = std::move(phi);
  if (!is_involutive_automorphism(g, {rec.phi})) throw ContractError(r.name + "/" + rec.key + ": not an involutive automorphism");
  if (rec.phi.apply(r.H0) != scale(r.H0, -1)) throw ContractError(r.name + "/" + rec.key + ": does not flip H0");
  rec.commutes_with_theta = rec.phi * r.theta() == r.theta() * rec.phi;
  if (!rec.commutes_with_theta) throw ContractError(r.name + "/" + rec.key + ": does not commute with theta");
  Subspace fixed = eigen_within(rec.phi, Subspace::full(n), 1);
  rec.fixed_dim = fixed.dim();
  // tau on a, in lambda coordinates
  const std::size_t rk = r.rank();
  Subspace a = Subspace::span_of(r.H, n);
  Matrix ta(rk, rk);
  for (std::size_t j = 0; j < rk; ++j) {
    Vec img = rec.phi.apply(r.H[j]);
    if (!a.contains(img)) throw ContractError(r.name + "/" + rec.key + ": tau does not preserve a");
    // coroots are a basis of a; solve img = sum c_i H_i
    Matrix sys = Matrix::from_columns(r.H, n);
    Matrix aug(n, rk + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < rk; ++c) aug(i, c) = sys(i, c);
      aug(i, rk) = -img[i];
    }
    Subspace ker = kernel(aug);
    Vec sol = ker.vector(0);
    for (std::size_t i = 0; i < rk; ++i) ta(i, j) = sol[i] / sol[rk];
  }
  Subspace ah = eigenspace(ta, 1);
  rec.a_h = ah.vectors();
  rec.fixed_rank = rec.a_h.size();
  // a^tau must be maximal abelian in h ∩ p
  Subspace hp = intersect(fixed, r.p);
  std::vector<Vec> ahv;
  for (const auto& l : rec.a_h) ahv.push_back(r.a_element(l));
  Subspace cen = ahv.empty() ? hp : centralizer_in(g, hp, Subspace::span_of(ahv, n));
  if (cen.dim() != rec.a_h.size())
    throw ContractError(r.name + "/" + rec.key + ": a^tau is not maximal abelian in h∩p");
  if (rec.fixed_dim != ex.dim || rec.fixed_rank != ex.rank)
    throw ContractError(r.name + "/" + rec.key + ": fixed algebra has dim " + std::to_string(rec.fixed_dim) + ", rank " +
                        std::to_string(rec.fixed_rank) + "; expected " + ex.label + " with dim " +
                        std::to_string(ex.dim) + ", rank " + std::to_string(ex.rank));
  return rec;
}

/// For tube type, writes a direct involution f as tau_H composed with the extension of sigma = (tau_H f)|_V,
/// and checks the product reproduces f.
inline void check_jordan_factorization(const Realization& r, const Matrix& cay, const Matrix& f) {
  Vec half(r.rank(), rat(1, 2));
  Grading gr = grading_of(*r.g, r.a_element(half));
  Matrix sigma = cay * f;
  Matrix ext = extend_from_degree_one(*r.g, gr, r.theta(), sigma);
  if (!(cay * ext == f)) throw ContractError(r.name + ": involution is not tau_H composed with a Jordan extension");
}

}  // namespace detail

inline std::vector<InvolutionRecord> standard_involutions(const Realization& r) {
  using namespace detail;
  std::vector<InvolutionRecord> out;
  const int p = r.params.empty() ? 0 : r.params.at(0);
  std::optional<Matrix> cay;
  if (r.tube()) cay = cayley_involution(r);
  auto add_direct = [&](std::string key, std::string cls, const std::function<Matrix(const Matrix&)>& f,
                        FixedExpectation ex) {
    Matrix phi = r.model->linear_map(f);
    if (cay) check_jordan_factorization(r, *cay, phi);
    out.push_back(make_record(r, std::move(key), std::move(cls), std::move(phi), ex));
  };
  auto sz = [](long v) { return static_cast<std::size_t>(v); };
  if (r.family == "su") {
    const int q = r.params.at(1);
    const std::size_t n = static_cast<std::size_t>(p + q);
    if (cay)
      out.push_back(make_record(r, "cayley", "cayley", *cay,
                                {"sl(" + std::to_string(p) + ",C)xR", sz(2 * (p * p - 1) + 1), sz(p)}));
    Matrix d = conj_sign(n);
    add_direct("split", "split", [d](const Matrix& x) { return d * x * d; },
               {"so(" + std::to_string(p) + "," + std::to_string(q) + ")", sz((p + q) * (p + q - 1) / 2), sz(q)});
    if (p % 2 == 0 && q % 2 == 0) {
      Matrix jq(n, n);
      for (std::size_t i = 0; i + 1 < n; i += 2) {
        jq(i + 1, i) = 1;
        jq(i, i + 1) = -1;
      }
      Matrix jr = realify(jq), jinv = inverse(jr);
      const int a = p / 2, b = q / 2;
      add_direct("nonsplit", "nonsplit", [=](const Matrix& x) { return jr * (d * x * d) * jinv; },
                 {"sp(" + std::to_string(a) + "," + std::to_string(b) + ")", sz((a + b) * (2 * (a + b) + 1)), sz(b)});
    }
  } else if (r.family == "sp") {
    const std::size_t n = static_cast<std::size_t>(p);
    out.push_back(make_record(r, "cayley", "cayley", *cay, {"sl(" + std::to_string(p) + ",R)xR", sz(p * p), sz(p)}));
    if (p % 2 == 0) {
      Matrix gm(2 * n, 2 * n);
      for (std::size_t i = 0; i + 1 < n; i += 2) {
        gm(i + 1, i) = 1;
        gm(i, i + 1) = -1;
        gm(n + i + 1, n + i) = -1;
        gm(n + i, n + i + 1) = 1;
      }
      Matrix ginv = inverse(gm);
      const int h = p / 2;
      add_direct("nonsplit", "nonsplit", [=](const Matrix& x) { return gm * x * ginv; },
                 {"sp(" + std::to_string(p) + ",C)", sz(2 * h * (2 * h + 1)), sz(h)});
    }
  } else if (r.family == "sostar") {
    if (cay)
      out.push_back(make_record(r, "cayley", "cayley", *cay,
                                {"su*(" + std::to_string(p) + ")xR", sz(p * p), sz(p / 2)}));
    Matrix d = conj_sign(static_cast<std::size_t>(2 * p));
    add_direct("split", "split", [d](const Matrix& x) { return d * x * d; },
               {"so(" + std::to_string(p) + ",C)", sz(p * (p - 1)), sz(p / 2)});
  } else if (r.family == "kkt") {
    // fixed algebra of the Cayley involution is the structure algebra g_0(H)
    Vec half(r.rank(), rat(1, 2));
    out.push_back(make_record(r, "cayley", "cayley", *cay, {"str(V)", r.level(half, 0).dim(), r.rank()}));
  } else if (r.family == "so2") {
    const std::size_t N = static_cast<std::size_t>(p + 2);
    out.push_back(make_record(r, "cayley", "cayley", *cay,
                              {"so(1,1)xso(1," + std::to_string(p - 1) + ")", sz(1 + p * (p - 1) / 2),
                               sz(p == 1 ? 1 : 2)}));
    for (int a = 1; 2 * a <= p - 2; ++a) {
      const int b = p - 2 - a;
      std::vector<long> dv{1, -1, 1, -1};
      for (int i = 0; i < a; ++i) dv.push_back(1);
      for (int i = 0; i < b; ++i) dv.push_back(-1);
      Matrix dm = diag(dv);
      add_direct("split-q" + std::to_string(a + 1), "split", [dm](const Matrix& x) { return dm * x * dm; },
                 {"so(" + std::to_string(a + 1) + ",1)xso(1," + std::to_string(b + 1) + ")",
                  sz((a + 2) * (a + 1) / 2 + (b + 2) * (b + 1) / 2), 2});
    }
    if (p >= 3) {
      std::vector<long> dv(N, 1);
      dv[1] = -1;
      Matrix dm = diag(dv);
      add_direct("nonsplit", "nonsplit", [dm](const Matrix& x) { return dm * x * dm; },
                 {"so(1," + std::to_string(p) + ")", sz((p + 1) * p / 2), 1});
    }
  }
  return out;
}

inline const InvolutionRecord& select_involution(const std::vector<InvolutionRecord>& recs, const std::string& sel) {
  for (const auto& r : recs)
    if (r.key == sel || r.fixed_label == sel) return r;
  std::size_t used = 0;
  std::size_t idx = 0;
  try {
    idx = std::stoul(sel, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == sel.size() && used > 0 && idx < recs.size()) return recs[idx];
  std::string known;
  for (const auto& r : recs) known += (known.empty() ? "" : ", ") + r.key;
  throw ContractError("unknown involution '" + sel + "' (available: " + known + ")");
}

}  // namespace liewedge
