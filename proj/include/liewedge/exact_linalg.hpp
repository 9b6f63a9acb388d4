#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liewedge {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class ContractError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Scalar rat(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a", "-a/b" into a canonical rational.
inline Scalar parse_rational(const std::string& text) {
  Scalar q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ContractError("bad rational '" + text + "'");
  if (q.get_den() == 0) throw ContractError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

inline void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec scale(Vec a, const Scalar& s) {
  for (auto& x : a) x *= s;
  return a;
}

inline Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Scalar(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols) throw ContractError("ragged matrix literal");
      for (long x : row) a.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rs, std::size_t ncols) {
    Matrix m(rs.size(), ncols);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].size() != ncols) throw ContractError("row length mismatch");
      for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& cs, std::size_t nrows) {
    Matrix m(nrows, cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cs[j][i];
    return m;
  }

  Scalar& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  Vec col(std::size_t j) const {
    Vec v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_square() const { return rows == cols; }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols) throw ContractError("matrix-vector size mismatch");
    Vec out = zero_vec(rows);
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(v[j]) == 0) continue;
      for (std::size_t i = 0; i < rows; ++i)
        if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = i + 1; j < cols; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw ContractError("matrix product size mismatch");
  Matrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Scalar& xik = x(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (sgn(y(k, j)) != 0) z(i, j) += xik * y(k, j);
    }
  return z;
}

inline Matrix operator+(Matrix x, const Matrix& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
  return x;
}

inline Matrix operator-(Matrix x, const Matrix& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
  return x;
}

inline Matrix operator*(const Scalar& s, Matrix x) {
  for (auto& v : x.a) v *= s;
  return x;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref_inplace(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Scalar f;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline Matrix rref(Matrix m) {
  rref_inplace(m);
  return m;
}

inline std::size_t rank(Matrix m) { return rref_inplace(m).size(); }

/// Row space in canonical reduced echelon form.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return span_of(Matrix::identity(n)); }

  static Subspace span_of(Matrix m) {
    Subspace s(m.cols);
    auto piv = rref_inplace(m);
    s.pivots_ = piv;
    s.basis_ = Matrix(piv.size(), m.cols);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < m.cols; ++j) s.basis_(i, j) = m(i, j);
    return s;
  }

  static Subspace span_of(const std::vector<Vec>& vs, std::size_t ambient) {
    return span_of(Matrix::from_rows(vs, ambient));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Coordinates relative to the echelon basis; caller must ensure membership.
  Vec coords(const Vec& v) const {
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Vec from_coords(const Vec& c) const {
    Vec v = zero_vec(ambient_);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(c[i]) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) v[j] += c[i] * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw ContractError("ambient dimension mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) r[j] -= c * basis_(i, j);
    }
    return is_zero(r);
  }

  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& x, const Subspace& y) {
  auto vs = x.vectors();
  auto ws = y.vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return Subspace::span_of(Matrix::from_rows(vs, x.ambient_dim()));
}

/// Inverse of a square matrix; throws when singular.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ContractError("inverse: matrix not square");
  const std::size_t n = m.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref_inplace(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw ContractError("inverse: matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

/// Rational square root when it exists.
inline std::optional<Scalar> rational_sqrt(const Scalar& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return Scalar(rn, rd);
}

/// Right kernel {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto piv = rref_inplace(r);
  std::vector<bool> is_piv(m.cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = zero_vec(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Subspace::zero(m.cols);
  return Subspace::span_of(basis, m.cols);
}

inline Subspace intersect(const Subspace& x, const Subspace& y) {
  // Solve a·X = b·Y.
  const std::size_t n = x.ambient_dim();
  if (x.dim() == 0 || y.dim() == 0) return Subspace::zero(n);
  Matrix sys(n, x.dim() + y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) sys(j, i) = x.basis()(i, j);
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) sys(j, x.dim() + i) = -y.basis()(i, j);
  Subspace k = kernel(sys);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec kv = k.vector(i);
    Vec c(kv.begin(), kv.begin() + static_cast<long>(x.dim()));
    out.push_back(x.from_coords(c));
  }
  if (out.empty()) return Subspace::zero(n);
  return Subspace::span_of(out, n);
}

/// Matrix of the restriction of m to an m-invariant subspace, in echelon coordinates.
inline Matrix restrict_to(const Matrix& m, const Subspace& s) {
  Matrix r(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vec img = m.apply(s.vector(j));
    if (!s.contains(img)) throw ContractError("subspace is not invariant");
    Vec c = s.coords(img);
    for (std::size_t i = 0; i < s.dim(); ++i) r(i, j) = c[i];
  }
  return r;
}

inline Subspace eigenspace(const Matrix& m, const Scalar& lambda) {
  if (!m.is_square()) throw ContractError("eigenspace needs a square matrix");
  Matrix d = m;
  for (std::size_t i = 0; i < m.rows; ++i) d(i, i) -= lambda;
  return kernel(d);
}

/// Characteristic polynomial det(xI - m), coefficients low to high, via Hessenberg reduction.
inline std::vector<Scalar> charpoly(Matrix h) {
  const std::size_t n = h.rows;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (std::size_t k = m + 1; k < n; ++k) {
      if (sgn(h(k, m - 1)) == 0) continue;
      Scalar u = h(k, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(h(m, j)) != 0) h(k, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(h(j, k)) != 0) h(j, m) += u * h(j, k);
    }
  }
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Scalar> cur(m + 1, Scalar(0));
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Scalar t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (sgn(t) == 0) break;
      Scalar coef = h(i - 1, m - 1) * t;
      if (sgn(coef) != 0)
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] -= coef * p[i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

inline Scalar poly_eval(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Rational eigenvalues of m (sorted ascending, distinct).
inline std::vector<Scalar> rational_eigenvalues(const Matrix& m) {
  if (m.rows == 0) return {};
  mpz_class d = 1;
  for (const auto& x : m.a) d = lcm(d, x.get_den());
  Matrix s = Scalar(d) * m;
  mpz_class bound = 0;
  for (std::size_t i = 0; i < s.rows; ++i) {
    mpz_class rs = 0;
    for (std::size_t j = 0; j < s.cols; ++j) rs += abs(s(i, j).get_num());
    bound = std::max(bound, rs);
  }
  auto cp = charpoly(s);
  std::size_t low = 0;
  while (low < cp.size() && sgn(cp[low]) == 0) ++low;
  std::vector<Scalar> roots;
  if (low > 0) roots.push_back(0);
  std::vector<Scalar> reduced(cp.begin() + static_cast<long>(low), cp.end());
  for (mpz_class r = -bound; r <= bound; ++r) {
    if (r == 0) continue;
    if (sgn(poly_eval(reduced, Scalar(r))) == 0) roots.push_back(Scalar(r) / Scalar(d));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// LDLᵀ with symmetric pivoting; zero pivots require a zero row.
inline bool is_psd_symmetric(Matrix m) {
  if (!m.is_symmetric()) throw ContractError("is_psd_symmetric: matrix is not symmetric");
  const std::size_t n = m.rows;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(m(i, i)) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && sgn(m(i, j)) != 0) return false;
      return true;
    }
    if (sgn(m(p, p)) < 0) return false;
    done[p] = true;
    Scalar inv = 1 / m(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(m(i, p)) == 0) continue;
      Scalar f = m(i, p) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && sgn(m(p, j)) != 0) m(i, j) -= f * m(p, j);
    }
  }
  return true;
}

inline bool is_pd_symmetric(const Matrix& m) {
  if (!is_psd_symmetric(m)) return false;
  return rank(m) == m.rows;
}

using EigenKey = std::vector<Scalar>;

/// Joint eigenspace decomposition of a commuting family acting on column vectors.
inline std::map<EigenKey, Subspace> simultaneous_eigenspaces(const std::vector<Matrix>& ms, std::size_t ambient) {
  for (const auto& m : ms)
    if (m.rows != ambient || m.cols != ambient) throw ContractError("simultaneous_eigenspaces: size mismatch");
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!(ms[i] * ms[j] == ms[j] * ms[i]))
        throw ContractError("simultaneous_eigenspaces: matrices " + std::to_string(i) + " and " +
                            std::to_string(j) + " do not commute");
  std::map<EigenKey, Subspace> parts;
  parts[{}] = Subspace::full(ambient);
  for (const auto& m : ms) {
    std::map<EigenKey, Subspace> next;
    for (const auto& [key, s] : parts) {
      Matrix r = restrict_to(m, s);
      std::size_t got = 0;
      for (const auto& lam : rational_eigenvalues(r)) {
        Subspace e = eigenspace(r, lam);
        got += e.dim();
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < e.dim(); ++i) vs.push_back(s.from_coords(e.vector(i)));
        EigenKey k = key;
        k.push_back(lam);
        next[k] = Subspace::span_of(vs, ambient);
      }
      if (got != s.dim())
        throw ContractError("simultaneous_eigenspaces: residual dimension " + std::to_string(s.dim() - got) +
                            " not decomposed over the rationals");
    }
    parts = std::move(next);
  }
  return parts;
}

/// Sparse vector as sorted (index, value) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

inline SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

inline Vec to_dense(const SparseVec& s, std::size_t n) {
  Vec v = zero_vec(n);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

/// Incremental fully-reduced echelon form over sparse rows.
class Echelon {
public:
  explicit Echelon(std::size_t n) : n_(n), pivot_row_(n, -1) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when v was independent of the rows so far.
  bool add(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    const std::uint32_t p = v.front().first;
    Scalar inv = 1 / v.front().second;
    for (auto& e : v) e.second *= inv;
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), p,
                                 [](const auto& e, std::uint32_t k) { return e.first < k; });
      if (it == row.end() || it->first != p) continue;
      Scalar f = it->second;
      row = axpy_sparse(row, -f, v);
    }
    pivot_row_[p] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool add(const Vec& v) { return add(to_sparse(v)); }

  bool contains(SparseVec v) const {
    reduce(v);
    return v.empty();
  }

  void reduce(SparseVec& v) const {
    // Rows are fully reduced, so one pass over the pivot entries of v suffices.
    std::vector<std::pair<std::uint32_t, Scalar>> hits;
    for (const auto& e : v)
      if (pivot_row_[e.first] >= 0) hits.push_back(e);
    for (const auto& [col, f] : hits)
      v = axpy_sparse(v, -f, rows_[static_cast<std::size_t>(pivot_row_[col])]);
  }

  Subspace subspace() const {
    std::vector<Vec> vs;
    for (const auto& r : rows_) vs.push_back(to_dense(r, n_));
    if (vs.empty()) return Subspace::zero(n_);
    return Subspace::span_of(vs, n_);
  }

  /// Kernel of the row system, i.e. {x : row·x = 0 for every row}.
  std::vector<Vec> kernel_basis() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      Vec v = zero_vec(n_);
      v[f] = 1;
      for (const auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), static_cast<std::uint32_t>(f),
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  static SparseVec axpy_sparse(const SparseVec& x, const Scalar& a, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, a * y[j].second);
        ++j;
      } else {
        Scalar s = x[i].second + a * y[j].second;
        if (sgn(s) != 0) out.emplace_back(x[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

private:
  std::size_t n_;
  std::vector<long> pivot_row_;
  std::vector<SparseVec> rows_;
};

}  // namespace liewedge
