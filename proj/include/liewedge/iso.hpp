#pragma once

#include <regex>

#include "realizations.hpp"

namespace liewedge {

/// Isomorphism type of a simple Lie algebra. Family tags:
///   su [p,q], sp_R [2n], so_star [n], so [p,q], sl_R [2], e7 [], sp [p,q], so_C [n],
///   unidentified [dim, rank, long, middle, short].
struct IsoType {
  std::string family;
  std::vector<int> params;

  bool operator==(const IsoType&) const = default;
  auto operator<=>(const IsoType&) const = default;
};

/// Direct sum of simple types; empty means the zero algebra.
using IsoSum = std::vector<IsoType>;

inline std::string iso_label(const IsoType& t) {
  auto p = [&](std::size_t i) { return std::to_string(t.params.at(i)); };
  if (t.family == "su") return "su(" + p(0) + "," + p(1) + ")";
  if (t.family == "sp_R") return "sp(" + p(0) + ",R)";
  if (t.family == "so_star") return "so*(" + p(0) + ")";
  if (t.family == "so") return "so(" + p(0) + "," + p(1) + ")";
  if (t.family == "sl_R") return "sl(" + p(0) + ",R)";
  if (t.family == "e7") return "e7(-25)";
  if (t.family == "sp") return "sp(" + p(0) + "," + p(1) + ")";
  if (t.family == "so_C") return "so(" + p(0) + ",C)";
  std::string s = t.family + "(";
  for (std::size_t i = 0; i < t.params.size(); ++i) s += (i ? "," : "") + p(i);
  return s + ")";
}

inline std::size_t iso_dim(const IsoType& t) {
  auto p = [&](std::size_t i) { return static_cast<std::size_t>(t.params.at(i)); };
  if (t.family == "su") return (p(0) + p(1)) * (p(0) + p(1)) - 1;
  if (t.family == "sp_R") return p(0) * (p(0) + 1) / 2;
  if (t.family == "so_star" || t.family == "so") {
    const std::size_t n = t.family == "so" ? p(0) + p(1) : p(0);
    return n * (n - 1) / 2;
  }
  if (t.family == "sl_R") return p(0) * p(0) - 1;
  if (t.family == "e7") return 133;
  if (t.family == "sp") return (p(0) + p(1)) * (2 * (p(0) + p(1)) + 1);
  if (t.family == "so_C") return p(0) * (p(0) - 1);
  if (t.family == "unidentified") return p(0);
  throw ContractError("iso_dim: unknown family '" + t.family + "'");
}

/// Low-rank coincidences mapped to one name: sl(2,R) = su(1,1) = sp(2,R) = so(2,1), sp(4,R) = so(2,3),
/// su(2,2) = so(2,4), so*(8) = so(2,6), so*(6) = su(3,1).
inline IsoType canonical(IsoType t) {
  auto& p = t.params;
  if (t.family == "su" || t.family == "sp") {
    if (p.at(0) < p.at(1)) std::swap(p[0], p[1]);
  }
  if (t.family == "so" && p.at(0) > p.at(1)) std::swap(p[0], p[1]);
  if ((t.family == "su" && p == std::vector<int>{1, 1}) || (t.family == "sp_R" && p == std::vector<int>{2}) ||
      (t.family == "so" && p == std::vector<int>{1, 2}))
    return {"sl_R", {2}};
  if (t.family == "so" && p == std::vector<int>{2, 3}) return {"sp_R", {4}};
  if (t.family == "so" && p == std::vector<int>{2, 4}) return {"su", {2, 2}};
  if (t.family == "so" && p == std::vector<int>{2, 6}) return {"so_star", {8}};
  if (t.family == "so_star" && p == std::vector<int>{6}) return {"su", {3, 1}};
  return t;
}

inline IsoSum canonical(IsoSum s) {
  for (auto& t : s) t = canonical(t);
  std::sort(s.begin(), s.end(), [](const IsoType& a, const IsoType& b) {
    std::size_t da = iso_dim(a), db = iso_dim(b);
    if (da != db) return da > db;
    return iso_label(a) < iso_label(b);
  });
  return s;
}

inline std::string iso_label(const IsoSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s) out += (out.empty() ? "" : "+") + iso_label(t);
  return out;
}

inline bool is_identified(const IsoSum& s) {
  for (const auto& t : s)
    if (t.family == "unidentified") return false;
  return true;
}

/// Parses labels such as "su(2,2)", "sp(4,R)", "so*(8)", "so(2,10)", "sl(2,R)", "e7(-25)", "sp(1,1)",
/// "so(4,C)", sums joined by '+', and "0".
inline IsoSum parse_iso(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "0") return {};
  IsoSum out;
  static const std::regex item(R"(^(su|so\*|so|sp|sl|e7)\((-?\d+)(?:,(\d+|R|C))?\)$)");
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    std::string part = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw ContractError("cannot parse Lie algebra label '" + part + "'");
    const std::string fam = m[1];
    const int a = std::stoi(m[2]);
    const std::string second = m[3];
    IsoType t;
    if (fam == "e7") {
      if (a != -25 || !second.empty()) throw ContractError("only e7(-25) is supported");
      t = {"e7", {}};
    } else if (fam == "so*") {
      if (!second.empty()) throw ContractError("bad label '" + part + "'");
      t = {"so_star", {a}};
    } else if (second == "R") {
      if (fam == "sp") t = {"sp_R", {a}};
      else if (fam == "sl") t = {"sl_R", {a}};
      else throw ContractError("bad label '" + part + "'");
    } else if (second == "C") {
      if (fam != "so") throw ContractError("bad label '" + part + "'");
      t = {"so_C", {a}};
    } else {
      if (second.empty() || fam == "sl") throw ContractError("bad label '" + part + "'");
      t = {fam, {a, std::stoi(second)}};
    }
    out.push_back(t);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return canonical(out);
}

// ---------------------------------------------------------------- identification

struct IdealInvariants {
  std::size_t dim = 0, rank = 0, long_mult = 0, middle_mult = 0, short_mult = 0;
  Subspace space;
};

/// Hermitian simple type from restricted root data; nullopt when nothing in the catalog matches.
inline std::optional<IsoType> hermitian_catalog(std::size_t r, std::size_t mm, std::size_t ms) {
  const int ri = static_cast<int>(r);
  if (r == 1) {
    if (ms == 0) return IsoType{"sl_R", {2}};
    if (ms % 2 == 0) return canonical(IsoType{"su", {1 + static_cast<int>(ms / 2), 1}});
    return std::nullopt;
  }
  if (ms == 0) {
    if (mm == 1) return canonical(IsoType{"sp_R", {2 * ri}});
    if (mm == 2) return canonical(IsoType{"su", {ri, ri}});
    if (mm == 4) return canonical(IsoType{"so_star", {4 * ri}});
    if (r == 3 && mm == 8) return IsoType{"e7", {}};
    if (r == 2) return canonical(IsoType{"so", {2, static_cast<int>(mm) + 2}});
    return std::nullopt;
  }
  if (mm == 2 && ms % 2 == 0) return canonical(IsoType{"su", {ri + static_cast<int>(ms / 2), ri}});
  if (mm == 4 && ms == 4) return IsoType{"so_star", {4 * ri + 2}};
  return std::nullopt;
}

namespace detail {

inline IsoType unidentified(const IdealInvariants& inv) {
  auto i = [](std::size_t v) { return static_cast<int>(v); };
  return {"unidentified", {i(inv.dim), i(inv.rank), i(inv.long_mult), i(inv.middle_mult), i(inv.short_mult)}};
}

/// Restricted roots of the ideal with respect to a_I = I ∩ a, lengths from the ambient Killing form.
inline IsoType identify_ideal(const Realization& r, const Subspace& ideal, IdealInvariants& inv) {
  const LieAlgebra& g = *r.g;
  const std::size_t n = g.dim();
  inv.dim = ideal.dim();
  inv.space = ideal;
  Subspace a_all = Subspace::span_of(r.H, n);
  Subspace a = intersect(ideal, a_all);
  inv.rank = a.dim();
  if (a.dim() == 0) return unidentified(inv);
  // a must be maximal abelian in ideal ∩ p
  Subspace ip = intersect(ideal, r.p);
  if (centralizer_in(g, ip, a).dim() != a.dim()) return unidentified(inv);
  auto av = a.vectors();
  std::vector<Matrix> ads;
  for (const auto& x : av) ads.push_back(restrict_to(g.ad(x), ideal));
  auto spaces = simultaneous_eigenspaces(ads, ideal.dim());
  Matrix gram(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) gram(i, j) = g.killing(av[i], av[j]);
  Matrix ginv = inverse(gram);
  std::map<Scalar, std::vector<std::size_t>> by_len;
  for (const auto& [key, s] : spaces) {
    if (is_zero(key)) continue;
    by_len[dot(key, ginv.apply(key))].push_back(s.dim());
  }
  if (by_len.empty()) return unidentified(inv);
  const Scalar top = by_len.rbegin()->first;
  std::size_t nl = 0, nm = 0, ns = 0;
  for (const auto& [len, mults] : by_len) {
    std::size_t* slot;
    std::size_t* count;
    if (len == top) {
      slot = &inv.long_mult;
      count = &nl;
    } else if (len == top / 2) {
      slot = &inv.middle_mult;
      count = &nm;
    } else if (len == top / 4) {
      slot = &inv.short_mult;
      count = &ns;
    } else {
      return unidentified(inv);
    }
    for (auto m : mults) {
      if (*count > 0 && *slot != m) return unidentified(inv);
      *slot = m;
      ++*count;
    }
  }
  const std::size_t rk = a.dim();
  if (nl != 2 * rk || nm != 2 * rk * (rk - 1) || (ns != 0 && ns != 2 * rk) || inv.long_mult != 1) return unidentified(inv);
  auto t = hermitian_catalog(rk, inv.middle_mult, inv.short_mult);
  if (!t || iso_dim(*t) != ideal.dim()) return unidentified(inv);
  return *t;
}

}  // namespace detail

/// Simple ideals of a semisimple subalgebra spanned by its restricted root vectors: a root vector for
/// sub ∩ a with nonzero root lies in exactly one simple ideal, so each ideal is generated by one of them.
inline std::vector<Subspace> ideals_from_roots(const Realization& r, const Subspace& sub) {
  const LieAlgebra& g = *r.g;
  const std::size_t n = g.dim();
  Subspace a = intersect(sub, Subspace::span_of(r.H, n));
  if (a.dim() == 0) return {sub};
  std::vector<Matrix> ads;
  for (const auto& x : a.vectors()) ads.push_back(restrict_to(g.ad(x), sub));
  auto spaces = simultaneous_eigenspaces(ads, sub.dim());
  std::vector<Vec> root_vectors;
  for (const auto& [key, s] : spaces)
    if (!is_zero(key))
      for (std::size_t i = 0; i < s.dim(); ++i) root_vectors.push_back(sub.from_coords(s.vector(i)));
  std::vector<Subspace> ideals;
  for (const auto& v : root_vectors) {
    bool covered = false;
    for (const auto& i : ideals)
      if (i.contains(v)) covered = true;
    if (covered) continue;
    ideals.push_back(ideal_generated(g, sub, v));
  }
  std::size_t total = 0;
  for (const auto& i : ideals) total += i.dim();
  Subspace all = Subspace::zero(n);
  for (const auto& i : ideals) all = sum(all, i);
  if (total != sub.dim() || all.dim() != sub.dim())
    throw ContractError("ideals_from_roots: root vectors do not generate a direct sum of ideals");
  std::sort(ideals.begin(), ideals.end(), [](const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() > y.dim();
    return x.pivots() < y.pivots();
  });
  return ideals;
}

struct Identification {
  IsoSum iso;
  std::vector<IdealInvariants> ideals;
};

/// Type of a bracket-closed semisimple subspace of a realization, ideal by ideal.
inline Identification identify_iso_type(const Realization& r, const Subspace& sub) {
  Identification out;
  if (sub.dim() == 0) return out;
  if (!is_subalgebra(*r.g, sub)) throw ContractError("identify_iso_type: subspace is not a subalgebra");
  for (const auto& ideal : ideals_from_roots(r, sub)) {
    IdealInvariants inv;
    out.iso.push_back(detail::identify_ideal(r, ideal, inv));
    out.ideals.push_back(std::move(inv));
  }
  out.iso = canonical(out.iso);
  return out;
}

/// Type of a fixed-point algebra of a known kind (so(p,q), sp(p,q) or so(n,C)) from dimension and real rank.
inline std::optional<IsoType> fixed_algebra_type(const std::string& kind, std::size_t dim, std::size_t rank) {
  const int rk = static_cast<int>(rank);
  for (int n = 1; n <= 64; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (kind == "so" && un * (un - 1) / 2 == dim && rk <= n / 2) return IsoType{"so", {rk, n - rk}};
    if (kind == "sp" && un * (2 * un + 1) == dim && rk <= n / 2) return IsoType{"sp", {n - rk, rk}};
    if (kind == "so_C" && un * (un - 1) == dim && rk == n / 2) return IsoType{"so_C", {n}};
  }
  return std::nullopt;
}

/// Kind of a standard involution's fixed algebra from its label: "so(p,q)" -> so, "sp(a,b)" -> sp,
/// "so(n,C)" -> so_C; empty for the others.
inline std::string fixed_kind(const std::string& label) {
  if (std::regex_match(label, std::regex(R"(so\(\d+,\d+\))"))) return "so";
  if (std::regex_match(label, std::regex(R"(sp\(\d+,\d+\))"))) return "sp";
  if (std::regex_match(label, std::regex(R"(so\(\d+,C\))"))) return "so_C";
  return "";
}

}  // namespace liewedge
