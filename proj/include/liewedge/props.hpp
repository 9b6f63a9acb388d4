#pragma once

#include <functional>
#include <random>

#include "kkt.hpp"
#include "wedge.hpp"

namespace liewedge {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0, failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

namespace props {

using Rng = std::mt19937_64;

inline Rng suite_rng(std::uint64_t seed, std::uint64_t suite) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite)};
  return Rng(seq);
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

/// Small rational with denominator 1, 2 or 3.
inline Scalar random_rational(Rng& rng, int range = 3) {
  Scalar q(uniform(rng, -range, range), uniform(rng, 1, 3));
  q.canonicalize();
  return q;
}

inline Vec random_vec(Rng& rng, std::size_t n, int range = 3) {
  Vec v(n);
  for (auto& c : v) c = uniform(rng, 0, 2) == 0 ? Scalar(0) : random_rational(rng, range);
  return v;
}

/// Runs `count` cases; a case returns an empty string on success, a description on failure. Exceptions count as failures.
inline SuiteResult run_cases(const std::string& name, std::size_t count, std::uint64_t seed, std::uint64_t id,
                             const std::function<std::string(Rng&)>& one) {
  SuiteResult res{name};
  Rng rng = suite_rng(seed, id);
  for (std::size_t i = 0; i < count; ++i) {
    std::string err;
    try {
      err = one(rng);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    ++res.cases;
    if (!err.empty() && res.failures++ == 0) res.first_failure = "case " + std::to_string(i) + ": " + err;
  }
  return res;
}

inline const std::vector<std::string>& jordan_specs() {
  static const std::vector<std::string> s{"sym:1",   "sym:2",   "sym:3",  "hermC:1", "hermC:2", "hermC:3",
                                          "hermH:1", "hermH:2", "hermH:3", "mink:1", "mink:3",  "mink:4",
                                          "mink:5",  "hermO3"};
  return s;
}

inline const std::vector<std::string>& tube_specs() {
  static const std::vector<std::string> s{"su:1,1", "su:2,2", "su:3,3", "sp:1",  "sp:2",  "sp:3",
                                          "sp:4",   "sostar:4", "so2:1", "so2:3", "so2:4", "so2:5"};
  return s;
}

inline const std::vector<std::string>& nontube_specs() {
  static const std::vector<std::string> s{"su:2,1", "su:3,1", "su:3,2", "su:4,2", "sostar:3", "sostar:5"};
  return s;
}

/// Jordan algebras with frames: the direct families plus those read off gradings of tube realizations.
inline std::vector<JordanAlgebra> jordan_pool() {
  std::vector<JordanAlgebra> out;
  for (const auto& s : jordan_specs()) out.push_back(build_jordan(s));
  for (const char* s : {"su:2,2", "sp:2", "sostar:4", "so2:5"}) {
    JordanAlgebra v = frame_from_grid(build(s)).v;
    v.label = std::string("g_1 of ") + s;
    out.push_back(std::move(v));
  }
  return out;
}

inline Vec random_element(Rng& rng, const JordanAlgebra& v) { return random_vec(rng, v.n); }

/// Peirce components of x for the decomposition pd, keyed by (i, j) with i <= j.
inline std::map<std::pair<std::size_t, std::size_t>, Vec> peirce_components(const PeirceDecomposition& pd,
                                                                            const Vec& x) {
  const std::size_t n = x.size(), r = pd.frame.size();
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Subspace& b = pd.block(i, j);
      for (std::size_t a = 0; a < b.dim(); ++a) {
        keys.emplace_back(i, j);
        cols.push_back(b.vector(a));
      }
    }
  if (cols.size() != n) throw ContractError("peirce_components: blocks do not span V");
  Vec c = inverse(Matrix::from_columns(cols, n)).apply(x);
  std::map<std::pair<std::size_t, std::size_t>, Vec> out;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) out[{i, j}] = zero_vec(n);
  for (std::size_t a = 0; a < n; ++a) axpy(out[keys[a]], c[a], cols[a]);
  return out;
}

struct Case {
  Realization r;
  std::vector<InvolutionRecord> recs;
};

inline std::vector<Case> involution_pool(const std::vector<std::string>& specs) {
  std::vector<Case> out;
  for (const auto& s : specs) {
    Realization r = build_any(s);
    auto recs = standard_involutions(r);
    out.push_back({std::move(r), std::move(recs)});
  }
  return out;
}

}  // namespace props

// ---------------------------------------------------------------- suites

inline SuiteResult suite_jordan_axioms(std::size_t count, std::uint64_t seed) {
  auto pool = props::jordan_pool();
  for (const auto& v : pool) validate_jordan(v);
  return props::run_cases("jordan-axioms", count, seed, 1, [&](props::Rng& rng) -> std::string {
    const auto& v = props::pick(rng, pool);
    Vec x = props::random_element(rng, v), y = props::random_element(rng, v), z = props::random_element(rng, v);
    if (v.mul(x, y) != v.mul(y, x)) return v.label + ": not commutative";
    Vec x2 = v.square(x);
    if (v.mul(v.mul(x2, y), x) != v.mul(x2, v.mul(y, x))) return v.label + ": Jordan identity";
    if (v.inner(v.mul(x, y), z) != v.inner(x, v.mul(y, z))) return v.label + ": inner product not associative";
    if (v.mul(v.unit, x) != x) return v.label + ": unit";
    return "";
  });
}

inline SuiteResult suite_peirce_rules(std::size_t count, std::uint64_t seed) {
  auto pool = props::jordan_pool();
  std::vector<PeirceDecomposition> pds;
  for (const auto& v : pool) {
    pds.push_back(peirce_frame(v, v.frame));
    if (!peirce_rules_hold(v, pds.back())) throw ContractError(v.label + ": Peirce rules fail on basis pairs");
  }
  return props::run_cases("peirce-rules", count, seed, 2, [&](props::Rng& rng) -> std::string {
    std::size_t idx = static_cast<std::size_t>(props::uniform(rng, 0, static_cast<int>(pool.size()) - 1));
    const auto& v = pool[idx];
    const auto& pd = pds[idx];
    const int r = static_cast<int>(v.frame.size());
    std::size_t i = props::uniform(rng, 0, r - 1), j = props::uniform(rng, 0, r - 1);
    std::size_t k = props::uniform(rng, 0, r - 1), l = props::uniform(rng, 0, r - 1);
    const Subspace &a = pd.block(i, j), &b = pd.block(k, l);
    if (a.dim() == 0 || b.dim() == 0) return "";
    Vec x = a.from_coords(props::random_vec(rng, a.dim())), y = b.from_coords(props::random_vec(rng, b.dim()));
    if (!peirce_target(pd, i, j, k, l, v.n).contains(v.mul(x, y)))
      return v.label + ": V_" + std::to_string(i) + std::to_string(j) + " V_" + std::to_string(k) +
             std::to_string(l) + " outside its target";
    return "";
  });
}

/// For a square y = x^2: a vanishing diagonal component y_ii forces every y_ij to vanish; nonzero y_ii are positive.
inline SuiteResult suite_squares_peirce(std::size_t count, std::uint64_t seed) {
  auto pool = props::jordan_pool();
  std::vector<PeirceDecomposition> pds;
  for (const auto& v : pool) pds.push_back(peirce_frame(v, v.frame));
  return props::run_cases("squares-peirce", count, seed, 3, [&](props::Rng& rng) -> std::string {
    std::size_t idx = static_cast<std::size_t>(props::uniform(rng, 0, static_cast<int>(pool.size()) - 1));
    const auto& v = pool[idx];
    const auto& pd = pds[idx];
    const std::size_t r = v.frame.size();
    auto comps = props::peirce_components(pd, props::random_element(rng, v));
    std::vector<bool> dead(r);
    for (std::size_t i = 0; i < r; ++i) dead[i] = props::uniform(rng, 0, 2) == 0;
    Vec x = zero_vec(v.n);
    for (const auto& [key, c] : comps)
      if (!dead[key.first] && !dead[key.second]) x = add(x, c);
    Vec y = v.square(x);
    auto yc = props::peirce_components(pd, y);
    for (std::size_t i = 0; i < r; ++i) {
      const Vec& d = yc[{i, i}];
      Scalar coef = v.inner(d, v.frame[i]) / v.inner(v.frame[i], v.frame[i]);
      if (sgn(coef) < 0) return v.label + ": negative diagonal component of a square";
      if (sgn(coef) != 0) continue;
      for (std::size_t j = 0; j < r; ++j)
        if (j != i && !is_zero(yc[{std::min(i, j), std::max(i, j)}])) return v.label + ": off-diagonal survives";
    }
    return "";
  });
}

inline SuiteResult suite_cone(std::size_t count, std::uint64_t seed) {
  auto pool = props::jordan_pool();
  return props::run_cases("cone", count, seed, 4, [&](props::Rng& rng) -> std::string {
    const auto& v = props::pick(rng, pool);
    Vec x = props::random_element(rng, v);
    if (!in_cone_closure(v, v.square(x))) return v.label + ": square outside the cone";
    Vec f = zero_vec(v.n), pos = zero_vec(v.n);
    const std::size_t neg = static_cast<std::size_t>(props::uniform(rng, 0, static_cast<int>(v.frame.size()) - 1));
    for (std::size_t k = 0; k < v.frame.size(); ++k) {
      Scalar c = abs(props::random_rational(rng));
      axpy(pos, c, v.frame[k]);
      if (k == neg && sgn(c) == 0) c = 1;
      axpy(f, k == neg ? -c : c, v.frame[k]);
    }
    if (!in_cone_closure(v, pos)) return v.label + ": nonnegative frame combination outside the cone";
    if (in_cone_closure(v, f)) return v.label + ": frame combination with a negative coefficient inside the cone";
    return "";
  });
}

inline SuiteResult suite_flips(std::size_t count, std::uint64_t seed) {
  std::vector<Realization> pool;
  for (const auto& s : props::tube_specs())
    if (s != "sp:4") pool.push_back(build(s));
  for (const auto& s : props::nontube_specs()) pool.push_back(build(s));
  // exp(i pi ad h) only depends on the parities of alpha(h); cache by parity key
  std::vector<std::map<std::vector<int>, bool>> cache(pool.size());
  return props::run_cases("flips", count, seed, 5, [&](props::Rng& rng) -> std::string {
    std::size_t idx = static_cast<std::size_t>(props::uniform(rng, 0, static_cast<int>(pool.size()) - 1));
    const auto& r = pool[idx];
    Vec l(r.rank());
    const int mode = props::uniform(rng, 0, 2);  // all half-odd, all integral, mixed
    for (auto& c : l) {
      const int m = props::uniform(rng, -3, 3);
      c = mode == 0 ? Scalar(2 * m + 1, 2) : mode == 1 ? Scalar(m) : Scalar(m, props::uniform(rng, 1, 2));
      c.canonicalize();
    }
    bool direct = false;
    if (is_integral_hyperbolic(r, l)) {
      std::vector<int> key;
      for (const auto& [k, s] : r.roots) {
        Scalar a = 0;
        for (std::size_t i = 0; i < k.size(); ++i) a += k[i] * l[i];
        key.push_back(mpz_odd_p(a.get_num_mpz_t()) ? 1 : 0);
      }
      auto it = cache[idx].find(key);
      if (it == cache[idx].end()) it = cache[idx].emplace(key, flips_by_exp(r, l)).first;
      direct = it->second;
    }
    if (flips_wmin(r, l) != direct) return r.name + ": flip criterion disagrees at (" + join_rationals(l) + ")";
    return "";
  });
}

namespace props {

inline std::vector<Case> wedge_pool() {
  return involution_pool({"su:1,1", "su:2,2", "su:2,1", "su:3,1", "su:4,2", "sp:2", "sostar:3", "sostar:4",
                          "so2:3", "so2:4", "so2:5"});
}

/// A random tau-fixed lambda: frame grid points {0, +-1/2}, sometimes perturbed off the grid.
inline std::optional<Vec> random_fixed_lambda(Rng& rng, const InvolutionRecord& tau, std::size_t rank) {
  Vec k(tau.a_h.size());
  for (auto& c : k) {
    const int m = uniform(rng, 0, 4);
    c = m == 0 ? Scalar(0) : m == 1 ? rat(1, 2) : m == 2 ? rat(-1, 2) : random_rational(rng, 2);
  }
  Vec l = tau.lambda_of(k);
  if (l.size() != rank) return std::nullopt;
  return l;
}

}  // namespace props

inline SuiteResult suite_reduction(std::size_t count, std::uint64_t seed) {
  auto pool = props::wedge_pool();
  return props::run_cases("reduction", count, seed, 6, [&](props::Rng& rng) -> std::string {
    const auto& c = props::pick(rng, pool);
    const auto& tau = props::pick(rng, c.recs);
    auto l = props::random_fixed_lambda(rng, tau, c.r.rank());
    if (!l) return "bad lambda";
    auto k = kappa_of(tau, *l);
    if (!k) return "lambda not tau-fixed";
    WedgeResult a = compute_wedge(c.r, tau, *k);
    Vec l0 = reduce_h(c.r, tau, *l);
    WedgeResult b = compute_wedge(c.r, tau, *kappa_of(tau, l0));
    if (a.g_tau_h != b.g_tau_h) return c.r.name + "/" + tau.key + ": reduction changes g(tau,h) at (" + join_rationals(*l) + ")";
    return "";
  });
}

inline SuiteResult suite_graded(std::size_t count, std::uint64_t seed) {
  auto pool = props::wedge_pool();
  return props::run_cases("graded", count, seed, 7, [&](props::Rng& rng) -> std::string {
    const auto& c = props::pick(rng, pool);
    const auto& tau = props::pick(rng, c.recs);
    auto l = props::random_fixed_lambda(rng, tau, c.r.rank());
    auto k = l ? kappa_of(tau, *l) : std::nullopt;
    if (!k) return "lambda not tau-fixed";
    WedgeResult w = compute_wedge(c.r, tau, *k);
    if (!is_abelian(*c.r.g, w.c_plus) || !is_abelian(*c.r.g, w.c_minus)) return c.r.name + ": g_+- not abelian";
    if (!is_subalgebra(*c.r.g, w.g_tau_h)) return c.r.name + ": g(tau,h) not a subalgebra";
    Subspace back = bracket_span(*c.r.g, w.c_plus, w.c_minus);
    if (!w.bracket_part.contains(back) || !back.contains(w.bracket_part)) return c.r.name + ": degree-zero part mismatch";
    return "";
  });
}

/// Partner of a Jordan family under the KKT correspondence.
inline std::string kkt_partner(const std::string& spec) {
  auto [fam, ps] = [&] {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return std::pair<std::string, int>{spec, 3};
    return std::pair<std::string, int>{spec.substr(0, colon), std::stoi(spec.substr(colon + 1))};
  }();
  if (ps == 1 && fam != "mink") return "sl(2,R)";
  if (fam == "sym") return iso_label(canonical(IsoSum{IsoType{"sp_R", {2 * ps}}}));
  if (fam == "hermC") return iso_label(canonical(IsoSum{IsoType{"su", {ps, ps}}}));
  if (fam == "hermH") return iso_label(canonical(IsoSum{IsoType{"so_star", {4 * ps}}}));
  if (fam == "mink") return iso_label(canonical(IsoSum{IsoType{"so", {2, ps}}}));
  if (fam == "hermO3") return "e7(-25)";
  throw ContractError("kkt_partner: unknown family " + spec);
}

inline SuiteResult suite_kkt_roundtrip(std::size_t count, std::uint64_t seed) {
  struct Entry {
    std::string spec;
    KKT k;
    std::string iso;
  };
  std::vector<Entry> pool;
  for (const auto& s : props::jordan_specs()) {
    if (s == "mink:1") continue;
    KKT k = kkt_lie(build_jordan(s));
    Realization r = kkt_realization(k, "kkt(" + s + ")");
    std::string iso = iso_label(identify_iso_type(r, Subspace::full(r.dim())).iso);
    pool.push_back({s, std::move(k), iso});
  }
  return props::run_cases("kkt-roundtrip", count, seed, 8, [&](props::Rng& rng) -> std::string {
    const auto& e = props::pick(rng, pool);
    if (e.iso != kkt_partner(e.spec)) return e.spec + ": kkt gives " + e.iso;
    const auto& v = e.k.v;
    const LieAlgebra& g = *e.k.g;
    Vec u = props::random_element(rng, v), w = props::random_element(rng, v);
    // [[u, e-bar], w] = 2 u w
    Vec lhs = g.bracket(g.bracket(e.k.up_vec(u), e.k.down_vec(v.unit)), e.k.up_vec(w));
    if (lhs != e.k.up_vec(scale(v.mul(u, w), 2))) return e.spec + ": product not recovered from brackets";
    if (g.theta()->apply(e.k.up_vec(u)) != scale(e.k.down_vec(u), -1)) return e.spec + ": theta does not swap the grades";
    return "";
  });
}

/// Class of sigma = -tau on g_1(h0) for h0 = 1/2 sum +-H_k against the rank arithmetic of the involution.
inline SuiteResult suite_trichotomy(std::size_t count, std::uint64_t seed) {
  std::vector<std::string> specs = props::tube_specs();
  specs.push_back("kkt:hermO3");
  auto pool = props::involution_pool(specs);
  struct Item {
    std::size_t realization;
    std::size_t involution;
    Vec lambda;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t t = 0; t < pool[i].recs.size(); ++t) {
      const std::size_t rk = pool[i].r.rank();
      for (std::size_t m = 0; m < (std::size_t{1} << rk); ++m) {
        Vec l(rk);
        for (std::size_t k = 0; k < rk; ++k) l[k] = (m >> k) & 1 ? rat(-1, 2) : rat(1, 2);
        if (kappa_of(pool[i].recs[t], l)) items.push_back({i, t, l});
      }
    }
  // each item is deterministic; compute once and draw cases from the finite set
  std::map<std::size_t, std::string> verdicts;
  auto verdict = [&](std::size_t idx) -> const std::string& {
    auto it = verdicts.find(idx);
    if (it != verdicts.end()) return it->second;
    const Item& item = items[idx];
    const auto& c = pool[item.realization];
    const auto& tau = c.recs[item.involution];
    WedgeResult w = compute_wedge(c.r, tau, *kappa_of(tau, item.lambda));
    // Cayley type is a conjugacy class: a record whose fixed algebra matches the Cayley one belongs to it
    bool cayley_type = tau.cls == "cayley";
    for (const auto& o : c.recs)
      if (o.cls == "cayley" && o.fixed_dim == tau.fixed_dim && o.fixed_rank == tau.fixed_rank) cayley_type = true;
    std::string expect;
    if (cayley_type)
      expect = "peirce-reflection";
    else if (tau.fixed_rank == c.r.rank())
      expect = "split-simple";
    else if (c.r.rank() == 2 * tau.fixed_rank)
      expect = "nonsplit";
    std::string err;
    if (w.sigma_class != expect)
      err = c.r.name + "/" + tau.key + ": class " + w.sigma_class + ", expected " + expect;
    else if (expect == "split-simple" && w.fixed_rank != w.v_rank)
      err = c.r.name + "/" + tau.key + ": split but rank V^sigma != rank V";
    return verdicts.emplace(idx, err).first->second;
  };
  return props::run_cases("trichotomy", count, seed, 9, [&](props::Rng& rng) -> std::string {
    return verdict(static_cast<std::size_t>(props::uniform(rng, 0, static_cast<int>(items.size()) - 1)));
  });
}

struct SuiteInfo {
  std::string name;
  std::function<SuiteResult(std::size_t, std::uint64_t)> run;
};

inline const std::vector<SuiteInfo>& all_suites() {
  static const std::vector<SuiteInfo> s{{"jordan-axioms", suite_jordan_axioms}, {"peirce-rules", suite_peirce_rules},
                                        {"squares-peirce", suite_squares_peirce}, {"cone", suite_cone},
                                        {"flips", suite_flips},                   {"reduction", suite_reduction},
                                        {"graded", suite_graded},                 {"kkt-roundtrip", suite_kkt_roundtrip},
                                        {"trichotomy", suite_trichotomy}};
  return s;
}

/// Runs a suite, turning setup failures into a failed result.
inline SuiteResult run_suite(const SuiteInfo& s, std::size_t count, std::uint64_t seed) {
  try {
    return s.run(count, seed);
  } catch (const std::exception& e) {
    return SuiteResult{s.name, 0, 1, std::string("setup: ") + e.what()};
  }
}

}  // namespace liewedge
