#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>

#include "iso.hpp"
#include "jordan.hpp"

namespace liewedge {

struct TraceStep {
  std::string step;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct WedgeResult {
  Vec kappa, lambda, lambda0;
  Subspace c_plus, c_minus, bracket_part, g_tau_h;
  Identification id;
  std::string sigma_class;  // class of -tau on g_1(h0); empty for the zero wedge
  std::string fixed_jordan;
  std::size_t v_rank = 0, fixed_rank = 0;  // ranks of g_1(h0) and of its sigma-fixed subalgebra
  std::vector<TraceStep> trace;

  const IsoSum& iso() const { return id.iso; }
};

inline std::string join_rationals(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

/// lambda0_k = +-1/2 where |lambda_k| = 1/2, else 0.
inline Vec reduce_lambda(const Vec& lambda) {
  Vec out;
  const Scalar half = rat(1, 2);
  for (const auto& c : lambda) out.push_back(c == half ? half : c == -half ? -half : Scalar(0));
  return out;
}

/// g_{-1}(h0) + [g_{-1}(h0), g_1(h0)] + g_1(h0) for h0 with spectrum in {0, +-1/2, +-1}.
inline Subspace tube_subalgebra(const Realization& r, const Vec& lambda0) {
  for (const auto& v : r.spectrum(lambda0))
    if (v != 0 && v != 1 && v != -1 && v != rat(1, 2) && v != rat(-1, 2))
      throw ContractError("tube_subalgebra: spectrum of ad h0 is not in {0, +-1/2, +-1}");
  Subspace up = r.level(lambda0, 1), down = r.level(lambda0, -1);
  if (up.dim() == 0 || down.dim() == 0) throw ContractError("tube_subalgebra: empty +-1 eigenspaces");
  return sum(sum(down, bracket_span(*r.g, down, up)), up);
}

/// Reduction of h = sum lambda_k H_k in a^tau to h0 with spec(ad h0) in {0, +-1/2, +-1}. Checks that h0 is
/// tau-fixed, lies in s = g_t(h0), and that h - h0 is Killing-orthogonal to s and centralizes it, so h0 is the
/// projection of h onto the semisimple part.
inline Vec reduce_h(const Realization& r, const InvolutionRecord& tau, const Vec& lambda) {
  Vec l0 = reduce_lambda(lambda);
  if (is_zero(l0)) return l0;
  const LieAlgebra& g = *r.g;
  Vec h = r.a_element(lambda), h0 = r.a_element(l0);
  if (tau.phi.apply(h0) != h0) throw ContractError("reduce_h: h0 is not tau-fixed");
  Subspace s = tube_subalgebra(r, l0);
  if (!s.contains(h0)) throw ContractError("reduce_h: h0 is not in the tube subalgebra");
  Vec z = sub(h, h0);
  Vec kz = g.killing_matrix().apply(z);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vec b = s.vector(i);
    if (sgn(dot(kz, b)) != 0) throw ContractError("reduce_h: h - h0 is not Killing-orthogonal to the tube subalgebra");
    if (!is_zero(g.bracket(z, b))) throw ContractError("reduce_h: h - h0 does not centralize the tube subalgebra");
  }
  return l0;
}

/// Coordinates kappa in the a^tau basis of the record for lambda, when lambda is tau-fixed.
inline std::optional<Vec> kappa_of(const InvolutionRecord& tau, const Vec& lambda) {
  Vec k;
  for (const auto& row : tau.a_h) {
    std::size_t piv = 0;
    while (piv < row.size() && sgn(row[piv]) == 0) ++piv;
    if (piv == row.size()) return std::nullopt;
    k.push_back(lambda[piv] / row[piv]);
  }
  if (tau.a_h.empty()) return is_zero(lambda) ? std::optional<Vec>(Vec{}) : std::nullopt;
  if (tau.lambda_of(k) != lambda) return std::nullopt;
  return k;
}

struct WedgeOptions {
  std::uint64_t seed = 1;
  bool negate_cone = false;  // use -W_min in the cone tests
};

/// g(tau, h) for h with coordinates kappa in a^tau.
inline WedgeResult compute_wedge(const Realization& r, const InvolutionRecord& tau, const Vec& kappa,
                                 const WedgeOptions& opt = {}) {
  const LieAlgebra& g = *r.g;
  const std::size_t n = g.dim();
  WedgeResult out;
  out.kappa = kappa;
  out.lambda = tau.lambda_of(kappa);
  out.trace.push_back({"input", {{"kappa", join_rationals(kappa)}, {"lambda", join_rationals(out.lambda)}}});
  Vec h = r.a_element(out.lambda);
  if (tau.phi.apply(h) != h) throw ContractError("compute_wedge: h is not tau-fixed");
  out.lambda0 = reduce_h(r, tau, out.lambda);
  out.trace.push_back({"reduce", {{"lambda0", join_rationals(out.lambda0)}}});
  out.c_plus = out.c_minus = out.bracket_part = out.g_tau_h = Subspace::zero(n);
  if (is_zero(out.lambda0)) {
    out.trace.push_back({"result", {{"dim", "0"}, {"iso", "0"}}});
    return out;
  }
  const Vec& l0 = out.lambda0;
  Subspace v = r.level(l0, 1), vm = r.level(l0, -1);
  Vec x0 = zero_vec(n), y0 = zero_vec(n);
  std::vector<Vec> frame;
  for (std::size_t k = 0; k < l0.size(); ++k) {
    if (sgn(l0[k]) == 0) continue;
    Vec xk = sgn(l0[k]) > 0 ? r.X[k] : scale(r.Y[k], -1);
    Vec yk = sgn(l0[k]) > 0 ? r.Y[k] : scale(r.X[k], -1);
    if (opt.negate_cone) {
      xk = scale(xk, -1);
      yk = scale(yk, -1);
    }
    x0 = add(x0, xk);
    y0 = add(y0, yk);
    frame.push_back(xk);
  }
  out.trace.push_back({"tube", {{"dim_g1", std::to_string(v.dim())}, {"rank", std::to_string(frame.size())}}});
  JordanAlgebra jv = jordan_on_subspace(g, v, x0, y0, r.theta(), "g_1(h0)");
  for (auto& c : frame) c = v.coords(c);
  jv.frame = frame;
  if (tau.phi.apply(x0) != scale(x0, -1)) throw ContractError("compute_wedge: -tau does not fix the unit of g_1(h0)");
  Matrix sigma(v.dim(), v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    Vec img = v.coords(scale(tau.phi.apply(v.vector(j)), -1));
    for (std::size_t i = 0; i < v.dim(); ++i) sigma(i, j) = img[i];
  }
  JordanInvolution ji = classify_involution(jv, sigma, frame);
  out.sigma_class = ji.cls;
  out.fixed_jordan = ji.fixed_type;
  out.v_rank = frame.size();
  out.fixed_rank = ji.fixed_rank;
  out.trace.push_back({"jordan",
                       {{"V", simple_jordan_type(frame.size(), v.dim())},
                        {"sigma", ji.cls},
                        {"fixed", ji.fixed_type},
                        {"fixed_dim", std::to_string(ji.fixed.dim())}}});
  // C_+ spans V^sigma: certified by squares inside the cone
  Subspace cp = cone_section_span(jv, ji.fixed, opt.seed);
  std::vector<Vec> cpv;
  for (std::size_t i = 0; i < cp.dim(); ++i) cpv.push_back(v.from_coords(cp.vector(i)));
  out.c_plus = cpv.empty() ? Subspace::zero(n) : Subspace::span_of(cpv, n);
  out.c_minus = eigen_within(tau.phi, vm, -1);
  std::vector<Vec> tcp;
  for (const auto& c : cpv) tcp.push_back(r.theta().apply(c));
  if ((tcp.empty() ? Subspace::zero(n) : Subspace::span_of(tcp, n)) != out.c_minus)
    throw ContractError("compute_wedge: theta(C_+) does not span C_-");
  if (!is_abelian(g, out.c_plus) || !is_abelian(g, out.c_minus)) throw ContractError("compute_wedge: g_+- not abelian");
  out.bracket_part = bracket_span(g, out.c_minus, out.c_plus);
  out.g_tau_h = sum(sum(out.c_minus, out.bracket_part), out.c_plus);
  if (out.g_tau_h.dim() != out.c_minus.dim() + out.bracket_part.dim() + out.c_plus.dim())
    throw ContractError("compute_wedge: graded pieces are not independent");
  out.id = identify_iso_type(r, out.g_tau_h);
  out.trace.push_back({"result", {{"dim", std::to_string(out.g_tau_h.dim())}, {"iso", iso_label(out.id.iso)}}});
  return out;
}

// ---------------------------------------------------------------- enumeration

/// Worker count from LIEWEDGE_THREADS (default 1).
inline std::size_t thread_count() {
  const char* s = std::getenv("LIEWEDGE_THREADS");
  if (!s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) return 1;
  return static_cast<std::size_t>(std::min<long>(v, 64));
}

/// Runs f(i) for i in [0, n) on up to `threads` workers; results must be written by index.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& f) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

enum class EnumMode {
  frame,  // h = 1/2 (H_1 + ... + H_s), s = 1..r
  full    // every tau-fixed lambda in {0, +-1/2}^r
};

struct EnumEntry {
  Vec kappa, lambda;
  IsoSum iso;
  std::size_t dim = 0;
};

inline std::vector<Vec> enumeration_lambdas(const Realization& r, const InvolutionRecord& tau, EnumMode mode) {
  const std::size_t rk = r.rank();
  std::vector<Vec> out;
  if (mode == EnumMode::frame) {
    for (std::size_t s = 1; s <= rk; ++s) {
      Vec l = zero_vec(rk);
      for (std::size_t k = 0; k < s; ++k) l[k] = rat(1, 2);
      if (kappa_of(tau, l)) out.push_back(l);
    }
    return out;
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < rk; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Vec l(rk);
    std::size_t c = code;
    for (std::size_t k = 0; k < rk; ++k, c /= 3) l[k] = c % 3 == 0 ? Scalar(0) : c % 3 == 1 ? rat(1, 2) : rat(-1, 2);
    if (kappa_of(tau, l)) out.push_back(l);
  }
  return out;
}

/// Distinct types of g(tau, h) over the enumeration, in enumeration order (first witness kept).
inline std::vector<EnumEntry> enumerate_table(const Realization& r, const InvolutionRecord& tau, EnumMode mode,
                                              std::size_t threads = thread_count()) {
  auto lambdas = enumeration_lambdas(r, tau, mode);
  std::vector<EnumEntry> all(lambdas.size());
  parallel_for(lambdas.size(), threads, [&](std::size_t i) {
    Vec k = *kappa_of(tau, lambdas[i]);
    WedgeResult w = compute_wedge(r, tau, k);
    all[i] = {k, lambdas[i], w.iso(), w.g_tau_h.dim()};
  });
  std::vector<EnumEntry> out;
  std::set<std::string> seen;
  for (auto& e : all)
    if (seen.insert(iso_label(e.iso)).second) out.push_back(std::move(e));
  return out;
}

// ---------------------------------------------------------------- non-tube restriction

struct RestrictionResult {
  Vec lambda;
  IsoSum tube, tube_fixed;
  std::size_t tube_dim = 0, fixed_dim = 0, fixed_rank = 0;
};

/// For h = 1/2 sum H_k: types of g_t(h) and of its tau-fixed subalgebra.
inline RestrictionResult nontube_restriction_check(const Realization& r, const InvolutionRecord& tau) {
  const LieAlgebra& g = *r.g;
  const std::size_t n = g.dim();
  RestrictionResult out;
  out.lambda = Vec(r.rank(), rat(1, 2));
  if (!kappa_of(tau, out.lambda)) throw ContractError("nontube_restriction_check: 1/2 sum H_k is not tau-fixed");
  Subspace s = tube_subalgebra(r, out.lambda);
  out.tube_dim = s.dim();
  out.tube = identify_iso_type(r, s).iso;
  Subspace fixed = eigen_within(tau.phi, s, 1);
  out.fixed_dim = fixed.dim();
  std::vector<Vec> ah;
  for (const auto& row : tau.a_h) ah.push_back(r.a_element(row));
  Subspace a = intersect(ah.empty() ? Subspace::zero(n) : Subspace::span_of(ah, n), s);
  Subspace fp = intersect(fixed, r.p);
  if (centralizer_in(g, fp, a).dim() != a.dim())
    throw ContractError("nontube_restriction_check: a^tau ∩ g_t is not maximal abelian in the fixed algebra");
  out.fixed_rank = a.dim();
  const std::string kind = fixed_kind(tau.fixed_label);
  auto t = kind.empty() ? std::nullopt : fixed_algebra_type(kind, out.fixed_dim, out.fixed_rank);
  if (t)
    out.tube_fixed = canonical(IsoSum{*t});
  else
    out.tube_fixed = {IsoType{"unidentified", {static_cast<int>(out.fixed_dim), static_cast<int>(out.fixed_rank)}}};
  return out;
}

}  // namespace liewedge
