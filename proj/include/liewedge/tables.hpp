#pragma once

#include <fstream>

#include "json.hpp"
#include "kkt.hpp"
#include "wedge.hpp"

namespace liewedge {

#ifndef LIEWEDGE_DATA_DIR
#define LIEWEDGE_DATA_DIR "data"
#endif

inline std::string data_dir() {
  const char* env = std::getenv("LIEWEDGE_DATA_DIR");
  return env && *env ? env : LIEWEDGE_DATA_DIR;
}

struct FixtureRow {
  std::string id, algebra, tau, fixed, row;
  std::size_t rank = 0;
  std::vector<std::string> expected;  // canonical labels; an ordered pair for table4
};

struct Fixture {
  std::string table;
  std::vector<FixtureRow> rows;
};

inline Fixture parse_fixture(const nlohmann::json& j) {
  Fixture f;
  f.table = j.at("table").get<std::string>();
  for (const auto& r : j.at("rows")) {
    FixtureRow row;
    row.id = r.at("id").get<std::string>();
    row.algebra = r.at("algebra").get<std::string>();
    row.tau = r.at("tau").get<std::string>();
    row.fixed = r.value("fixed", "");
    row.row = r.value("row", "");
    row.rank = r.at("rank").get<std::size_t>();
    for (const auto& e : r.at("expected")) row.expected.push_back(iso_label(parse_iso(e.get<std::string>())));
    f.rows.push_back(std::move(row));
  }
  return f;
}

inline Fixture load_fixture(const std::string& which, const std::string& dir = data_dir()) {
  const std::string path = dir + "/" + which + ".json";
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open fixture " + path);
  nlohmann::json j;
  try {
    in >> j;
    return parse_fixture(j);
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(path + ": " + e.what());
  }
}

struct Witness {
  std::string iso;
  Vec lambda;
  std::size_t dim = 0;
};

struct RowOutcome {
  FixtureRow row;
  std::string status;  // PASS | FAIL | SKIP | ERROR
  std::vector<std::string> computed, missing, extra;
  std::vector<Witness> witnesses;
  bool zero_realized = false;
  std::string error;
};

namespace detail {

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void diff_sets(RowOutcome& o) {
  auto c = sorted(o.computed), e = sorted(o.row.expected);
  std::set_difference(e.begin(), e.end(), c.begin(), c.end(), std::back_inserter(o.missing));
  std::set_difference(c.begin(), c.end(), e.begin(), e.end(), std::back_inserter(o.extra));
  o.computed = c;
  o.status = o.missing.empty() && o.extra.empty() ? "PASS" : "FAIL";
}

}  // namespace detail

/// Computes one fixture row. table1: full enumeration (0 recorded separately); table3: partial frame sums;
/// table4: restriction to g_t(h), compared as an ordered pair.
inline RowOutcome verify_row(const std::string& table, const FixtureRow& row, std::size_t threads = thread_count()) {
  RowOutcome o;
  o.row = row;
  try {
    Realization r = build_any(row.algebra);
    auto recs = standard_involutions(r);
    const InvolutionRecord& tau = select_involution(recs, row.tau);
    if (tau.a_h.size() != row.rank)
      throw ContractError("fixture rank " + std::to_string(row.rank) + " but dim a^tau = " + std::to_string(tau.a_h.size()));
    if (!row.fixed.empty() && tau.fixed_label != row.fixed)
      throw ContractError("involution fixes " + tau.fixed_label + ", fixture says " + row.fixed);
    if (table == "table4") {
      RestrictionResult res = nontube_restriction_check(r, tau);
      o.computed = {iso_label(res.tube), iso_label(res.tube_fixed)};
      o.witnesses.push_back({o.computed[0], res.lambda, res.tube_dim});
      o.status = o.computed == row.expected ? "PASS" : "FAIL";
      if (o.status == "FAIL") {
        o.missing = row.expected;
        o.extra = o.computed;
      }
      return o;
    }
    auto entries = enumerate_table(r, tau, table == "table3" ? EnumMode::frame : EnumMode::full, threads);
    for (const auto& e : entries) {
      std::string label = iso_label(e.iso);
      o.witnesses.push_back({label, e.lambda, e.dim});
      if (e.iso.empty())
        o.zero_realized = true;
      else
        o.computed.push_back(label);
    }
    detail::diff_sets(o);
  } catch (const std::exception& e) {
    o.status = "ERROR";
    o.error = e.what();
  }
  return o;
}

struct VerifyOptions {
  std::size_t max_rank = 3;
  std::size_t max_dim = 140;
  std::size_t threads = thread_count();
};

/// Dimension of the ambient algebra of a fixture row without building it.
inline std::size_t spec_dim(const std::string& spec) {
  if (spec == "kkt:hermO3") return 133;
  if (spec.rfind("kkt:", 0) == 0) return build_kkt(spec.substr(4)).dim();
  auto [fam, ps] = parse_family_spec(spec);
  const std::size_t a = static_cast<std::size_t>(ps.at(0));
  if (fam == "su") {
    const std::size_t n = a + static_cast<std::size_t>(ps.at(1));
    return n * n - 1;
  }
  if (fam == "sp") return a * (2 * a + 1);
  if (fam == "sostar") return a * (2 * a - 1);
  if (fam == "so2") return (a + 2) * (a + 1) / 2;
  throw ContractError("unknown family '" + fam + "'");
}

inline std::vector<RowOutcome> verify_table(const std::string& table, const VerifyOptions& opt = {}) {
  if (table != "table1" && table != "table3" && table != "table4") throw ContractError("unknown table '" + table + "'");
  Fixture f = load_fixture(table);
  std::vector<RowOutcome> out;
  for (const auto& row : f.rows) {
    if (row.rank > opt.max_rank || spec_dim(row.algebra) > opt.max_dim) {
      RowOutcome o;
      o.row = row;
      o.status = "SKIP";
      out.push_back(std::move(o));
      continue;
    }
    out.push_back(verify_row(table, row, opt.threads));
  }
  return out;
}

inline bool all_pass(const std::vector<RowOutcome>& rows) {
  for (const auto& r : rows)
    if (r.status == "FAIL" || r.status == "ERROR") return false;
  return true;
}

}  // namespace liewedge
