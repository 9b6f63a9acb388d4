// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iostream>

#include "liewedge/liewedge.hpp"

using namespace liewedge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

int failures = 0;

void report(int n, const std::string& title, const Line& l, double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  std::cout << (l.ok ? "PASS" : "FAIL") << " " << n << " " << title << " (" << buf << ")"
            << (l.detail.empty() ? "" : ": " + l.detail) << std::endl;
  if (!l.ok) ++failures;
}

/// Checks the listed fixture rows; every id must be present and PASS.
Line rows_pass(const std::string& table, const std::vector<RowOutcome>& rows, const std::vector<std::string>& ids) {
  Line l;
  for (const auto& id : ids) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const RowOutcome& o) { return o.row.id == id; });
    if (it == rows.end()) {
      l.fail(table + " has no row " + id);
      continue;
    }
    if (it->status != "PASS") {
      std::string d = id + " " + it->status;
      for (const auto& m : it->missing) d += " missing " + m;
      for (const auto& e : it->extra) d += " extra " + e;
      if (!it->error.empty()) d += " " + it->error;
      l.fail(d);
    }
  }
  return l;
}

std::vector<RowOutcome> run_rows(const std::string& table, const std::vector<std::string>& ids) {
  Fixture f = load_fixture(table);
  std::vector<RowOutcome> out;
  for (const auto& row : f.rows)
    if (std::find(ids.begin(), ids.end(), row.id) != ids.end()) out.push_back(verify_row(table, row));
  return out;
}

void criterion_table3() {
  auto t0 = Clock::now();
  const std::vector<std::string> ids{"su11", "su22", "su33", "sp2",  "sp4",  "sp6",
                                     "sostar8", "so21", "so23", "so24", "so25"};
  Line l = rows_pass("table3", run_rows("table3", ids), ids);
  const double s = seconds_since(t0);
  if (s > 120) l.fail("took longer than 2 minutes");
  report(1, "table3 classical rows, Cayley involution, partial frame sums", l, s);
}

void criterion_e7() {
  auto t0 = Clock::now();
  Line l;
  try {
    Realization r = build_kkt("hermO3");
    if (r.dim() != 133) l.fail("dim " + std::to_string(r.dim()));
    if (r.rank() != 3) l.fail("rank " + std::to_string(r.rank()));
    if (r.pattern.middle_mult != 8) l.fail("middle multiplicity " + std::to_string(r.pattern.middle_mult));
    auto recs = standard_involutions(r);
    const auto& tau = select_involution(recs, "cayley");
    std::set<std::string> got;
    for (const auto& e : enumerate_table(r, tau, EnumMode::frame)) got.insert(iso_label(e.iso));
    if (got != std::set<std::string>{"e7(-25)", "so(2,10)", "sl(2,R)"}) {
      std::string d;
      for (const auto& g : got) d += " " + g;
      l.fail("frame enumeration gave" + d);
    }
    // so(2,10) comes from the rank-2 Peirce subalgebra R x R^9
    WedgeResult w = compute_wedge(r, tau, *kappa_of(tau, {rat(1, 2), rat(1, 2), 0}));
    if (iso_label(w.iso()) != "so(2,10)") l.fail("h = (1/2,1/2,0) gives " + iso_label(w.iso()));
    bool m10 = false;
    for (const auto& st : w.trace)
      for (const auto& [k, v] : st.fields) m10 = m10 || (st.step == "jordan" && k == "V" && v == "M^10");
    if (!m10) l.fail("g_1(h0) at (1/2,1/2,0) is not M^10");
  } catch (const std::exception& e) {
    l.fail(e.what());
  }
  const double s = seconds_since(t0);
  if (s > 300) l.fail("took longer than 5 minutes");
  report(2, "e7(-25) from Herm(3,O): dim 133, rank 3, middle multiplicity 8, frame types", l, s);
}

void criterion_table1() {
  auto t0 = Clock::now();
  const std::vector<std::string> ids{"su22-cayley",   "su22-split",     "su22-nonsplit", "su21-split",
                                     "su42-nonsplit", "sp4-cayley",     "sp4-nonsplit",  "sp8-nonsplit",
                                     "sostar8-cayley", "sostar8-split", "sostar6-split", "so23-cayley",
                                     "so24-cayley",   "so25-cayley",    "so24-split-q2", "so25-split-q2",
                                     "so23-nonsplit", "so24-nonsplit",  "so25-nonsplit"};
  Line l = rows_pass("table1", run_rows("table1", ids), ids);
  report(3, "table1 classical rows at small parameters", l, seconds_since(t0));
}

void criterion_table4() {
  auto t0 = Clock::now();
  const std::vector<std::string> ids{"su21", "su32", "su42-split", "su42-nonsplit", "sostar10"};
  Line l = rows_pass("table4", run_rows("table4", ids), ids);
  report(4, "table4 restrictions to g_t(h)", l, seconds_since(t0));
}

void criterion_props() {
  auto t0 = Clock::now();
  Line l;
  std::size_t total = 0;
  for (const auto& s : all_suites()) {
    SuiteResult r = run_suite(s, 1000, 7);
    total += r.cases;
    if (!r.ok()) l.fail(r.name + " " + std::to_string(r.failures) + "/" + std::to_string(r.cases) + " " + r.first_failure);
  }
  l.detail = l.ok ? std::to_string(all_suites().size()) + " suites, " + std::to_string(total) + " cases" : l.detail;
  report(5, "property suites, 1000 cases each, seed 7", l, seconds_since(t0));
}

void criterion_determinism() {
  auto t0 = Clock::now();
  Line l;
  for (const std::string t : {"table1", "table3", "table4"}) {
    VerifyOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    const std::string a = verify_json(t, one, verify_table(t, one)).dump(2);
    const std::string b = verify_json(t, one, verify_table(t, one)).dump(2);
    const std::string c = verify_json(t, eight, verify_table(t, eight)).dump(2);
    // max_rank is the only option echoed in the report; both runs use the default
    if (a != b) l.fail(t + " differs between two runs");
    if (a != c) l.fail(t + " differs between 1 and 8 threads");
  }
  report(6, "verify reports byte-identical across runs and thread counts 1, 8", l, seconds_since(t0));
}

}  // namespace

int main() {
  criterion_table3();
  criterion_e7();
  criterion_table1();
  criterion_table4();
  criterion_props();
  criterion_determinism();
  // rows outside the criteria, reported for completeness
  for (const auto& o : verify_table("table1"))
    if (o.status != "PASS" && o.status != "SKIP") {
      std::string d;
      for (const auto& e : o.extra) d += " extra " + e;
      for (const auto& m : o.missing) d += " missing " + m;
      std::cout << "NOTE table1 " << o.row.id << " " << o.status << d << std::endl;
    }
  return failures == 0 ? 0 : 1;
}
