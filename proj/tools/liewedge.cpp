#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liewedge/liewedge.hpp"

using namespace liewedge;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "json";
  std::string path;
};

void emit(const Output& out, const Json& j, const std::function<std::string(const Json&)>& md) {
  const std::string text = out.format == "md" ? md(j) : j.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out.path);
  f << text;
}

/// "0" means the zero vector; otherwise exactly `rank` comma-separated rationals.
Vec parse_h(const std::string& text, std::size_t rank) {
  if (text == "0") return zero_vec(rank);
  Vec out;
  std::size_t start = 0;
  for (std::size_t item = 1;; ++item) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(part));
    } catch (const ContractError&) {
      throw UsageError("--h: bad rational '" + part + "' at item " + std::to_string(item) + " (column " +
                       std::to_string(start + 1) + ")");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != rank)
    throw UsageError("--h: expected " + std::to_string(rank) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

struct Setup {
  Realization r;
  std::vector<InvolutionRecord> recs;
  const InvolutionRecord* tau = nullptr;
};

Setup setup(const std::string& spec, const std::string& sel) {
  Setup s;
  try {
    s.r = build_any(spec);
    s.recs = standard_involutions(s.r);
    s.tau = &select_involution(s.recs, sel);
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }
  return s;
}

int cmd_classify(const std::string& spec, const std::string& sel, const std::string& h, std::uint64_t seed,
                 const Output& out) {
  Setup s = setup(spec, sel);
  if (h == "enumerate" || h == "frame") {
    auto es = enumerate_table(s.r, *s.tau, h == "frame" ? EnumMode::frame : EnumMode::full);
    emit(out, enumeration_json(s.r, *s.tau, es, h), wedge_markdown);
    return kOk;
  }
  Vec lambda = parse_h(h, s.r.rank());
  auto kappa = kappa_of(*s.tau, lambda);
  if (!kappa) throw UsageError("--h: (" + join_rationals(lambda) + ") is not fixed by " + s.tau->key);
  WedgeOptions opt;
  opt.seed = seed;
  emit(out, wedge_json(s.r, *s.tau, compute_wedge(s.r, *s.tau, *kappa, opt)), wedge_markdown);
  return kOk;
}

int cmd_verify(const std::string& table, std::size_t max_rank, const Output& out) {
  VerifyOptions opt;
  opt.max_rank = max_rank;
  auto rows = verify_table(table, opt);
  emit(out, verify_json(table, opt, rows), verify_markdown);
  for (const auto& r : rows)
    if (r.status == "FAIL" || r.status == "ERROR")
      std::cerr << r.status << " " << r.row.id << (r.error.empty() ? "" : ": " + r.error) << "\n";
  return all_pass(rows) ? kOk : kMismatch;
}

int cmd_props(std::uint64_t seed, std::size_t count, const std::vector<std::string>& only, const Output& out) {
  std::vector<SuiteResult> res;
  for (const auto& name : only) {
    bool known = false;
    for (const auto& s : all_suites()) known = known || s.name == name;
    if (!known) throw UsageError("unknown suite '" + name + "'");
  }
  for (const auto& s : all_suites()) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
    res.push_back(run_suite(s, count, seed));
    std::cerr << res.back().name << ": " << res.back().cases - res.back().failures << "/" << res.back().cases
              << " passed\n";
  }
  emit(out, props_json(seed, count, res), props_markdown);
  for (const auto& r : res)
    if (!r.ok()) return kMismatch;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wedge subalgebras g(tau,h) of hermitian Lie algebras"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--out", out.path, "write the report to a file");
  };

  std::string spec, sel = "cayley", h = "enumerate";
  std::uint64_t seed = 1;
  auto* classify = app.add_subcommand("classify", "compute g(tau,h) for one h or enumerate all h");
  classify->add_option("--case", spec, "su:p,q | sp:n | sostar:n | so2:n | kkt:<jordan>")->required();
  classify->add_option("--tau", sel, "involution key, fixed-algebra label or index");
  classify->add_option("--h", h, "comma-separated rationals in H_k coordinates, 0, enumerate or frame");
  classify->add_option("--seed", seed, "seed for the cone certification samples");
  add_output(classify);

  std::string table;
  std::size_t max_rank = 3;
  auto* verify = app.add_subcommand("verify", "diff computed tables against the fixtures in data/");
  verify->add_option("table", table, "table1 | table3 | table4")
      ->required()
      ->check(CLI::IsMember({"table1", "table3", "table4"}));
  verify->add_option("--max-rank", max_rank, "skip rows whose h has more free coordinates");
  add_output(verify);

  std::uint64_t pseed = 7;
  std::size_t count = 1000;
  std::vector<std::string> suites;
  auto* props = app.add_subcommand("props", "run the randomized property suites");
  props->add_option("--seed", pseed, "suite seed");
  props->add_option("--count", count, "cases per suite");
  props->add_option("--suite", suites, "run only the named suites");
  add_output(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    if (*classify) return cmd_classify(spec, sel, h, seed, out);
    if (*verify) return cmd_verify(table, max_rank, out);
    return cmd_props(pseed, count, suites, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
