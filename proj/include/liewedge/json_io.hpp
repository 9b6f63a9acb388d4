#pragma once

#include <sstream>

#include "json.hpp"
#include "props.hpp"
#include "tables.hpp"

namespace liewedge {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json rationals_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_string(c));
  return a;
}

inline Vec rationals_from_json(const Json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(parse_rational(s.get<std::string>()));
  return v;
}

inline Json iso_json(const IsoSum& s) {
  Json a = Json::array();
  for (const auto& t : s) a.push_back(Json{{"family", t.family}, {"params", t.params}});
  return a;
}

inline IsoSum iso_from_json(const Json& j) {
  IsoSum s;
  for (const auto& t : j) s.push_back(IsoType{t.at("family").get<std::string>(), t.at("params").get<std::vector<int>>()});
  return s;
}

inline Json trace_json(const std::vector<TraceStep>& trace) {
  Json a = Json::array();
  for (const auto& st : trace) {
    Json o{{"step", st.step}};
    for (const auto& [k, v] : st.fields) o[k] = v;
    a.push_back(std::move(o));
  }
  return a;
}

inline Json header_json(const std::string& command, const Realization& r, const InvolutionRecord& tau) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"algebra", r.name},
              {"params", r.params},
              {"tau_class", tau.cls},
              {"tau", tau.key},
              {"fixed", tau.fixed_label}};
}

/// A single wedge: {schema_version, command, algebra, params, tau_class, tau, fixed, h, g_tau_h_dim, iso, label, trace}.
inline Json wedge_json(const Realization& r, const InvolutionRecord& tau, const WedgeResult& w) {
  Json j = header_json("classify", r, tau);
  j["h"] = rationals_json(w.lambda);
  j["g_tau_h_dim"] = w.g_tau_h.dim();
  j["iso"] = iso_json(w.iso());
  j["label"] = iso_label(w.iso());
  j["trace"] = trace_json(w.trace);
  return j;
}

inline Json enumeration_json(const Realization& r, const InvolutionRecord& tau, const std::vector<EnumEntry>& es,
                             const std::string& mode) {
  Json j = header_json("classify", r, tau);
  j["h"] = mode;
  Json rows = Json::array();
  for (const auto& e : es)
    rows.push_back(Json{{"h", rationals_json(e.lambda)},
                        {"g_tau_h_dim", e.dim},
                        {"iso", iso_json(e.iso)},
                        {"label", iso_label(e.iso)}});
  j["results"] = std::move(rows);
  return j;
}

inline Json verify_json(const std::string& table, const VerifyOptions& opt, const std::vector<RowOutcome>& rows) {
  Json j{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"table", table}, {"max_rank", opt.max_rank}};
  Json a = Json::array();
  std::map<std::string, int> counts{{"PASS", 0}, {"FAIL", 0}, {"SKIP", 0}, {"ERROR", 0}};
  for (const auto& o : rows) {
    ++counts[o.status];
    Json r{{"id", o.row.id},          {"algebra", o.row.algebra}, {"tau", o.row.tau},
           {"fixed", o.row.fixed},    {"rank", o.row.rank},       {"row", o.row.row},
           {"status", o.status},      {"expected", o.row.expected}};
    if (o.status != "SKIP") {
      r["computed"] = o.computed;
      r["missing"] = o.missing;
      r["extra"] = o.extra;
      if (table == "table1") r["zero_realized"] = o.zero_realized;
      Json ws = Json::array();
      for (const auto& w : o.witnesses) ws.push_back(Json{{"iso", w.iso}, {"h", rationals_json(w.lambda)}, {"dim", w.dim}});
      r["witnesses"] = std::move(ws);
    }
    if (!o.error.empty()) r["error"] = o.error;
    a.push_back(std::move(r));
  }
  j["rows"] = std::move(a);
  j["summary"] = Json{{"pass", counts["PASS"]}, {"fail", counts["FAIL"]}, {"skip", counts["SKIP"]}, {"error", counts["ERROR"]}};
  return j;
}

inline Json props_json(std::uint64_t seed, std::size_t count, const std::vector<SuiteResult>& res) {
  Json j{{"schema_version", kSchemaVersion}, {"command", "props"}, {"seed", seed}, {"count", count}};
  Json a = Json::array();
  for (const auto& r : res) {
    Json s{{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"status", r.ok() ? "PASS" : "FAIL"}};
    if (!r.first_failure.empty()) s["first_failure"] = r.first_failure;
    a.push_back(std::move(s));
  }
  j["suites"] = std::move(a);
  return j;
}

// ---------------------------------------------------------------- markdown

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string md_h(const Json& h) {
  if (h.is_string()) return h.get<std::string>();
  std::vector<std::string> parts;
  for (const auto& c : h) parts.push_back(c.get<std::string>());
  return "(" + join(parts, ", ") + ")";
}

}  // namespace detail

inline std::string wedge_markdown(const Json& j) {
  std::ostringstream s;
  s << "| algebra | g^tau | h | dim g(tau,h) | g(tau,h) |\n|---|---|---|---|---|\n";
  auto line = [&](const Json& row) {
    s << "| " << j.at("algebra").get<std::string>() << " | " << j.at("fixed").get<std::string>() << " | "
      << detail::md_h(row.at("h")) << " | " << row.at("g_tau_h_dim").get<std::size_t>() << " | "
      << row.at("label").get<std::string>() << " |\n";
  };
  if (j.contains("results"))
    for (const auto& row : j.at("results")) line(row);
  else
    line(j);
  return s.str();
}

inline std::string verify_markdown(const Json& j) {
  std::ostringstream s;
  const bool t4 = j.at("table") == "table4";
  s << "| row | algebra | g^tau | expected | computed | status |\n|---|---|---|---|---|---|\n";
  for (const auto& r : j.at("rows")) {
    auto list = [&](const char* key) {
      if (!r.contains(key)) return std::string("-");
      auto v = r.at(key).get<std::vector<std::string>>();
      return t4 ? "(" + detail::join(v, ", ") + ")" : detail::join(v, ", ");
    };
    s << "| " << r.at("id").get<std::string>() << " | " << r.at("algebra").get<std::string>() << " | "
      << r.at("fixed").get<std::string>() << " | " << list("expected") << " | " << list("computed") << " | "
      << r.at("status").get<std::string>() << " |\n";
  }
  const auto& sm = j.at("summary");
  s << "\npass " << sm.at("pass") << ", fail " << sm.at("fail") << ", skip " << sm.at("skip") << ", error "
    << sm.at("error") << "\n";
  return s.str();
}

inline std::string props_markdown(const Json& j) {
  std::ostringstream s;
  s << "| suite | cases | failures | status |\n|---|---|---|---|\n";
  for (const auto& r : j.at("suites"))
    s << "| " << r.at("suite").get<std::string>() << " | " << r.at("cases") << " | " << r.at("failures") << " | "
      << r.at("status").get<std::string>() << " |\n";
  return s.str();
}

}  // namespace liewedge
