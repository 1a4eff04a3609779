#include "siegel/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace siegel {

namespace {

using nlohmann::ordered_json;

ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json value(cd v, bool complex_valued) {
  if (!complex_valued) return number(v.real());
  return ordered_json{{"re", number(v.real())}, {"im", number(v.imag())}};
}

std::string engine_name(Engine e) { return e == Engine::Tensor ? "tensor" : "mc"; }

std::string full_precision(double x) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_value(cd v, bool complex_valued) {
  if (!complex_valued) return full_precision(v.real());
  std::string s = full_precision(v.real());
  s += v.imag() < 0.0 ? "-" : "+";
  return s + full_precision(std::abs(v.imag())) + "i";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports, const ReportMeta& meta) {
  const SuiteConfig& cfg = meta.config;
  ordered_json tolerances = ordered_json::object();
  for (const auto& [k, v] : default_tolerances()) {
    auto it = cfg.tolerances.find(k);
    tolerances[k] = it != cfg.tolerances.end() ? it->second : v;
  }
  ordered_json config{{"suites", meta.suites},
                      {"dim", cfg.dim},
                      {"lambda", cfg.lambda ? ordered_json(*cfg.lambda) : ordered_json(nullptr)},
                      {"engine", engine_name(cfg.engine)},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"tolerances", tolerances}};
  std::size_t passed = 0;
  ordered_json checks = ordered_json::array();
  for (const auto& r : reports) {
    if (r.passed) ++passed;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    ordered_json c{{"check_id", r.check_id},
                   {"params", params},
                   {"expected", value(r.expected, r.complex_valued)},
                   {"actual", value(r.actual, r.complex_valued)},
                   {"metric", metric_name(r.metric)},
                   {"residual", number(r.residual)},
                   {"tolerance", number(r.tolerance)},
                   {"passed", r.passed},
                   {"seed", r.seed}};
    if (meta.timing) c["runtime_ms"] = r.runtime_ms;
    checks.push_back(std::move(c));
  }
  ordered_json doc{{"schema", kReportSchema},
                   {"version", kReportVersion},
                   {"config", config},
                   {"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}}},
                   {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<VerificationReport>& reports, const ReportMeta& meta) {
  std::ostringstream out;
  out << "check_id,params,expected,actual,residual,tolerance,passed,runtime_ms,seed\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + v;
    }
    out << csv_field(r.check_id) << ',' << csv_field(params) << ',' << csv_value(r.expected, r.complex_valued) << ','
        << csv_value(r.actual, r.complex_valued) << ',' << full_precision(r.residual) << ','
        << full_precision(r.tolerance) << ',' << (r.passed ? "true" : "false") << ','
        << (meta.timing ? std::to_string(r.runtime_ms) : std::string()) << ',' << r.seed << '\n';
  }
  return out.str();
}

std::string summary_line(const VerificationReport& r, bool timing) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  residual %.3e  tol %.1e", r.residual, r.tolerance);
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.check_id + buf;
  if (timing) s += "  " + std::to_string(r.runtime_ms) + " ms";
  auto err = r.params.find("error");
  if (err != r.params.end()) s += "  error: " + err->second;
  return s;
}

}  // namespace siegel
