// verify: run the verification suites and write a report.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siegel/report.hpp"
#include "siegel/verify.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t end = std::min(item.find(',', start), item.size());
      if (end > start) out.push_back(item.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run the Siegel half-space verification suites"};

  std::vector<std::string> suites_raw{"all"};
  int dim = 0;
  std::optional<double> lambda;
  std::string engine = "tensor";
  long long samples = 1'000'000;
  std::string seed_text = "0xC0FFEE";
  std::vector<std::string> tol_raw;
  std::string output;
  std::string format = "json";
  bool timing = false;
  bool quiet = false;
  int workers = 0;

  std::string suite_help = "Suites to run (comma separated): all";
  for (const auto& s : siegel::suite_ids()) suite_help += ", " + s;
  app.add_option("--suites", suites_raw, suite_help)->delimiter(',');
  app.add_option("--dim", dim, "Restrict to dimension n (0 = every dimension a suite covers)")
      ->check(CLI::IsMember({0, 1, 2}));
  app.add_option("--lambda", lambda, "Replace the default lambda grid by this value")
      ->check(CLI::Range(-1.0, 1e6).description("> -1"));
  app.add_option("--engine", engine, "Quadrature engine for n = 1 integrals")
      ->check(CLI::IsMember({"tensor", "mc"}));
  app.add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed_text, "Seed for Monte Carlo and sample grids (decimal or 0x hex)");
  app.add_option("--tol", tol_raw, "Tolerance override class=value (repeatable)");
  app.add_option("--output", output, "Report path (default: $SIEGEL_REPORT_DIR or ., file verify-report.<format>)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--workers", workers, "Quadrature worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", timing, "Record runtime_ms in the report (breaks byte-identical reruns)");
  app.add_flag("--quiet", quiet, "Print only failing checks and the totals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  siegel::SuiteConfig cfg;
  cfg.dim = dim;
  cfg.lambda = lambda;
  if (lambda && !(*lambda > -1.0)) {
    std::cerr << "verify: --lambda must exceed -1\n";
    return 2;
  }
  cfg.engine = engine == "mc" ? siegel::Engine::MC : siegel::Engine::Tensor;
  cfg.samples = samples;
  cfg.workers = workers;
  try {
    std::size_t used = 0;
    cfg.seed = std::stoull(seed_text, &used, 0);
    if (used != seed_text.size()) throw std::invalid_argument(seed_text);
  } catch (const std::exception&) {
    std::cerr << "verify: invalid --seed '" << seed_text << "'\n";
    return 2;
  }
  for (const auto& t : tol_raw) {
    const auto eq = t.find('=');
    double v = 0.0;
    try {
      if (eq == std::string::npos) throw std::invalid_argument(t);
      v = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "verify: --tol expects class=value, got '" << t << "'\n";
      return 2;
    }
    const std::string key = t.substr(0, eq);
    if (!siegel::default_tolerances().count(key)) {
      std::cerr << "verify: unknown tolerance class '" << key << "'; known:";
      for (const auto& [k, d] : siegel::default_tolerances()) std::cerr << ' ' << k;
      std::cerr << '\n';
      return 2;
    }
    cfg.tolerances[key] = v;
  }

  const std::vector<std::string> suites = split_commas(suites_raw);
  if (suites.empty()) {
    std::cerr << "verify: no suites given\n";
    return 2;
  }
  for (const auto& s : suites) {
    if (!siegel::is_suite(s)) {
      std::cerr << "verify: unknown suite '" << s << "'\n" << app.help();
      return 2;
    }
  }

  std::filesystem::path path = output;
  if (output.empty()) {
    const char* dir = std::getenv("SIEGEL_REPORT_DIR");
    path = std::filesystem::path(dir && *dir ? dir : ".") / ("verify-report." + format);
  }

  std::vector<siegel::VerificationReport> reports;
  try {
    reports = siegel::run_suites(suites, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }

  const siegel::ReportMeta meta{suites, cfg, timing};
  const std::string text = format == "csv" ? siegel::to_csv(reports, meta) : siegel::to_json(reports, meta);
  {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
      std::cerr << "verify: cannot write report to " << path << '\n';
      return 3;
    }
  }

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    if (!quiet || !r.passed) std::cout << siegel::summary_line(r, timing) << '\n';
  }
  std::cout << reports.size() - failed << "/" << reports.size() << " checks passed; report written to "
            << path.string() << '\n';
  return failed == 0 ? 0 : 1;
}
