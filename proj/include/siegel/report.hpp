#pragma once

// Serialisation of verification reports (JSON schema "siegel-verify-report", version 1, and CSV).

#include <string>
#include <vector>

#include "siegel/verify.hpp"

namespace siegel {

inline constexpr const char* kReportSchema = "siegel-verify-report";
inline constexpr int kReportVersion = 1;

struct ReportMeta {
  std::vector<std::string> suites;
  SuiteConfig config;
  /// Emit runtime_ms; off by default so reruns are byte-identical.
  bool timing = false;
};

std::string to_json(const std::vector<VerificationReport>& reports, const ReportMeta& meta);
std::string to_csv(const std::vector<VerificationReport>& reports, const ReportMeta& meta);
/// "PASS check_id  residual <= tolerance" style line for the console.
std::string summary_line(const VerificationReport& r, bool timing);

}  // namespace siegel
