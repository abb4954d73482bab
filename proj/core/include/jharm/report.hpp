#pragma once

#include <array>
#include <string>
#include <vector>

namespace jharm {

// Uniform result record for every inequality check.
struct DiagnosticReport {
  std::string check;
  double bound = 0.0;      // theoretical side (constant, target exponent, ...)
  double empirical = 0.0;  // measured side
  double ratio = 0.0;      // empirical / bound unless the check defines otherwise
  std::string verdict;     // "pass" | "fail" | "inconclusive"
  std::vector<std::array<double, 2>> samples;  // supporting (x, y) pairs
  std::string notes;

  // Stable field order; doubles round-trip; non-finite values are encoded as
  // the strings "inf" / "-inf" / "nan" (JSON has no literals for them).
  std::string to_json() const;
};

// {"checks": [...]} with the reports in the given order.
std::string reports_to_json(const std::vector<DiagnosticReport>& reports);

}  // namespace jharm
