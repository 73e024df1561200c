#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "incol/incidence.hpp"

namespace incol {

enum class ScanFormat { csv, json };

/// Batch description. Instances expand in order: families as listed, argument
/// combinations with the last argument varying fastest, then seeds.
///
///   {"schema": 1,
///    "families": [{"family": "cycle", "args": [{"from": 3, "to": 12}]},
///                 {"family": "random_gnp", "args": [8, 0.5], "seeds": {"from": 0, "to": 199}}],
///    "guard": 120, "exact": true, "format": "csv", "out": "rows.csv", "timing": false, "jobs": 1}
struct ScanSpec {
  std::vector<std::string> instances;  ///< family strings accepted by parse_family
  int arc_guard = kDefaultArcGuard;
  bool exact = true;
  ScanFormat format = ScanFormat::csv;
  std::optional<std::string> out;
  bool timing = false;
  int jobs = 1;
};

/// Throws std::invalid_argument on a malformed spec.
ScanSpec parse_scan_spec(const nlohmann::json& j);

struct ScanRow {
  std::string id;
  std::optional<int> n, m, max_degree, gamma, st, chi_prime, domination_lower, star_forest_upper, chi_i;
  bool sandwich_violation = false;
  double runtime_ms = 0.0;
  std::string error;
};

/// Column order of the CSV output (runtime_ms only with timing).
std::vector<std::string> scan_columns(bool timing);

ScanRow scan_instance(const std::string& instance, int arc_guard, bool exact);

/// Rows in spec order, whatever the number of worker threads.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

std::string format_scan(const std::vector<ScanRow>& rows, ScanFormat format, bool timing);

}  // namespace incol
