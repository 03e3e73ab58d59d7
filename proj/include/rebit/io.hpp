#pragma once

// State files and CSV check reports.
//
// A state file is a JSON document:
//
//   {
//     "field": "real" | "complex",
//     "kind": "state_vector" | "density_matrix",
//     "n_systems": <int>,
//     "data": [ ... ]
//   }
//
// `data` holds 2^n amplitudes or the 2^n x 2^n matrix in row-major order.
// Real entries are plain numbers; complex entries are [re, im] pairs. Numbers
// are written with 17 significant digits so files round-trip exactly.

#include "rebit/states.hpp"

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace rebit {

using AnyState = std::variant<RealState, ComplexState, RealDensity, ComplexDensity>;

/// %.17g rendering.
std::string format_number(double value);

std::string format_state(const AnyState &state);
/// Throws std::invalid_argument naming the violated invariant.
AnyState parse_state(const std::string &text);

void write_state_file(const std::filesystem::path &path, const AnyState &state);
AnyState read_state_file(const std::filesystem::path &path);

Field field_of(const AnyState &state);
int n_systems_of(const AnyState &state);

/// One line of a verification report. pass <=> |computed - target| <= tolerance.
struct ReportRow {
  std::string check;
  double target = 0;
  double computed = 0;
  double tolerance = 0;
  bool pass = false;

  static ReportRow numeric(std::string check, double target, double computed, double tolerance);
  /// Boolean check: target 1, computed 1 or 0, tolerance 0.
  static ReportRow boolean(std::string check, bool ok);
};

struct Report {
  std::vector<ReportRow> rows;

  void add(ReportRow row) { rows.push_back(std::move(row)); }
  void append(const Report &other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }
  bool all_pass() const;
  /// Header "check,target,computed,tolerance,pass" then one line per row.
  std::string to_csv() const;
};

}  // namespace rebit
