#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcshift/oracle.hpp"
#include "tcshift/reconstruct.hpp"
#include "tcshift/tc_shift.hpp"

namespace tcshift {

struct LabeledHankel {
  std::string label;  // "row 2", "column 0", ...
  HankelReport report;
};

struct OracleResults {
  int order = 0;
  int window = 0;
  H0Report h0;
  std::optional<InterpolationReport> interpolation;  // subnormal verdicts only
  std::vector<LabeledHankel> hankel;
  PsdReport moment_matrix;
  PsdReport compression;
};

struct Report {
  std::string command;
  std::string kind;  // "tc" or "flat"
  Verdict verdict;
  bool include_measures = false;
  std::optional<OracleResults> oracles;
  std::optional<double> elapsed_ms;
};

/// Deterministic renderings: atoms in canonical order, fixed key order.
/// JSON numbers use the shortest representation that round-trips exactly;
/// text numbers use 6 significant digits.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

std::string_view to_string(WitnessSource source);

}  // namespace tcshift
