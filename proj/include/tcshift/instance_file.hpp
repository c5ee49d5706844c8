#pragma once

// JSON instance files.
//
//   {"kind": "tc",
//    "xi_x": {"atoms": [[0, 0.5], [1, 0.5]]}, "eta_y": {...}, "xi": {...}, "eta": {...},
//    "a": 0.7071067811865476,
//    "options": {"tol": 1e-10, "order": 12, "window": 4}}
//
//   {"kind": "flat", "p": 0.5, "q": 0.5, "l": 0.5, "m": 0.5, "b": 1, "a": 0.7071,
//    "rho": {"atoms": [...]}, "sigma": {"atoms": [...]}}
//
// Structural problems (bad JSON, missing fields, wrong types) raise
// Error(ParseError); everything else is a validation error raised while
// building the instance.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tcshift/measure.hpp"
#include "tcshift/tc_shift.hpp"

namespace tcshift {

struct TcSpec {
  AtomicMeasure1D xi_x;
  AtomicMeasure1D eta_y;
  AtomicMeasure1D xi;
  AtomicMeasure1D eta;
  double a = 1.0;
};

struct InstanceOptions {
  std::optional<double> tol;
  std::optional<int> order;
  std::optional<int> window;
};

struct InstanceFile {
  std::variant<TcSpec, FlatInstance> spec;
  InstanceOptions options;

  bool is_flat() const { return std::holds_alternative<FlatInstance>(spec); }
  const FlatInstance& flat() const { return std::get<FlatInstance>(spec); }

  /// The validated TC instance (flat files embed with xi = delta_1,
  /// eta = delta_{b^2}).
  TCInstance build(int depth = kDefaultDepth) const;

  /// Copy with one scalar parameter replaced ("a" for tc files; a, b, p, q,
  /// l, m for flat files).  Throws Error(ParseError) on an unknown name.
  InstanceFile with_parameter(std::string_view name, double value) const;
};

InstanceFile parse_instance_text(std::string_view text);
/// Reads, parses and validates.  Throws Error(ParseError) when the file
/// cannot be read.
InstanceFile parse_instance(const std::filesystem::path& path);

}  // namespace tcshift
