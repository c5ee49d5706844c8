#include "tcshift/shifts.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tcshift/error.hpp"

namespace tcshift {
namespace {

// Slack on the scalar inequality x0^2 ||1/s|| <= 1.
constexpr double kRatioSlack = 1e-12;

void require_probability(const AtomicMeasure1D& m) {
  if (!m.is_probability()) {
    throw Error(ErrorCode::NotProbability,
                "expected a probability measure, total mass is " + std::to_string(m.total_mass()));
  }
}

}  // namespace

MomentSequence::MomentSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 1.0) {
    throw Error(ErrorCode::InvalidMeasure, "moment sequence must start with gamma_0 = 1");
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidMeasure, "moments must be finite and positive");
    }
  }
}

MomentSequence MomentSequence::of_measure(const AtomicMeasure1D& m, std::size_t count) {
  require_probability(m);
  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) values[k] = integrate_poly(m, static_cast<int>(k));
  if (!values.empty()) values[0] = 1.0;
  return MomentSequence(std::move(values));
}

MomentSequence MomentSequence::of_weights(std::span<const double> weights) {
  std::vector<double> values;
  values.reserve(weights.size() + 1);
  values.push_back(1.0);
  for (double w : weights) values.push_back(values.back() * w * w);
  return MomentSequence(std::move(values));
}

WeightSequence::WeightSequence(std::vector<double> prefix, std::optional<double> tail,
                               double norm_bound)
    : prefix_(std::move(prefix)), tail_(tail), norm_bound_(norm_bound) {
  auto valid = [&](double w) { return w > 0.0 && std::isfinite(w); };
  for (double w : prefix_) {
    if (!valid(w)) throw Error(ErrorCode::InvalidWeight, "weights must be positive and finite");
  }
  if (tail_ && !valid(*tail_)) {
    throw Error(ErrorCode::InvalidWeight, "tail weight must be positive and finite");
  }
}

double WeightSequence::operator[](std::size_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  if (tail_) return *tail_;
  throw Error(ErrorCode::DepthExceeded,
              "weight index " + std::to_string(k) + " beyond computed prefix");
}

WeightSequence weights_from_measure(const AtomicMeasure1D& m, std::size_t n) {
  require_probability(m);
  if (m.max_location() == 0.0) {
    throw Error(ErrorCode::DegenerateMeasure, "delta_0 has no nonzero moments");
  }
  std::vector<double> weights;
  weights.reserve(n);
  double previous = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = integrate_poly(m, static_cast<int>(k + 1));
    weights.push_back(std::sqrt(next / previous));
    previous = next;
  }
  // With a single atom off the origin every weight from index 1 on equals
  // sqrt(location).
  std::optional<double> tail;
  const auto atoms = m.atoms();
  const std::size_t off_origin = m.has_atom_at_zero() ? atoms.size() - 1 : atoms.size();
  if (off_origin == 1 && n >= 1) tail = std::sqrt(m.max_location());
  return WeightSequence(std::move(weights), tail, std::sqrt(m.max_location()));
}

AtomicMeasure1D two_atom_measure(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw Error(ErrorCode::InvalidWeight, "weights must be positive");
  }
  if (alpha > beta) {
    throw Error(ErrorCode::NotSubnormal, "shift(alpha, beta, beta, ...) with alpha > beta "
                                         "is not subnormal");
  }
  const double r = (alpha * alpha) / (beta * beta);
  return AtomicMeasure1D({{0.0, 1.0 - r}, {beta * beta, r}});
}

AtomicMeasure1D restriction_measure(const AtomicMeasure1D& m, int h) {
  const double gamma_h = integrate_poly(m, h);
  if (!(gamma_h > 0.0)) {
    throw Error(ErrorCode::DegenerateMeasure,
                "moment gamma_" + std::to_string(h) + " vanishes; restriction undefined");
  }
  std::vector<Atom1D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) {
    out.push_back({a.location, a.mass * std::pow(a.location, h) / gamma_h});
  }
  return AtomicMeasure1D(std::move(out));
}

OneVarExtension one_var_backward_extension(double x0, const AtomicMeasure1D& m) {
  OneVarExtension result;
  if (m.has_atom_at_zero()) {
    result.ratio = std::numeric_limits<double>::infinity();
    return result;
  }
  result.ratio = x0 * x0 * reciprocal_norm(m);
  if (result.ratio > 1.0 + kRatioSlack) return result;

  const double scale = x0 * x0;  // ratio * (mass / (s * ||1/s||)) = x0^2 mass / s
  std::vector<Atom1D> atoms;
  atoms.reserve(m.size() + 1);
  for (const auto& a : m.atoms()) atoms.push_back({a.location, scale * a.mass / a.location});
  const double at_origin = 1.0 - result.ratio;
  if (at_origin > 0.0) atoms.push_back({0.0, at_origin});
  result.subnormal = true;
  result.measure = AtomicMeasure1D(std::move(atoms));
  return result;
}

}  // namespace tcshift
