#include "tcshift/tc_shift.hpp"

#include <cmath>
#include <string>

#include "tcshift/error.hpp"
#include "tcshift/shifts.hpp"

namespace tcshift {
namespace {

void require_probability(const AtomicMeasure1D& m, const char* name) {
  if (!m.is_probability()) {
    throw Error(ErrorCode::NotProbability, std::string(name) + " is not a probability measure "
                                               "(total mass " + std::to_string(m.total_mass()) +
                                               ")");
  }
}

void require_no_atom_at_zero(const AtomicMeasure1D& m, const char* name) {
  if (m.has_atom_at_zero()) {
    throw Error(ErrorCode::AtomAtZero, std::string(name) + " has atom at 0");
  }
}

// gamma_{k+1} / gamma_k for k = 0..depth.
std::vector<double> squared_weights(const AtomicMeasure1D& m, int depth, const char* name) {
  if (m.max_location() == 0.0) {
    throw Error(ErrorCode::DegenerateMeasure, std::string(name) + " is delta_0");
  }
  std::vector<double> out;
  out.reserve(depth + 1);
  double previous = 1.0;
  for (int k = 0; k <= depth; ++k) {
    const double next = integrate_poly(m, k + 1);
    out.push_back(next / previous);
    previous = next;
  }
  return out;
}

}  // namespace

TCInstance TCInstance::build(AtomicMeasure1D xi_x, AtomicMeasure1D eta_y, AtomicMeasure1D xi,
                             AtomicMeasure1D eta, double a, int depth) {
  require_probability(xi_x, "xi_x");
  require_probability(eta_y, "eta_y");
  require_probability(xi, "xi");
  require_probability(eta, "eta");
  require_no_atom_at_zero(xi, "xi");
  require_no_atom_at_zero(eta, "eta");
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::InvalidWeight, "a must be positive, got " + std::to_string(a));
  }
  if (depth < 1) throw Error(ErrorCode::DepthExceeded, "depth must be at least 1");

  TCInstance inst;
  inst.depth_ = depth;
  inst.a_ = a;
  inst.recip_norm_xi_ = reciprocal_norm(xi);
  inst.recip_norm_eta_ = reciprocal_norm(eta);
  inst.x_sq_ = squared_weights(xi_x, depth, "xi_x");
  inst.y_sq_ = squared_weights(eta_y, depth, "eta_y");

  // xi is the Berger measure of shift(alpha_1, alpha_2, ...), so alpha_k is
  // the (k-1)-th weight it generates.
  const auto xi_sq = squared_weights(xi, depth, "xi");
  const auto eta_sq = squared_weights(eta, depth, "eta");
  inst.core_alpha_sq_.assign(depth + 1, 0.0);
  inst.core_beta_sq_.assign(depth + 1, 0.0);
  for (int k = 1; k <= depth; ++k) {
    inst.core_alpha_sq_[k] = xi_sq[k - 1];
    inst.core_beta_sq_[k] = eta_sq[k - 1];
  }

  inst.bottom_beta_sq_.assign(depth + 1, 0.0);
  inst.bottom_beta_sq_[0] = inst.y_sq_[0];
  if (depth >= 1) inst.bottom_beta_sq_[1] = a * a * inst.y_sq_[0] / inst.x_sq_[0];
  for (int k = 1; k < depth; ++k) {
    inst.bottom_beta_sq_[k + 1] = inst.bottom_beta_sq_[k] * inst.core_alpha_sq_[k] / inst.x_sq_[k];
  }

  inst.left_alpha_sq_.assign(depth + 1, 0.0);
  inst.left_alpha_sq_[0] = inst.x_sq_[0];
  if (depth >= 1) inst.left_alpha_sq_[1] = a * a;
  for (int k = 1; k < depth; ++k) {
    inst.left_alpha_sq_[k + 1] = inst.left_alpha_sq_[k] * inst.core_beta_sq_[k] / inst.y_sq_[k];
  }

  inst.xi_x_ = std::move(xi_x);
  inst.eta_y_ = std::move(eta_y);
  inst.xi_ = std::move(xi);
  inst.eta_ = std::move(eta);
  return inst;
}

void TCInstance::check_index(int k1, int k2) const {
  if (k1 < 0 || k2 < 0 || k1 > depth_ || k2 > depth_) {
    throw Error(ErrorCode::DepthExceeded, "index (" + std::to_string(k1) + ", " +
                                              std::to_string(k2) + ") outside depth " +
                                              std::to_string(depth_));
  }
}

double TCInstance::weight_sq(int k1, int k2, Direction direction) const {
  check_index(k1, k2);
  if (direction == Direction::Horizontal) {
    if (k2 == 0) return x_sq_[k1];
    if (k1 == 0) return left_alpha_sq_[k2];
    return core_alpha_sq_[k1];
  }
  if (k1 == 0) return y_sq_[k2];
  if (k2 == 0) return bottom_beta_sq_[k1];
  return core_beta_sq_[k2];
}

double TCInstance::weight(int k1, int k2, Direction direction) const {
  return std::sqrt(weight_sq(k1, k2, direction));
}

double TCInstance::moment_along(int k1, int k2, PathOrder order) const {
  check_index(k1, k2);
  double gamma = 1.0;
  if (order == PathOrder::RowFirst) {
    for (int i = 0; i < k1; ++i) gamma *= weight_sq(i, 0, Direction::Horizontal);
    for (int j = 0; j < k2; ++j) gamma *= weight_sq(k1, j, Direction::Vertical);
  } else {
    for (int j = 0; j < k2; ++j) gamma *= weight_sq(0, j, Direction::Vertical);
    for (int i = 0; i < k1; ++i) gamma *= weight_sq(i, k2, Direction::Horizontal);
  }
  return gamma;
}

H0Report check_membership_H0(const TCInstance& inst, int depth) {
  H0Report report;
  report.depth = depth;
  for (int k = 1; k <= depth; ++k) {
    const double row_head = inst.weight(0, k, Direction::Horizontal);
    if (!one_var_backward_extension(row_head, inst.xi()).subnormal) {
      report.pass = false;
      report.first_failure = SliceRef{Direction::Horizontal, k};
      return report;
    }
    const double column_head = inst.weight(k, 0, Direction::Vertical);
    if (!one_var_backward_extension(column_head, inst.eta()).subnormal) {
      report.pass = false;
      report.first_failure = SliceRef{Direction::Vertical, k};
      return report;
    }
  }
  return report;
}

RestrictedMoments restrict(const TCInstance& inst, int i, int j) {
  return RestrictedMoments(inst, i, j);
}

// FlatInstance ---------------------------------------------------------------

namespace {

constexpr double kFlatSlack = 1e-12;

[[noreturn]] void flat_error(const std::string& what) {
  throw Error(ErrorCode::InvalidFlat, what);
}

void check_unit_mass(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    flat_error(std::string(name) + " must lie in [0, 1]");
  }
}

void check_remainder(double remainder, const std::optional<AtomicMeasure1D>& measure,
                     const char* name, double forbidden) {
  if (remainder < -kFlatSlack) flat_error(std::string("masses exceed 1 before ") + name);
  if (remainder <= kFlatSlack) return;
  if (!measure || measure->empty()) {
    flat_error(std::string(name) + " is required when the point masses leave mass " +
               std::to_string(remainder));
  }
  if (!measure->is_probability()) flat_error(std::string(name) + " must be a probability measure");
  if (measure->mass_at(0.0) != 0.0) flat_error(std::string(name) + " charges 0");
  if (measure->mass_at(forbidden) != 0.0) {
    flat_error(std::string(name) + " charges " + std::to_string(forbidden));
  }
}

AtomicMeasure1D mixture(double at_zero, double at_point, double point, double remainder,
                        const std::optional<AtomicMeasure1D>& rest) {
  std::vector<Atom1D> atoms{{0.0, at_zero}, {point, at_point}};
  if (remainder > kFlatSlack && rest) {
    for (const auto& a : rest->atoms()) atoms.push_back({a.location, remainder * a.mass});
  }
  return AtomicMeasure1D(std::move(atoms));
}

}  // namespace

void FlatInstance::validate() const {
  check_unit_mass(p, "p");
  check_unit_mass(q, "q");
  check_unit_mass(l, "l");
  check_unit_mass(m, "m");
  if (!(b > 0.0) || !std::isfinite(b)) flat_error("b must be positive");
  if (!(a > 0.0) || !std::isfinite(a)) flat_error("a must be positive");
  if (a > b) flat_error("a must not exceed b");
  check_remainder(1.0 - (p + q), rho, "rho", 1.0);
  check_remainder(1.0 - (l + m), sigma, "sigma", b * b);
}

AtomicMeasure1D FlatInstance::xi_x() const {
  return mixture(p, q, 1.0, 1.0 - (p + q), rho);
}

AtomicMeasure1D FlatInstance::eta_y() const {
  return mixture(l, m, b * b, 1.0 - (l + m), sigma);
}

double FlatInstance::y0_sq() const {
  const double remainder = 1.0 - (l + m);
  double tail = 0.0;
  if (remainder > kFlatSlack && sigma) tail = remainder * integrate_poly(*sigma, 1);
  return m * b * b + tail;
}

TCInstance FlatInstance::to_tc(int depth) const {
  validate();
  return TCInstance::build(xi_x(), eta_y(), AtomicMeasure1D::dirac(1.0),
                           AtomicMeasure1D::dirac(b * b), a, depth);
}

}  // namespace tcshift
