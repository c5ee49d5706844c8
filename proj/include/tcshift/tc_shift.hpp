#pragma once

// Two-variable weighted shifts whose core is of tensor form.
//
// Weight diagram (alpha = horizontal, beta = vertical):
//   row 0     alpha_(k,0) = x_k        from xi_x
//   column 0  beta_(0,k)  = y_k        from eta_y
//   core      alpha_(k1,k2) = alpha_k1 from xi    (k1, k2 >= 1)
//             beta_(k1,k2)  = beta_k2  from eta   (k1, k2 >= 1)
//   alpha_(0,1) = a
// and the remaining boundary weights are forced by commutativity:
//   beta_(k1,0)^2    = a^2 y0^2 (alpha_1..alpha_{k1-1})^2 / (x_0..x_{k1-1})^2
//   alpha_(0,k2+1)   = alpha_(0,k2) beta_k2 / y_k2

#include <functional>
#include <optional>
#include <vector>

#include "tcshift/measure.hpp"

namespace tcshift {

enum class Direction { Horizontal, Vertical };
enum class PathOrder { RowFirst, ColumnFirst };

inline constexpr int kDefaultDepth = 32;

class TCInstance {
 public:
  /// Validates and caches the weight diagram up to index `depth` in each
  /// direction.  Throws Error(AtomAtZero) if xi or eta charge the origin,
  /// Error(NotProbability), Error(InvalidWeight) if a <= 0, and
  /// Error(DegenerateMeasure) if xi_x or eta_y is delta_0.
  static TCInstance build(AtomicMeasure1D xi_x, AtomicMeasure1D eta_y, AtomicMeasure1D xi,
                          AtomicMeasure1D eta, double a, int depth = kDefaultDepth);

  const AtomicMeasure1D& xi_x() const { return xi_x_; }
  const AtomicMeasure1D& eta_y() const { return eta_y_; }
  const AtomicMeasure1D& xi() const { return xi_; }
  const AtomicMeasure1D& eta() const { return eta_; }
  double a() const { return a_; }
  int depth() const { return depth_; }

  double x0_sq() const { return x_sq_[0]; }
  double y0_sq() const { return y_sq_[0]; }
  /// ||1/s||_{L^1(xi)}
  double recip_norm_xi() const { return recip_norm_xi_; }
  /// ||1/t||_{L^1(eta)}
  double recip_norm_eta() const { return recip_norm_eta_; }

  /// alpha_(k1,k2) or beta_(k1,k2).  Throws Error(DepthExceeded).
  double weight(int k1, int k2, Direction direction) const;
  double weight_sq(int k1, int k2, Direction direction) const;

  /// gamma_(k1,k2), computed along the row-first path of the moment
  /// definition (row 0 out to k1, then up column k1).
  double moment(int k1, int k2) const { return moment_along(k1, k2, PathOrder::RowFirst); }
  double moment_along(int k1, int k2, PathOrder order) const;

 private:
  TCInstance() = default;
  void check_index(int k1, int k2) const;

  AtomicMeasure1D xi_x_, eta_y_, xi_, eta_;
  double a_ = 0.0;
  int depth_ = 0;
  double recip_norm_xi_ = 0.0;
  double recip_norm_eta_ = 0.0;
  // Squared weights, index 0..depth.
  std::vector<double> x_sq_, y_sq_;
  std::vector<double> core_alpha_sq_, core_beta_sq_;  // index 0 unused
  std::vector<double> bottom_beta_sq_;                // beta_(k1,0)^2
  std::vector<double> left_alpha_sq_;                 // alpha_(0,k2)^2
};

inline double weight_at(const TCInstance& inst, int k1, int k2, Direction direction) {
  return inst.weight(k1, k2, direction);
}

/// Row k2 (direction Horizontal) or column k1 (Vertical) that failed.
struct SliceRef {
  Direction direction;
  int index;
};

struct H0Report {
  bool pass = true;
  int depth = 0;
  std::optional<SliceRef> first_failure;
};

/// Checks rows 1..depth and columns 1..depth for subnormality via the
/// one-variable backward extension; row 0 and column 0 are subnormal by
/// construction.
H0Report check_membership_H0(const TCInstance& inst, int depth);

/// Moments of R_ij(T), the restriction to {k2 >= i} and {k1 >= j}:
/// gamma'_(k1,k2) = gamma_(k1+j, k2+i) / gamma_(j,i).
class RestrictedMoments {
 public:
  RestrictedMoments(TCInstance inst, int i, int j) : inst_(std::move(inst)), i_(i), j_(j) {}
  double operator()(int k1, int k2) const {
    return inst_.moment(k1 + j_, k2 + i_) / inst_.moment(j_, i_);
  }

 private:
  TCInstance inst_;
  int i_;
  int j_;
};

RestrictedMoments restrict(const TCInstance& inst, int i, int j);

/// Flat shifts: xi = delta_1, eta = delta_{b^2} and
///   xi_x  = p delta_0 + q delta_1 + (1 - p - q) rho
///   eta_y = l delta_0 + m delta_{b^2} + (1 - l - m) sigma
struct FlatInstance {
  double p = 0.0;
  double q = 0.0;
  std::optional<AtomicMeasure1D> rho;
  double l = 0.0;
  double m = 0.0;
  std::optional<AtomicMeasure1D> sigma;
  double b = 1.0;
  double a = 1.0;

  /// Throws Error(InvalidFlat) naming the violated constraint.
  void validate() const;

  AtomicMeasure1D xi_x() const;
  AtomicMeasure1D eta_y() const;
  /// y0^2 = m b^2 + (1 - l - m) int t dsigma.
  double y0_sq() const;
  TCInstance to_tc(int depth = kDefaultDepth) const;
};

}  // namespace tcshift
