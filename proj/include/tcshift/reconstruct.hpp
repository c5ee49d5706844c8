#pragma once

// Subnormality of class-TC shifts and closed-form Berger measures.
//
// With (eta_y)_1 the Berger measure of shift(y_1, y_2, ...):
//
//   psi = (eta_y)_1 - a^2 ||1/s||_xi eta
//   phi = xi_x - y0^2 ||1/t||_psi delta_0
//              - a^2 y0^2 ||1/s||_xi ||1/t||_eta xi~
//
// The shift is subnormal iff psi >= 0 and phi >= 0, in which case
//
//   mu = a^2 y0^2 ||1/s||_xi ||1/t||_eta xi~ x eta~
//        + y0^2 ||1/t||_psi delta_0 x psi~ + phi x delta_0.

#include <optional>
#include <string>

#include "tcshift/measure.hpp"
#include "tcshift/tc_shift.hpp"

namespace tcshift {

enum class WitnessSource { Psi, Phi };

struct Witness {
  WitnessSource source;
  double location;
  double mass;
};

struct Diagnostics {
  double recip_norm_xi = 0.0;      // ||1/s||_{L^1(xi)}
  double recip_norm_eta = 0.0;     // ||1/t||_{L^1(eta)}
  double recip_norm_psi = 0.0;     // signed integral of 1/t against psi
  double recip_norm_eta_y1 = 0.0;  // ||1/t||_{L^1((eta_y)_1)}
};

/// subnormal <=> berger present <=> witness absent.
struct Verdict {
  bool subnormal = false;
  std::optional<Witness> witness;
  std::optional<AtomicMeasure2D> berger;
  std::string reason;
  Diagnostics diagnostics;
  SignedMeasure1D psi;
  SignedMeasure1D phi;
};

/// (eta_y)_1 = t / y0^2 d eta_y(t).
AtomicMeasure1D eta_y_shifted(const TCInstance& inst);

SignedMeasure1D compute_psi(const TCInstance& inst);
/// Throws Error(AtomAtZero) when psi charges 0.
SignedMeasure1D compute_phi(const TCInstance& inst, const SignedMeasure1D& psi);
SignedMeasure1D compute_phi(const TCInstance& inst);

/// psi is checked first; on failure the most negative atom of the first
/// non-positive measure is the witness.
Verdict subnormality_verdict(const TCInstance& inst, double tol = kPositivityTolerance);

/// Closed-form Berger measure (product-sum form).  Throws
/// Error(PreconditionViolated) when psi or phi is not positive.
AtomicMeasure2D berger_measure(const TCInstance& inst, double tol = kPositivityTolerance);

/// The same measure written as
///   phi x (delta_0 - eta~) + y0^2 ||1/t||_psi delta_0 x (psi~ - eta~) + xi_x x eta~.
/// Defined for any instance whose psi has no atom at 0; signed in general.
SignedMeasure2D berger_measure_difference_form(const TCInstance& inst);

/// Berger measure of T restricted to {k2 >= 1}:
///   mu_M = a^2 ||1/s||_xi xi~ x eta + delta_0 x psi.
/// Throws Error(PreconditionViolated) when psi is not positive.
AtomicMeasure2D measure_M(const TCInstance& inst, double tol = kPositivityTolerance);

struct ExtensionResult {
  bool subnormal = false;
  /// 0 when subnormal, otherwise the first failed condition (1, 2 or 3).
  int failed_condition = 0;
  /// Atom where condition 3 failed (location, negative mass of the difference).
  std::optional<Atom1D> failed_at;
  /// beta00^2 ||1/t||_{L^1(mu_M)}; infinite when condition 1 fails.
  double scaled_norm = 0.0;
  /// scaled_norm == 1 (within tolerance); then (mu_M)_ext^X == nu.
  bool equality_case = false;
  std::optional<AtomicMeasure2D> berger;
};

/// Subnormal backward extension of a 2-variable shift in the t direction.
/// mu_M is the Berger measure of the restriction to {k2 >= 1}, nu the Berger
/// measure of row 0 and beta00 the weight from (0,0) to (0,1).
ExtensionResult backward_extension(const AtomicMeasure2D& mu_M, const AtomicMeasure1D& nu,
                                   double beta00, double tol = kPositivityTolerance);

/// Flat specialisation, evaluated directly from (p, q, rho, l, m, sigma, b, a):
///   (b/a) sqrt(m) >= y0  and
///   xi_x >= y0^2 { (||1/t||_{(eta_y)_1} - a^2/b^2) delta_0 + (a^2/b^2) delta_1 }.
/// Throws Error(InvalidFlat).
Verdict flat_verdict(const FlatInstance& f, double tol = kPositivityTolerance);

/// psi = (m b^2 / y0^2 - a^2) delta_{b^2} + ((1 - l - m) / y0^2) t dsigma(t).
SignedMeasure1D flat_psi(const FlatInstance& f);
/// phi = xi_x - y0^2 (||1/t||_{(eta_y)_1} - a^2/b^2) delta_0 - y0^2 (a^2/b^2) delta_1.
SignedMeasure1D flat_phi(const FlatInstance& f);

/// mu = phi x (delta_0 - delta_{b^2}) + y0^2 ||1/t||_psi delta_0 x (psi~ - delta_{b^2})
///      + xi_x x delta_{b^2}.
/// (The last factor is xi_x: with delta_1 in its place the s-marginal would
/// be delta_1 rather than xi_x.)
/// Throws Error(PreconditionViolated) when the result is not positive.
AtomicMeasure2D flat_berger_measure(const FlatInstance& f, double tol = kPositivityTolerance);

}  // namespace tcshift
