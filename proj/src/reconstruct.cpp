#include "tcshift/reconstruct.hpp"

#include <cmath>
#include <limits>

#include "tcshift/error.hpp"
#include "tcshift/shifts.hpp"

namespace tcshift {
namespace {

// Slack on scalar comparisons against 1 (backward-extension condition ii and
// the equality case).
constexpr double kScalarSlack = 1e-12;

const AtomicMeasure1D kDeltaZero = AtomicMeasure1D::dirac(0.0);

// ||1/t||_m m~ = m / t, which is defined for signed m as well.
SignedMeasure1D divide_by_location(const SignedMeasure1D& m) {
  std::vector<Atom1D> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m.atoms()) {
    if (a.location == 0.0) {
      throw Error(ErrorCode::AtomAtZero, "measure has an atom at 0, so 1/t is not integrable");
    }
    atoms.push_back({a.location, a.mass / a.location});
  }
  return SignedMeasure1D(std::move(atoms));
}

Witness witness_from(WitnessSource source, const Atom1D& atom) {
  return Witness{source, atom.location, atom.mass};
}

}  // namespace

AtomicMeasure1D eta_y_shifted(const TCInstance& inst) {
  return restriction_measure(inst.eta_y(), 1);
}

SignedMeasure1D compute_psi(const TCInstance& inst) {
  const double c = inst.a() * inst.a() * inst.recip_norm_xi();
  return combine({{1.0, eta_y_shifted(inst)}, {-c, inst.eta()}});
}

SignedMeasure1D compute_phi(const TCInstance& inst, const SignedMeasure1D& psi) {
  const double y0_sq = inst.y0_sq();
  const double recip_psi = reciprocal_integral(psi);
  const double c = inst.a() * inst.a() * y0_sq * inst.recip_norm_xi() * inst.recip_norm_eta();
  return combine({{1.0, inst.xi_x()}, {-y0_sq * recip_psi, kDeltaZero}, {-c, tilde(inst.xi())}});
}

SignedMeasure1D compute_phi(const TCInstance& inst) { return compute_phi(inst, compute_psi(inst)); }

Verdict subnormality_verdict(const TCInstance& inst, double tol) {
  Verdict v;
  v.diagnostics.recip_norm_xi = inst.recip_norm_xi();
  v.diagnostics.recip_norm_eta = inst.recip_norm_eta();
  v.diagnostics.recip_norm_eta_y1 = reciprocal_norm(eta_y_shifted(inst));
  v.psi = compute_psi(inst);

  const double psi_at_zero = v.psi.mass_at(0.0);
  if (psi_at_zero != 0.0) {
    // 1/t is not integrable against mu_M, so no backward extension exists.
    v.diagnostics.recip_norm_psi = std::numeric_limits<double>::infinity();
    v.reason = "1/t is not in L^1(mu_M): psi has an atom at 0";
    v.witness = Witness{WitnessSource::Psi, 0.0, psi_at_zero};
    return v;
  }
  v.diagnostics.recip_norm_psi = reciprocal_integral(v.psi);
  v.phi = compute_phi(inst, v.psi);

  const auto psi_check = positivity(v.psi, tol);
  if (!psi_check.positive) {
    v.witness = witness_from(WitnessSource::Psi, *psi_check.witness);
    v.reason = "psi is not a positive measure";
    return v;
  }
  const auto phi_check = positivity(v.phi, tol);
  if (!phi_check.positive) {
    v.witness = witness_from(WitnessSource::Phi, *phi_check.witness);
    v.reason = "phi is not a positive measure";
    return v;
  }
  v.subnormal = true;
  v.reason = "psi and phi are positive measures";
  v.berger = berger_measure(inst, tol);
  return v;
}

AtomicMeasure2D berger_measure(const TCInstance& inst, double tol) {
  const auto psi = to_positive(compute_psi(inst), tol);
  const auto phi = to_positive(compute_phi(inst, psi), tol);
  const double y0_sq = inst.y0_sq();
  const double c = inst.a() * inst.a() * y0_sq * inst.recip_norm_xi() * inst.recip_norm_eta();

  std::vector<Term2D> terms;
  terms.emplace_back(c, product(tilde(inst.xi()), tilde(inst.eta())));
  if (!psi.empty()) {
    terms.emplace_back(y0_sq * reciprocal_norm(psi), product(kDeltaZero, tilde(psi)));
  }
  terms.emplace_back(1.0, product(phi, AtomicMeasure1D::dirac(0.0)));
  return to_positive(combine(terms), tol);
}

SignedMeasure2D berger_measure_difference_form(const TCInstance& inst) {
  const auto psi = compute_psi(inst);
  const auto phi = compute_phi(inst, psi);
  const SignedMeasure1D eta_tilde = tilde(inst.eta());
  const double y0_sq = inst.y0_sq();
  const double recip_psi = reciprocal_integral(psi);

  const SignedMeasure1D zero_minus_eta = combine({{1.0, kDeltaZero}, {-1.0, eta_tilde}});
  const SignedMeasure1D psi_part =
      combine({{1.0, divide_by_location(psi)}, {-recip_psi, eta_tilde}});
  return combine({{1.0, product(phi, zero_minus_eta)},
                  {y0_sq, product(SignedMeasure1D(kDeltaZero), psi_part)},
                  {1.0, product(SignedMeasure1D(inst.xi_x()), eta_tilde)}});
}

AtomicMeasure2D measure_M(const TCInstance& inst, double tol) {
  const auto psi = to_positive(compute_psi(inst), tol);
  const double c = inst.a() * inst.a() * inst.recip_norm_xi();
  return to_positive(combine({{c, product(tilde(inst.xi()), inst.eta())},
                              {1.0, product(kDeltaZero, psi)}}),
                     tol);
}

ExtensionResult backward_extension(const AtomicMeasure2D& mu_M, const AtomicMeasure1D& nu,
                                   double beta00, double tol) {
  ExtensionResult r;
  for (const auto& atom : mu_M.atoms()) {
    if (atom.t == 0.0) {
      r.failed_condition = 1;
      r.scaled_norm = std::numeric_limits<double>::infinity();
      return r;
    }
  }
  r.scaled_norm = beta00 * beta00 * reciprocal_norm(mu_M, Axis::Y);
  if (r.scaled_norm > 1.0 + kScalarSlack) {
    r.failed_condition = 2;
    return r;
  }
  r.equality_case = std::abs(r.scaled_norm - 1.0) <= kScalarSlack;

  const auto ext = extremal(mu_M);
  const SignedMeasure1D difference = combine({{1.0, nu}, {-r.scaled_norm, marginal(ext, Axis::X)}});
  const auto check = positivity(difference, tol);
  if (!check.positive) {
    r.failed_condition = 3;
    r.failed_at = check.witness;
    return r;
  }
  r.subnormal = true;
  r.berger = to_positive(
      combine({{r.scaled_norm, ext},
               {1.0, product(SignedMeasure1D(to_positive(difference, tol)),
                             SignedMeasure1D(kDeltaZero))}}),
      tol);
  return r;
}

// Flat shifts ----------------------------------------------------------------

namespace {

struct FlatScalars {
  double y0_sq;
  double recip_eta_y1;  // ||1/t||_{L^1((eta_y)_1)} = (1 - l) / y0^2
  double ratio;         // a^2 / b^2
};

FlatScalars flat_scalars(const FlatInstance& f) {
  const double y0_sq = f.y0_sq();
  return {y0_sq, (1.0 - f.l) / y0_sq, (f.a * f.a) / (f.b * f.b)};
}

}  // namespace

SignedMeasure1D flat_psi(const FlatInstance& f) {
  const auto s = flat_scalars(f);
  const double b_sq = f.b * f.b;
  std::vector<Atom1D> atoms{{b_sq, f.m * b_sq / s.y0_sq - f.a * f.a}};
  const double remainder = 1.0 - (f.l + f.m);
  if (f.sigma && remainder > 0.0) {
    for (const auto& a : f.sigma->atoms()) {
      atoms.push_back({a.location, remainder / s.y0_sq * a.location * a.mass});
    }
  }
  return SignedMeasure1D(std::move(atoms));
}

SignedMeasure1D flat_phi(const FlatInstance& f) {
  const auto s = flat_scalars(f);
  return combine({{1.0, f.xi_x()},
                  {-s.y0_sq * (s.recip_eta_y1 - s.ratio), kDeltaZero},
                  {-s.y0_sq * s.ratio, AtomicMeasure1D::dirac(1.0)}});
}

Verdict flat_verdict(const FlatInstance& f, double tol) {
  f.validate();
  const auto s = flat_scalars(f);
  Verdict v;
  v.diagnostics.recip_norm_xi = 1.0;
  v.diagnostics.recip_norm_eta = 1.0 / (f.b * f.b);
  v.diagnostics.recip_norm_psi = s.recip_eta_y1 - s.ratio;
  v.diagnostics.recip_norm_eta_y1 = s.recip_eta_y1;
  v.psi = flat_psi(f);
  v.phi = flat_phi(f);

  // The first condition, (b/a) sqrt(m) >= y0, is exactly the sign of the
  // atom of psi at b^2; sigma contributes only positive mass elsewhere.
  const auto psi_check = positivity(v.psi, tol);
  if (!psi_check.positive) {
    v.witness = witness_from(WitnessSource::Psi, *psi_check.witness);
    v.reason = "(b/a) sqrt(m) < y0";
    return v;
  }
  const auto phi_check = positivity(v.phi, tol);
  if (!phi_check.positive) {
    v.witness = witness_from(WitnessSource::Phi, *phi_check.witness);
    v.reason = "xi_x does not dominate y0^2 {(||1/t|| - a^2/b^2) delta_0 + (a^2/b^2) delta_1}";
    return v;
  }
  v.subnormal = true;
  v.reason = "(b/a) sqrt(m) >= y0 and xi_x dominates the flat bound";
  v.berger = flat_berger_measure(f, tol);
  return v;
}

AtomicMeasure2D flat_berger_measure(const FlatInstance& f, double tol) {
  f.validate();
  const auto s = flat_scalars(f);
  const auto psi = to_positive(flat_psi(f), tol);
  const auto phi = to_positive(flat_phi(f), tol);
  const double b_sq = f.b * f.b;
  const SignedMeasure1D delta_b = AtomicMeasure1D::dirac(b_sq);
  const double recip_psi = s.recip_eta_y1 - s.ratio;

  std::vector<Term2D> terms;
  terms.emplace_back(1.0, product(SignedMeasure1D(phi),
                                  combine({{1.0, kDeltaZero}, {-1.0, delta_b}})));
  if (!psi.empty()) {
    terms.emplace_back(s.y0_sq * recip_psi,
                       product(SignedMeasure1D(kDeltaZero),
                               combine({{1.0, tilde(psi)}, {-1.0, delta_b}})));
  }
  terms.emplace_back(1.0, product(SignedMeasure1D(f.xi_x()), delta_b));
  return to_positive(combine(terms), tol);
}

}  // namespace tcshift
