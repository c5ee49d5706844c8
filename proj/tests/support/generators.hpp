#pragma once

// Seeded random instances for property tests.
//
// Atoms are drawn on [0.1, 4] (1 to 4 of them) with Dirichlet-uniform masses.
// The subnormal generator runs the reconstruction backwards: it picks psi and
// phi first (both positive) and then solves for xi_x and eta_y, so the
// resulting instance is subnormal by construction.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "tcshift/measure.hpp"
#include "tcshift/tc_shift.hpp"

namespace testgen {

using tcshift::Atom1D;
using tcshift::AtomicMeasure1D;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Uniform point of the (n-1)-simplex.
  std::vector<double> dirichlet(int n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (auto& x : w) sum += (x = e(engine_) + 1e-3);
    for (auto& x : w) x /= sum;
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

/// Probability measure with 1..max_atoms atoms on [lo, hi], atoms at least
/// 1e-3 apart so that no two are merged.
inline AtomicMeasure1D random_probability(Rng& rng, double lo = 0.1, double hi = 4.0,
                                          int max_atoms = 4) {
  const int n = rng.integer(1, max_atoms);
  std::vector<double> locations;
  while (static_cast<int>(locations.size()) < n) {
    const double x = rng.uniform(lo, hi);
    if (std::none_of(locations.begin(), locations.end(),
                     [x](double y) { return std::abs(x - y) < 1e-3; })) {
      locations.push_back(x);
    }
  }
  const auto w = rng.dirichlet(n);
  std::vector<Atom1D> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back({locations[i], w[i]});
  return AtomicMeasure1D(std::move(atoms));
}

inline std::vector<Atom1D> scaled(const AtomicMeasure1D& m, double c) {
  std::vector<Atom1D> out;
  for (const auto& a : m.atoms()) out.push_back({a.location, c * a.mass});
  return out;
}

inline double recip(const AtomicMeasure1D& m) {
  double r = 0.0;
  for (const auto& a : m.atoms()) r += a.mass / a.location;
  return r;
}

struct SubnormalOptions {
  /// Force y0^2 ||1/t||_{(eta_y)_1} = 1, the equality case of the backward
  /// extension (eta_y then has no atom at 0 and phi vanishes).
  bool equality = false;
};

inline tcshift::TCInstance random_subnormal(Rng& rng, SubnormalOptions opt = {}) {
  const auto xi = random_probability(rng);
  const auto eta = random_probability(rng);
  const double c = rng.uniform(0.05, 0.95);  // a^2 ||1/s||_xi
  const double a = std::sqrt(c / recip(xi));

  // (eta_y)_1 = psi + c eta, psi of mass 1 - c.
  const auto psi_shape = random_probability(rng);
  std::vector<Atom1D> eta_y1 = scaled(psi_shape, 1.0 - c);
  for (const auto& at : scaled(eta, c)) eta_y1.push_back(at);
  const AtomicMeasure1D eta_y1_m(eta_y1);
  const double n_eta_y1 = recip(eta_y1_m);

  const double u = opt.equality ? 1.0 : rng.uniform(0.3, 0.95);
  const double y0_sq = u / n_eta_y1;

  std::vector<Atom1D> eta_y;
  for (const auto& at : eta_y1_m.atoms()) eta_y.push_back({at.location, y0_sq * at.mass / at.location});
  if (u < 1.0) eta_y.push_back({0.0, 1.0 - u});

  // xi_x = phi + y0^2 ||1/t||_psi delta_0 + c y0^2 ||1/t||_eta xi~.
  std::vector<Atom1D> xi_x;
  if (u < 1.0) {
    AtomicMeasure1D phi_shape = random_probability(rng, 0.0, 4.0);
    if (rng.coin()) phi_shape = AtomicMeasure1D(
        [&] { auto v = scaled(phi_shape, 0.5); v.push_back({0.0, 0.5}); return v; }());
    for (const auto& at : scaled(phi_shape, 1.0 - u)) xi_x.push_back(at);
  }
  xi_x.push_back({0.0, y0_sq * (1.0 - c) * recip(psi_shape)});
  const double k = c * y0_sq * recip(eta) / recip(xi);
  for (const auto& at : xi.atoms()) xi_x.push_back({at.location, k * at.mass / at.location});

  return tcshift::TCInstance::build(AtomicMeasure1D(xi_x), AtomicMeasure1D(eta_y), xi, eta, a);
}

/// psi >= 0 by construction, while xi_x is redrawn freely, so phi may fail.
inline tcshift::TCInstance random_psi_positive(Rng& rng) {
  const auto base = random_subnormal(rng);
  return tcshift::TCInstance::build(random_probability(rng, 0.0, 4.0), base.eta_y(), base.xi(),
                                    base.eta(), base.a());
}

/// Arbitrary instance: random xi_x, eta_y, xi, eta, with a chosen so that
/// a^2 ||1/s||_xi <= 1 half of the time.
inline tcshift::TCInstance random_instance(Rng& rng) {
  const auto xi_x = random_probability(rng, 0.0, 4.0);
  const auto eta_y = random_probability(rng, 0.0, 4.0);
  const auto xi = random_probability(rng);
  const auto eta = random_probability(rng);
  const double c = rng.coin() ? rng.uniform(0.05, 1.0) : rng.uniform(1.0, 3.0);
  return tcshift::TCInstance::build(xi_x, eta_y, xi, eta, std::sqrt(c / recip(xi)));
}

/// Flat instance; half are constructed to satisfy the flat criterion, the
/// other half are drawn freely.
inline tcshift::FlatInstance random_flat(Rng& rng) {
  tcshift::FlatInstance f;
  f.b = rng.uniform(0.5, 2.0);
  const double b_sq = f.b * f.b;
  const auto w = rng.dirichlet(3);
  f.l = w[0];
  f.m = w[1];
  if (rng.coin()) {
    f.sigma = random_probability(rng);
  } else {
    f.m += w[2];
  }
  const double y0_sq = f.y0_sq();

  if (rng.coin()) {
    // a^2 <= min(b^2, m b^2 / y0^2) keeps psi >= 0; then choose p, q above
    // the flat bound.
    const double a_sq = rng.uniform(0.05, 1.0) * std::min(b_sq, f.m * b_sq / y0_sq);
    f.a = std::sqrt(a_sq);
    const double r = y0_sq * a_sq / b_sq;
    const auto extra = rng.dirichlet(3);
    f.p = std::max(0.0, 1.0 - f.l - r) + f.l * extra[0];
    f.q = r + f.l * extra[1];
  } else {
    f.a = f.b * rng.uniform(0.05, 1.0);
    const auto pq = rng.dirichlet(3);
    f.p = pq[0];
    f.q = pq[1];
  }
  if (1.0 - f.p - f.q > 1e-12) {
    // rho must avoid 0 and 1.
    AtomicMeasure1D rho;
    do {
      rho = random_probability(rng);
    } while (rho.mass_at(1.0) != 0.0);
    f.rho = rho;
  } else {
    f.q = 1.0 - f.p;
  }
  return f;
}

}  // namespace testgen
