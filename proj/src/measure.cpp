#include "tcshift/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tcshift/error.hpp"

namespace tcshift {
namespace {

// A merged mass is treated as zero when it is within a few ulps of the sum of
// the magnitudes that produced it.
constexpr double kCancellation = 8.0 * std::numeric_limits<double>::epsilon();

struct Cluster1D {
  double location;
  double mass;
  double magnitude;
};

struct Cluster2D {
  double s;
  double t;
  double mass;
  double magnitude;
};

bool cancelled(double mass, double magnitude) {
  return mass == 0.0 || std::abs(mass) <= kCancellation * magnitude;
}

std::vector<Atom1D> canonical(std::vector<Atom1D> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom1D& a, const Atom1D& b) { return a.location < b.location; });
  std::vector<Cluster1D> clusters;
  clusters.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (!clusters.empty() && same_location(clusters.back().location, atom.location)) {
      clusters.back().mass += atom.mass;
      clusters.back().magnitude += std::abs(atom.mass);
    } else {
      clusters.push_back({atom.location, atom.mass, std::abs(atom.mass)});
    }
  }
  std::vector<Atom1D> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) {
    if (!cancelled(c.mass, c.magnitude)) out.push_back({c.location, c.mass});
  }
  return out;
}

std::vector<Atom2D> canonical(std::vector<Atom2D> atoms) {
  std::sort(atoms.begin(), atoms.end(), [](const Atom2D& a, const Atom2D& b) {
    return a.s < b.s || (a.s == b.s && a.t < b.t);
  });
  std::vector<Cluster2D> clusters;
  clusters.reserve(atoms.size());
  for (const auto& atom : atoms) {
    auto hit = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster2D& c) {
      return same_location(c.s, atom.s) && same_location(c.t, atom.t);
    });
    if (hit != clusters.end()) {
      hit->mass += atom.mass;
      hit->magnitude += std::abs(atom.mass);
    } else {
      clusters.push_back({atom.s, atom.t, atom.mass, std::abs(atom.mass)});
    }
  }
  std::vector<Atom2D> out;
  out.reserve(clusters.size());
  for (const auto& c : clusters) {
    if (!cancelled(c.mass, c.magnitude)) out.push_back({c.s, c.t, c.mass});
  }
  std::sort(out.begin(), out.end(), [](const Atom2D& a, const Atom2D& b) {
    return a.s < b.s || (a.s == b.s && a.t < b.t);
  });
  return out;
}

void check_location(double location) {
  if (!std::isfinite(location) || location < 0.0) {
    throw Error(ErrorCode::InvalidMeasure,
                "atom location must be a finite nonnegative number, got " +
                    std::to_string(location));
  }
}

void check_signed_mass(double mass) {
  if (!std::isfinite(mass)) {
    throw Error(ErrorCode::InvalidMeasure, "atom mass must be finite");
  }
}

void check_positive_mass(double mass) {
  if (!std::isfinite(mass) || mass < 0.0) {
    throw Error(ErrorCode::InvalidMeasure,
                "atom mass must be a finite positive number, got " + std::to_string(mass));
  }
}

template <typename Atoms>
double sum_mass(const Atoms& atoms) {
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass;
  return total;
}

template <typename Atoms>
double sum_abs_mass(const Atoms& atoms) {
  double total = 0.0;
  for (const auto& a : atoms) total += std::abs(a.mass);
  return total;
}

double mass_at(std::span<const Atom1D> atoms, double location) {
  for (const auto& a : atoms) {
    if (same_location(a.location, location)) return a.mass;
  }
  return 0.0;
}

double power(double x, int k) { return k == 0 ? 1.0 : std::pow(x, k); }

double integrate(std::span<const Atom1D> atoms, int k) {
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass * power(a.location, k);
  return total;
}

double integrate(std::span<const Atom2D> atoms, int k1, int k2) {
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass * power(a.s, k1) * power(a.t, k2);
  return total;
}

double reciprocal(std::span<const Atom1D> atoms) {
  double total = 0.0;
  for (const auto& a : atoms) {
    if (a.location == 0.0) {
      throw Error(ErrorCode::AtomAtZero, "measure has an atom at 0, so 1/s is not integrable");
    }
    total += a.mass / a.location;
  }
  return total;
}

}  // namespace

bool same_location(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kMergeTolerance * scale;
}

// SignedMeasure1D ------------------------------------------------------------

SignedMeasure1D::SignedMeasure1D(std::vector<Atom1D> atoms) {
  for (const auto& a : atoms) {
    check_location(a.location);
    check_signed_mass(a.mass);
  }
  atoms_ = canonical(std::move(atoms));
}

double SignedMeasure1D::total_mass() const { return sum_mass(atoms_); }
double SignedMeasure1D::total_variation() const { return sum_abs_mass(atoms_); }
double SignedMeasure1D::mass_at(double location) const {
  return tcshift::mass_at(atoms_, location);
}

// AtomicMeasure1D ------------------------------------------------------------

AtomicMeasure1D::AtomicMeasure1D(std::vector<Atom1D> atoms) {
  for (const auto& a : atoms) {
    check_location(a.location);
    check_positive_mass(a.mass);
  }
  atoms_ = canonical(std::move(atoms));
}

double AtomicMeasure1D::total_mass() const { return sum_mass(atoms_); }
double AtomicMeasure1D::mass_at(double location) const {
  return tcshift::mass_at(atoms_, location);
}

bool AtomicMeasure1D::is_probability(double tol) const {
  return std::abs(total_mass() - 1.0) <= tol;
}

bool AtomicMeasure1D::has_atom_at_zero() const {
  return !atoms_.empty() && atoms_.front().location == 0.0;
}

double AtomicMeasure1D::max_location() const {
  return atoms_.empty() ? 0.0 : atoms_.back().location;
}

AtomicMeasure1D::operator SignedMeasure1D() const { return SignedMeasure1D(atoms_); }

// SignedMeasure2D / AtomicMeasure2D -------------------------------------------

SignedMeasure2D::SignedMeasure2D(std::vector<Atom2D> atoms) {
  for (const auto& a : atoms) {
    check_location(a.s);
    check_location(a.t);
    check_signed_mass(a.mass);
  }
  atoms_ = canonical(std::move(atoms));
}

double SignedMeasure2D::total_mass() const { return sum_mass(atoms_); }
double SignedMeasure2D::total_variation() const { return sum_abs_mass(atoms_); }

AtomicMeasure2D::AtomicMeasure2D(std::vector<Atom2D> atoms) {
  for (const auto& a : atoms) {
    check_location(a.s);
    check_location(a.t);
    check_positive_mass(a.mass);
  }
  atoms_ = canonical(std::move(atoms));
}

double AtomicMeasure2D::total_mass() const { return sum_mass(atoms_); }

bool AtomicMeasure2D::is_probability(double tol) const {
  return std::abs(total_mass() - 1.0) <= tol;
}

AtomicMeasure2D::operator SignedMeasure2D() const { return SignedMeasure2D(atoms_); }

// Integration ----------------------------------------------------------------

double integrate_poly(const SignedMeasure1D& m, int k) { return integrate(m.atoms(), k); }
double integrate_poly(const AtomicMeasure1D& m, int k) { return integrate(m.atoms(), k); }

double integrate_monomial(const SignedMeasure2D& m, int k1, int k2) {
  return integrate(m.atoms(), k1, k2);
}
double integrate_monomial(const AtomicMeasure2D& m, int k1, int k2) {
  return integrate(m.atoms(), k1, k2);
}

double reciprocal_norm(const AtomicMeasure1D& m) { return reciprocal(m.atoms()); }
double reciprocal_integral(const SignedMeasure1D& m) { return reciprocal(m.atoms()); }

double reciprocal_norm(const AtomicMeasure2D& m, Axis axis) {
  double total = 0.0;
  for (const auto& a : m.atoms()) {
    const double x = axis == Axis::X ? a.s : a.t;
    if (x == 0.0) {
      throw Error(ErrorCode::AtomAtZero,
                  axis == Axis::X ? "measure has an atom with s = 0, so 1/s is not integrable"
                                  : "measure has an atom with t = 0, so 1/t is not integrable");
    }
    total += a.mass / x;
  }
  return total;
}

// Transforms -----------------------------------------------------------------

AtomicMeasure1D tilde(const AtomicMeasure1D& m) {
  const double norm = reciprocal_norm(m);
  std::vector<Atom1D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) out.push_back({a.location, a.mass / a.location / norm});
  return AtomicMeasure1D(std::move(out));
}

AtomicMeasure2D extremal(const AtomicMeasure2D& m) {
  const double norm = reciprocal_norm(m, Axis::Y);
  std::vector<Atom2D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) out.push_back({a.s, a.t, a.mass / a.t / norm});
  return AtomicMeasure2D(std::move(out));
}

AtomicMeasure1D marginal(const AtomicMeasure2D& m, Axis axis) {
  std::vector<Atom1D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) out.push_back({axis == Axis::X ? a.s : a.t, a.mass});
  return AtomicMeasure1D(std::move(out));
}

SignedMeasure1D marginal(const SignedMeasure2D& m, Axis axis) {
  std::vector<Atom1D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) out.push_back({axis == Axis::X ? a.s : a.t, a.mass});
  return SignedMeasure1D(std::move(out));
}

namespace {
std::vector<Atom2D> outer(std::span<const Atom1D> xs, std::span<const Atom1D> ys) {
  std::vector<Atom2D> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) out.push_back({x.location, y.location, x.mass * y.mass});
  }
  return out;
}
}  // namespace

AtomicMeasure2D product(const AtomicMeasure1D& mx, const AtomicMeasure1D& my) {
  return AtomicMeasure2D(outer(mx.atoms(), my.atoms()));
}

SignedMeasure2D product(const SignedMeasure1D& mx, const SignedMeasure1D& my) {
  return SignedMeasure2D(outer(mx.atoms(), my.atoms()));
}

// Linear algebra -------------------------------------------------------------

SignedMeasure1D combine(std::span<const Term1D> terms) {
  std::vector<Atom1D> atoms;
  for (const auto& [c, m] : terms) {
    for (const auto& a : m.atoms()) atoms.push_back({a.location, c * a.mass});
  }
  return SignedMeasure1D(std::move(atoms));
}

SignedMeasure1D combine(std::initializer_list<Term1D> terms) {
  return combine(std::span<const Term1D>(terms.begin(), terms.size()));
}

SignedMeasure2D combine(std::span<const Term2D> terms) {
  std::vector<Atom2D> atoms;
  for (const auto& [c, m] : terms) {
    for (const auto& a : m.atoms()) atoms.push_back({a.s, a.t, c * a.mass});
  }
  return SignedMeasure2D(std::move(atoms));
}

SignedMeasure2D combine(std::initializer_list<Term2D> terms) {
  return combine(std::span<const Term2D>(terms.begin(), terms.size()));
}

double max_atom_difference(const SignedMeasure1D& m1, const SignedMeasure1D& m2) {
  // Build the difference without cancellation pruning so that tiny genuine
  // discrepancies are still reported.
  std::vector<Atom1D> atoms(m1.atoms().begin(), m1.atoms().end());
  for (const auto& a : m2.atoms()) atoms.push_back({a.location, -a.mass});
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom1D& a, const Atom1D& b) { return a.location < b.location; });
  double worst = 0.0;
  for (std::size_t i = 0; i < atoms.size();) {
    double sum = atoms[i].mass;
    std::size_t j = i + 1;
    while (j < atoms.size() && same_location(atoms[i].location, atoms[j].location)) {
      sum += atoms[j++].mass;
    }
    worst = std::max(worst, std::abs(sum));
    i = j;
  }
  return worst;
}

double max_atom_difference(const SignedMeasure2D& m1, const SignedMeasure2D& m2) {
  std::vector<Cluster2D> clusters;
  auto add = [&](const Atom2D& atom, double sign) {
    auto hit = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster2D& c) {
      return same_location(c.s, atom.s) && same_location(c.t, atom.t);
    });
    if (hit != clusters.end()) {
      hit->mass += sign * atom.mass;
    } else {
      clusters.push_back({atom.s, atom.t, sign * atom.mass, 0.0});
    }
  };
  for (const auto& a : m1.atoms()) add(a, 1.0);
  for (const auto& a : m2.atoms()) add(a, -1.0);
  double worst = 0.0;
  for (const auto& c : clusters) worst = std::max(worst, std::abs(c.mass));
  return worst;
}

// Positivity -----------------------------------------------------------------

Positivity positivity(const SignedMeasure1D& m, double tol) {
  const double threshold = -tol * m.total_variation();
  Positivity result;
  for (const auto& a : m.atoms()) {
    if (a.mass < threshold && (!result.witness || a.mass < result.witness->mass)) {
      result.positive = false;
      result.witness = a;
    }
  }
  return result;
}

Positivity2D positivity(const SignedMeasure2D& m, double tol) {
  const double threshold = -tol * m.total_variation();
  Positivity2D result;
  for (const auto& a : m.atoms()) {
    if (a.mass < threshold && (!result.witness || a.mass < result.witness->mass)) {
      result.positive = false;
      result.witness = a;
    }
  }
  return result;
}

AtomicMeasure1D to_positive(const SignedMeasure1D& m, double tol) {
  const double threshold = -tol * m.total_variation();
  std::vector<Atom1D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) {
    if (a.mass > 0.0) {
      out.push_back(a);
    } else if (a.mass < threshold) {
      throw Error(ErrorCode::PreconditionViolated,
                  "measure has a negative atom of mass " + std::to_string(a.mass) +
                      " at " + std::to_string(a.location));
    }
  }
  return AtomicMeasure1D(std::move(out));
}

AtomicMeasure2D to_positive(const SignedMeasure2D& m, double tol) {
  const double threshold = -tol * m.total_variation();
  std::vector<Atom2D> out;
  out.reserve(m.size());
  for (const auto& a : m.atoms()) {
    if (a.mass > 0.0) {
      out.push_back(a);
    } else if (a.mass < threshold) {
      throw Error(ErrorCode::PreconditionViolated,
                  "measure has a negative atom of mass " + std::to_string(a.mass) + " at (" +
                      std::to_string(a.s) + ", " + std::to_string(a.t) + ")");
    }
  }
  return AtomicMeasure2D(std::move(out));
}

}  // namespace tcshift
