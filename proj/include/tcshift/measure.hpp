#pragma once

// Finitely-atomic measures on R+ and R+^2.
//
// Two flavours exist for each dimension: a signed measure (any real masses)
// and a positive measure (strictly positive masses).  Both are immutable and
// always kept in canonical form: atoms sorted by location, locations closer
// than the merge tolerance collapsed into one atom, zero masses dropped.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tcshift {

struct Atom1D {
  double location;
  double mass;
};

struct Atom2D {
  double s;
  double t;
  double mass;
};

enum class Axis { X, Y };

/// Relative distance under which two locations are considered one point.
inline constexpr double kMergeTolerance = 1e-12;
/// Default positivity tolerance, relative to total variation.
inline constexpr double kPositivityTolerance = 1e-12;

/// |a - b| <= kMergeTolerance * max(1, |a|, |b|).
bool same_location(double a, double b);

class SignedMeasure1D {
 public:
  SignedMeasure1D() = default;
  explicit SignedMeasure1D(std::vector<Atom1D> atoms);
  SignedMeasure1D(std::initializer_list<Atom1D> atoms)
      : SignedMeasure1D(std::vector<Atom1D>(atoms)) {}

  std::span<const Atom1D> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  double total_variation() const;
  /// Mass carried at `location` (0 if there is no atom there).
  double mass_at(double location) const;

 private:
  std::vector<Atom1D> atoms_;
};

class AtomicMeasure1D {
 public:
  /// The zero measure.
  AtomicMeasure1D() = default;
  /// Throws Error(InvalidMeasure) on negative/non-finite masses or negative
  /// locations.  Zero masses are dropped.
  explicit AtomicMeasure1D(std::vector<Atom1D> atoms);
  AtomicMeasure1D(std::initializer_list<Atom1D> atoms)
      : AtomicMeasure1D(std::vector<Atom1D>(atoms)) {}

  static AtomicMeasure1D dirac(double location, double mass = 1.0) {
    return AtomicMeasure1D({Atom1D{location, mass}});
  }

  std::span<const Atom1D> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  double mass_at(double location) const;
  bool is_probability(double tol = kPositivityTolerance) const;
  bool has_atom_at_zero() const;
  double max_location() const;

  operator SignedMeasure1D() const;  // NOLINT: a positive measure is a signed one

 private:
  std::vector<Atom1D> atoms_;
};

class SignedMeasure2D {
 public:
  SignedMeasure2D() = default;
  explicit SignedMeasure2D(std::vector<Atom2D> atoms);
  SignedMeasure2D(std::initializer_list<Atom2D> atoms)
      : SignedMeasure2D(std::vector<Atom2D>(atoms)) {}

  std::span<const Atom2D> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  double total_variation() const;

 private:
  std::vector<Atom2D> atoms_;
};

class AtomicMeasure2D {
 public:
  AtomicMeasure2D() = default;
  explicit AtomicMeasure2D(std::vector<Atom2D> atoms);
  AtomicMeasure2D(std::initializer_list<Atom2D> atoms)
      : AtomicMeasure2D(std::vector<Atom2D>(atoms)) {}

  std::span<const Atom2D> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double total_mass() const;
  bool is_probability(double tol = kPositivityTolerance) const;

  operator SignedMeasure2D() const;  // NOLINT

 private:
  std::vector<Atom2D> atoms_;
};

// Integration ---------------------------------------------------------------

/// Sum of mass * location^k.  k = 0 gives the total mass.
double integrate_poly(const SignedMeasure1D& m, int k);
double integrate_poly(const AtomicMeasure1D& m, int k);

/// Sum of mass * s^k1 * t^k2.
double integrate_monomial(const SignedMeasure2D& m, int k1, int k2);
double integrate_monomial(const AtomicMeasure2D& m, int k1, int k2);

/// ||1/s||_{L^1(m)}.  Throws Error(AtomAtZero) if m has an atom at 0.
double reciprocal_norm(const AtomicMeasure1D& m);
/// Signed integral of 1/s against m.  Throws Error(AtomAtZero).
double reciprocal_integral(const SignedMeasure1D& m);
/// Integral of 1/s (axis X) or 1/t (axis Y).  Throws Error(AtomAtZero).
double reciprocal_norm(const AtomicMeasure2D& m, Axis axis);

// Transforms ----------------------------------------------------------------

/// d m~(s) = dm(s) / (s ||1/s||).  Always a probability measure.
AtomicMeasure1D tilde(const AtomicMeasure1D& m);
/// d m_ext(s,t) = dm(s,t) / (t ||1/t||).  Always a probability measure.
AtomicMeasure2D extremal(const AtomicMeasure2D& m);

AtomicMeasure1D marginal(const AtomicMeasure2D& m, Axis axis);
SignedMeasure1D marginal(const SignedMeasure2D& m, Axis axis);

AtomicMeasure2D product(const AtomicMeasure1D& mx, const AtomicMeasure1D& my);
SignedMeasure2D product(const SignedMeasure1D& mx, const SignedMeasure1D& my);

// Linear algebra ------------------------------------------------------------

using Term1D = std::pair<double, SignedMeasure1D>;
using Term2D = std::pair<double, SignedMeasure2D>;

/// Atom-wise linear combination.  Masses that cancel down to rounding level
/// of their contributions are dropped.
SignedMeasure1D combine(std::span<const Term1D> terms);
SignedMeasure1D combine(std::initializer_list<Term1D> terms);
SignedMeasure2D combine(std::span<const Term2D> terms);
SignedMeasure2D combine(std::initializer_list<Term2D> terms);

/// Largest |mass| of m1 - m2.  Zero iff the two measures agree atom-wise.
double max_atom_difference(const SignedMeasure1D& m1, const SignedMeasure1D& m2);
double max_atom_difference(const SignedMeasure2D& m1, const SignedMeasure2D& m2);

// Positivity ----------------------------------------------------------------

struct Positivity {
  bool positive = true;
  /// Most negative atom when not positive.
  std::optional<Atom1D> witness;
};

struct Positivity2D {
  bool positive = true;
  std::optional<Atom2D> witness;
};

/// Positive iff every mass >= -tol * total_variation.  The zero measure is
/// positive.
Positivity positivity(const SignedMeasure1D& m, double tol = kPositivityTolerance);
Positivity2D positivity(const SignedMeasure2D& m, double tol = kPositivityTolerance);

/// Clamps masses in (-tol*TV, 0) to zero.  Throws Error(PreconditionViolated)
/// when a mass is more negative than that.
AtomicMeasure1D to_positive(const SignedMeasure1D& m, double tol = kPositivityTolerance);
AtomicMeasure2D to_positive(const SignedMeasure2D& m, double tol = kPositivityTolerance);

}  // namespace tcshift
