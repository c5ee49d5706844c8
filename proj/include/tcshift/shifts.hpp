#pragma once

// One-variable weighted shifts with an atomic Berger measure.
//
// Weights always enter through measures: for a probability measure m with
// moments g_k = int s^k dm, the shift with weights a_k = sqrt(g_{k+1}/g_k) is
// subnormal with Berger measure m.  The inverse (weights -> measure) problem
// is never attempted.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tcshift/measure.hpp"

namespace tcshift {

/// gamma_0 = 1, gamma_k > 0.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<double> values);

  /// gamma_0 .. gamma_{count-1} of a probability measure.
  static MomentSequence of_measure(const AtomicMeasure1D& m, std::size_t count);
  /// gamma_0 .. gamma_{weights.size()} as products of squared weights.
  static MomentSequence of_weights(std::span<const double> weights);

  double operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

class WeightSequence {
 public:
  WeightSequence(std::vector<double> prefix, std::optional<double> tail, double norm_bound);

  /// Weight alpha_k.  Beyond the prefix the constant tail is returned; throws
  /// Error(DepthExceeded) if there is none.
  double operator[](std::size_t k) const;
  std::span<const double> prefix() const { return prefix_; }
  std::optional<double> tail() const { return tail_; }
  double norm_bound() const { return norm_bound_; }

 private:
  std::vector<double> prefix_;
  std::optional<double> tail_;
  double norm_bound_;
};

/// First n weights of the subnormal shift whose Berger measure is m.
/// Throws Error(DegenerateMeasure) if m = delta_0, Error(NotProbability).
WeightSequence weights_from_measure(const AtomicMeasure1D& m, std::size_t n);

/// Berger measure of shift(alpha, beta, beta, ...):
/// (1 - alpha^2/beta^2) delta_0 + (alpha^2/beta^2) delta_{beta^2}.
/// Throws Error(NotSubnormal) when alpha > beta.
AtomicMeasure1D two_atom_measure(double alpha, double beta);

/// Berger measure of the shift restricted to span{e_n : n >= h}:
/// s^h / gamma_h dm(s).  Throws Error(DegenerateMeasure) if gamma_h = 0.
AtomicMeasure1D restriction_measure(const AtomicMeasure1D& m, int h);

struct OneVarExtension {
  bool subnormal = false;
  /// x0^2 ||1/s||_{L^1(m)}, or +inf when m has an atom at 0.
  double ratio = 0.0;
  std::optional<AtomicMeasure1D> measure;
};

/// Decides whether shift(x0, tail...) is subnormal, where m is the Berger
/// measure of the tail.  Subnormal iff m has no atom at 0 and
/// x0^2 ||1/s|| <= 1; the measure is then x0^2 ||1/s|| m~ + (1 - x0^2 ||1/s||) delta_0.
OneVarExtension one_var_backward_extension(double x0, const AtomicMeasure1D& m);

}  // namespace tcshift
