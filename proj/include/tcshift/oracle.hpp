#pragma once

// Brute-force checks that do not go through the closed-form reconstruction.
// All truncated checks are necessary conditions only: a pass never proves
// subnormality, and a fail after a subnormal verdict indicates a bug.

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tcshift/measure.hpp"
#include "tcshift/shifts.hpp"
#include "tcshift/tc_shift.hpp"

namespace tcshift {

inline constexpr double kPsdTolerance = 1e-9;

/// pass <=> min_eigenvalue >= -tolerance, where tolerance = tol * trace.
struct PsdReport {
  std::size_t dimension = 0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// Symmetric eigenvalue test with margin scaled by the trace (by tol alone
/// if the trace is not positive).
PsdReport psd_check(const Eigen::MatrixXd& matrix, double tol = kPsdTolerance);

struct MomentMismatch {
  int k1;
  int k2;
  double expected;  // gamma_k from the weights
  double actual;    // int s^k1 t^k2 dmu
};

struct InterpolationReport {
  bool pass = true;
  int max_order = 0;
  double max_relative_error = 0.0;
  std::optional<MomentMismatch> first_failure;
};

/// Compares gamma_(k1,k2) of the weight diagram with the monomial integrals
/// of mu for all k1 + k2 <= max_order.
InterpolationReport moment_interpolation_check(const TCInstance& inst, const AtomicMeasure2D& mu,
                                               int max_order, double tol);

struct HankelReport {
  PsdReport even;  // (gamma_{i+j})_{i,j<=n}
  PsdReport odd;   // (gamma_{i+j+1})_{i,j<=n}
  bool pass() const { return even.pass && odd.pass; }
};

/// Stieltjes conditions of order n.  Needs at least 2n + 2 moments.
HankelReport hankel_psd(const MomentSequence& moments, int n, double tol = kPsdTolerance);

/// Moments of row k2 (shift(alpha_(0,k2), alpha_(1,k2), ...)) and of column k1.
MomentSequence row_moments(const TCInstance& inst, int row, std::size_t count);
MomentSequence column_moments(const TCInstance& inst, int column, std::size_t count);

using MomentFunctional = std::function<double(int, int)>;

/// Monomials s^i t^j with i + j <= n, ordered by total degree then by i
/// descending (1, s, t, s^2, st, t^2, ...).
std::vector<std::pair<int, int>> monomial_basis(int n);

/// PSD status of [gamma_(k + l)]_{|k|,|l| <= n}.
PsdReport moment_matrix_2d(const MomentFunctional& gamma, int n, double tol = kPsdTolerance);
PsdReport moment_matrix_2d(const TCInstance& inst, int n, double tol = kPsdTolerance);

/// Compression of the block operator matrix [[T1*,T1],[T2*,T1]; [T1*,T2],[T2*,T2]]
/// to span{e_k : k1, k2 <= window}.
Eigen::MatrixXd joint_hyponormality_matrix(const TCInstance& inst, int window);
PsdReport joint_hyponormality_compression(const TCInstance& inst, int window,
                                          double tol = kPsdTolerance);

enum class OracleStatus { Consistent, Inconclusive, Contradiction };

/// Subnormal verdict: pass -> consistent, fail -> contradiction.
/// Not subnormal: fail -> consistent, pass -> inconclusive.
OracleStatus classify(bool verdict_subnormal, bool oracle_pass);
std::string_view to_string(OracleStatus status);

}  // namespace tcshift
