#include "tcshift/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "tcshift/error.hpp"

namespace tcshift {

PsdReport psd_check(const Eigen::MatrixXd& matrix, double tol) {
  PsdReport report;
  report.dimension = static_cast<std::size_t>(matrix.rows());
  if (matrix.rows() == 0) return report;
  const Eigen::MatrixXd symmetric = 0.5 * (matrix + matrix.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.trace = symmetric.trace();
  report.tolerance = report.trace > 0.0 ? tol * report.trace : tol;
  report.pass = report.min_eigenvalue >= -report.tolerance;
  return report;
}

InterpolationReport moment_interpolation_check(const TCInstance& inst, const AtomicMeasure2D& mu,
                                               int max_order, double tol) {
  InterpolationReport report;
  report.max_order = max_order;
  // Same order as monomial_basis: by total degree, s before t.
  for (int total = 0; total <= max_order; ++total) {
    for (int k1 = total; k1 >= 0; --k1) {
      const int k2 = total - k1;
      const double expected = inst.moment(k1, k2);
      const double actual = integrate_monomial(mu, k1, k2);
      const double error = std::abs(expected - actual) / std::abs(expected);
      report.max_relative_error = std::max(report.max_relative_error, error);
      if (!(error <= tol) && !report.first_failure) {
        report.pass = false;
        report.first_failure = MomentMismatch{k1, k2, expected, actual};
      }
    }
  }
  return report;
}

HankelReport hankel_psd(const MomentSequence& moments, int n, double tol) {
  const auto needed = static_cast<std::size_t>(2 * n + 2);
  if (n < 0 || moments.size() < needed) {
    throw Error(ErrorCode::DepthExceeded, "Hankel test of order " + std::to_string(n) +
                                              " needs " + std::to_string(needed) + " moments");
  }
  Eigen::MatrixXd even(n + 1, n + 1);
  Eigen::MatrixXd odd(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      even(i, j) = moments[i + j];
      odd(i, j) = moments[i + j + 1];
    }
  }
  return {psd_check(even, tol), psd_check(odd, tol)};
}

MomentSequence row_moments(const TCInstance& inst, int row, std::size_t count) {
  std::vector<double> values{1.0};
  for (std::size_t k = 1; k < count; ++k) {
    values.push_back(values.back() *
                     inst.weight_sq(static_cast<int>(k - 1), row, Direction::Horizontal));
  }
  return MomentSequence(std::move(values));
}

MomentSequence column_moments(const TCInstance& inst, int column, std::size_t count) {
  std::vector<double> values{1.0};
  for (std::size_t k = 1; k < count; ++k) {
    values.push_back(values.back() *
                     inst.weight_sq(column, static_cast<int>(k - 1), Direction::Vertical));
  }
  return MomentSequence(std::move(values));
}

std::vector<std::pair<int, int>> monomial_basis(int n) {
  std::vector<std::pair<int, int>> basis;
  for (int degree = 0; degree <= n; ++degree) {
    for (int i = degree; i >= 0; --i) basis.emplace_back(i, degree - i);
  }
  return basis;
}

PsdReport moment_matrix_2d(const MomentFunctional& gamma, int n, double tol) {
  const auto basis = monomial_basis(n);
  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd matrix(size, size);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      matrix(r, c) = gamma(basis[r].first + basis[c].first, basis[r].second + basis[c].second);
    }
  }
  return psd_check(matrix, tol);
}

PsdReport moment_matrix_2d(const TCInstance& inst, int n, double tol) {
  return moment_matrix_2d([&inst](int k1, int k2) { return inst.moment(k1, k2); }, n, tol);
}

Eigen::MatrixXd joint_hyponormality_matrix(const TCInstance& inst, int window) {
  if (window < 0) throw Error(ErrorCode::DepthExceeded, "window must be nonnegative");
  // Operators truncated to {0..window+1}^2 give exact commutator entries on
  // {0..window}^2.
  const int side = window + 2;
  const int dim = side * side;
  auto index = [side](int k1, int k2) { return k1 * side + k2; };

  Eigen::MatrixXd t1 = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd t2 = Eigen::MatrixXd::Zero(dim, dim);
  for (int k1 = 0; k1 < side; ++k1) {
    for (int k2 = 0; k2 < side; ++k2) {
      if (k1 + 1 < side) t1(index(k1 + 1, k2), index(k1, k2)) = inst.weight(k1, k2, Direction::Horizontal);
      if (k2 + 1 < side) t2(index(k1, k2 + 1), index(k1, k2)) = inst.weight(k1, k2, Direction::Vertical);
    }
  }
  auto commutator = [](const Eigen::MatrixXd& adjoint_of, const Eigen::MatrixXd& op) {
    // [A*, B] = A* B - B A*
    return Eigen::MatrixXd(adjoint_of.transpose() * op - op * adjoint_of.transpose());
  };
  const Eigen::MatrixXd c11 = commutator(t1, t1);
  const Eigen::MatrixXd c21 = commutator(t2, t1);  // [T2*, T1]
  const Eigen::MatrixXd c12 = commutator(t1, t2);  // [T1*, T2]
  const Eigen::MatrixXd c22 = commutator(t2, t2);

  std::vector<int> kept;
  for (int k1 = 0; k1 <= window; ++k1) {
    for (int k2 = 0; k2 <= window; ++k2) kept.push_back(index(k1, k2));
  }
  const auto n = static_cast<Eigen::Index>(kept.size());
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(r, c) = c11(kept[r], kept[c]);
      out(r, n + c) = c21(kept[r], kept[c]);
      out(n + r, c) = c12(kept[r], kept[c]);
      out(n + r, n + c) = c22(kept[r], kept[c]);
    }
  }
  return out;
}

PsdReport joint_hyponormality_compression(const TCInstance& inst, int window, double tol) {
  return psd_check(joint_hyponormality_matrix(inst, window), tol);
}

OracleStatus classify(bool verdict_subnormal, bool oracle_pass) {
  if (verdict_subnormal) return oracle_pass ? OracleStatus::Consistent : OracleStatus::Contradiction;
  return oracle_pass ? OracleStatus::Inconclusive : OracleStatus::Consistent;
}

std::string_view to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::Consistent: return "consistent";
    case OracleStatus::Inconclusive: return "inconclusive";
    case OracleStatus::Contradiction: return "contradiction";
  }
  return "unknown";
}

}  // namespace tcshift
