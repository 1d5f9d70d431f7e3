#include "univgate/spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "univgate/errors.h"

namespace univgate {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi -= kTwoPi;
  return phi;
}

// Orthonormal real basis of the real span of the given complex columns,
// keeping `rank` directions.
Eigen::MatrixXd real_span(const Eigen::MatrixXcd& cols, int rank) {
  const int d = static_cast<int>(cols.rows());
  Eigen::MatrixXd stacked(d, 2 * cols.cols());
  stacked << cols.real(), cols.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

void check_schur_diagonal(const Eigen::MatrixXcd& t, const Tolerances& tol) {
  Eigen::MatrixXcd off = t.triangularView<Eigen::StrictlyUpper>();
  if (off.norm() > tol.spec) {
    throw Error(ErrorCode::kNumericalFailure,
                "Schur factor of a unitary matrix is not diagonal");
  }
}

SpectralData decompose_su(const GateMatrix& g, const Tolerances& tol) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(g.entries());
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericalFailure, "Schur reduction failed");
  }
  const Eigen::MatrixXcd& t = schur.matrixT();
  check_schur_diagonal(t, tol);
  SpectralData out;
  out.group = Group::kSU;
  const int d = g.dim();
  Eigen::VectorXcd log_diag(d);
  for (int i = 0; i < d; ++i) {
    const Complex lambda = t(i, i);
    double phi = 0.0;
    if (std::abs(lambda - 1.0) > tol.spec) {
      phi = wrap_phase(std::atan2(lambda.imag(), lambda.real()));
    }
    out.angles.push_back(phi);
    log_diag(i) = Complex(0.0, phi);
  }
  out.diagonalizer = schur.matrixU();
  out.principal_log =
      out.diagonalizer * log_diag.asDiagonal() * out.diagonalizer.adjoint();
  return out;
}

SpectralData decompose_so(const GateMatrix& g, const Tolerances& tol) {
  const int d = g.dim();
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(g.entries());
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericalFailure, "Schur reduction failed");
  }
  const Eigen::MatrixXcd& t = schur.matrixT();
  check_schur_diagonal(t, tol);
  const Eigen::MatrixXcd& q = schur.matrixU();

  std::vector<int> plus_one, minus_one, upper, lower;
  for (int i = 0; i < d; ++i) {
    const Complex lambda = t(i, i);
    if (std::abs(lambda - 1.0) <= tol.spec) {
      plus_one.push_back(i);
    } else if (std::abs(lambda + 1.0) <= tol.spec) {
      minus_one.push_back(i);
    } else if (lambda.imag() > 0.0) {
      upper.push_back(i);
    } else {
      lower.push_back(i);
    }
  }
  if (upper.size() != lower.size() || minus_one.size() % 2 != 0) {
    throw Error(ErrorCode::kNumericalFailure,
                "eigenvalues of an SO matrix do not pair up");
  }

  auto gather = [&](const std::vector<int>& idx) {
    Eigen::MatrixXcd cols(d, idx.size());
    for (size_t j = 0; j < idx.size(); ++j) cols.col(j) = q.col(idx[j]);
    return cols;
  };

  // Columns: rotation planes first (generic pairs, then the −1 planes),
  // fixed space last.
  Eigen::MatrixXd v(d, d);
  int col = 0;
  for (int i : upper) {
    v.col(col++) = std::sqrt(2.0) * q.col(i).real();
    v.col(col++) = std::sqrt(2.0) * q.col(i).imag();
  }
  if (!minus_one.empty()) {
    Eigen::MatrixXd basis = real_span(gather(minus_one), minus_one.size());
    v.middleCols(col, basis.cols()) = basis;
    col += static_cast<int>(basis.cols());
  }
  const int fixed_dim = static_cast<int>(plus_one.size());
  if (fixed_dim > 0) {
    v.middleCols(col, fixed_dim) = real_span(gather(plus_one), fixed_dim);
  }
  // Clean up the small loss of orthogonality between nearly conjugate
  // eigenvectors.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeFullU |
                                               Eigen::ComputeFullV);
  v = svd.matrixU() * svd.matrixV().transpose();

  const Eigen::MatrixXd o = g.entries().real();
  const Eigen::MatrixXd r = v.transpose() * o * v;
  const int blocks = (d - fixed_dim) / 2;
  SpectralData out;
  out.group = Group::kSO;
  out.fixed_dim = fixed_dim;
  Eigen::MatrixXd r_model = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd log_model = Eigen::MatrixXd::Zero(d, d);
  for (int b = 0; b < blocks; ++b) {
    const int i = 2 * b;
    double phi = std::atan2(0.5 * (r(i, i + 1) - r(i + 1, i)),
                            0.5 * (r(i, i) + r(i + 1, i + 1)));
    // −1 planes carry no orientation; the angle is π either way.
    if (phi <= 0.0) phi = std::abs(phi) > 0.5 * std::numbers::pi
                              ? std::numbers::pi
                              : std::abs(phi);
    out.angles.push_back(phi);
    r_model(i, i) = r_model(i + 1, i + 1) = std::cos(phi);
    r_model(i, i + 1) = std::sin(phi);
    r_model(i + 1, i) = -std::sin(phi);
    log_model(i, i + 1) = phi;
    log_model(i + 1, i) = -phi;
  }
  if ((r - r_model).norm() > std::sqrt(tol.spec)) {
    throw Error(ErrorCode::kNumericalFailure,
                "real normal form does not match the rotation blocks");
  }
  out.diagonalizer = v.cast<Complex>();
  out.principal_log = (v * log_model * v.transpose()).cast<Complex>();
  return out;
}

}  // namespace

SpectralData spectral_decompose(const GateMatrix& g, const Tolerances& tol) {
  return g.group() == Group::kSU ? decompose_su(g, tol) : decompose_so(g, tol);
}

Eigen::MatrixXcd principal_log(const GateMatrix& g, const Tolerances& tol) {
  return spectral_decompose(g, tol).principal_log;
}

std::vector<double> eigen_phases(const Eigen::MatrixXcd& u) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u, /*computeU=*/false);
  std::vector<double> out;
  for (int i = 0; i < u.rows(); ++i) {
    const Complex lambda = schur.matrixT()(i, i);
    out.push_back(wrap_phase(std::atan2(lambda.imag(), lambda.real())));
  }
  return out;
}

std::vector<double> full_phase_list(const SpectralData& s) {
  if (s.group == Group::kSU) return s.angles;
  std::vector<double> out;
  for (double phi : s.angles) {
    out.push_back(phi);
    out.push_back(wrap_phase(-phi));
  }
  for (int i = 0; i < s.fixed_dim; ++i) out.push_back(0.0);
  return out;
}

double hs_distance(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim() || a.group() != b.group()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "hs_distance needs gates of the same group and dimension");
  }
  return (a.entries() - b.entries()).norm();
}

double hs_distance_to_scalar(const Eigen::MatrixXcd& g, Complex alpha) {
  const double d = static_cast<double>(g.rows());
  const double sq = 2.0 * d - 2.0 * (std::conj(alpha) * g.trace()).real();
  return std::sqrt(std::max(0.0, sq));
}

Eigen::MatrixXcd group_commutator(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b) {
  return a * b * a.adjoint() * b.adjoint();
}

}  // namespace univgate
