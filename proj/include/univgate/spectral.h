#pragma once

#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"

namespace univgate {

/// Spectral angles, diagonalizer and principal logarithm of a gate.
///
/// SU: angles[i] ∈ [0, 2π) is the phase of the i-th eigenvalue and
/// g = V diag(e^{iφ}) V†.
/// SO: angles[i] ∈ (0, π] is the angle of the i-th rotation block; V is real
/// orthogonal with the block planes first (columns 2i, 2i+1) and the fixed
/// space last, and V^t g V has blocks [[cos φ, sin φ], [−sin φ, cos φ]].
struct SpectralData {
  Group group;
  std::vector<double> angles;
  int fixed_dim = 0;
  Eigen::MatrixXcd diagonalizer;
  Eigen::MatrixXcd principal_log;
};

/// Uses Eigen's complex Schur form. For a normal matrix the triangular
/// factor is diagonal and the Schur vectors are orthonormal, including
/// inside degenerate eigenspaces. Throws kNumericalFailure when the Schur
/// factor is not diagonal to within tol.spec.
SpectralData spectral_decompose(const GateMatrix& g, const Tolerances& tol = {});

/// X with e^X = g, angles on the [0, 2π) branch (SU) or (0, π] blocks (SO).
Eigen::MatrixXcd principal_log(const GateMatrix& g, const Tolerances& tol = {});

/// Phases in [0, 2π) of the eigenvalues of a unitary matrix, unsorted.
std::vector<double> eigen_phases(const Eigen::MatrixXcd& u);

/// The SO angle list expanded to the full eigenvalue phase list
/// {±φ_i} ∪ {0 × fixed_dim}, each in [0, 2π).
std::vector<double> full_phase_list(const SpectralData& s);

/// Frobenius norm of a − b. Throws kDimensionMismatch.
double hs_distance(const GateMatrix& a, const GateMatrix& b);

/// ‖g − αI‖_F from the trace formula 2d − 2 Re(ᾱ tr g).
double hs_distance_to_scalar(const Eigen::MatrixXcd& g, Complex alpha);

/// Group commutator A B A⁻¹ B⁻¹.
Eigen::MatrixXcd group_commutator(const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b);

}  // namespace univgate
