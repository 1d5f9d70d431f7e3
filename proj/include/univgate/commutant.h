#pragma once

#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"

namespace univgate {

/// Dimension of {L : M_i L = L M_i for all i}.
struct CommutantReport {
  int dim = 0;
  bool trivial = false;
  /// Singular values of the stacked system, descending.
  std::vector<double> singular_values;
  /// Smallest accepted (nonzero) singular value divided by the largest
  /// rejected one. Infinite when the rejected values are exactly zero or
  /// nothing is accepted.
  double gap = 0.0;
  bool ill_conditioned = false;
};

/// Stacks the blocks I⊗M_i − M_iᵀ⊗I acting on column-major vec(L) and
/// counts singular values σ ≤ tol.rank · σ_max.
/// Throws kEmptyInput, kDimensionMismatch.
CommutantReport commutant_dim(const std::vector<Eigen::MatrixXd>& mats,
                              const Tolerances& tol = {});

/// Orthonormal (Frobenius) basis of the commutant, same rank decision.
/// Uses a Jacobi SVD, so keep inputs small.
std::vector<Eigen::MatrixXd> commutant_basis(
    const std::vector<Eigen::MatrixXd>& mats, const Tolerances& tol = {});

/// Commutant of {Ad_g : g ∈ gates}. A non-trivial result proves the set is
/// not universal.
CommutantReport check_necessary_condition(const std::vector<GateMatrix>& gates,
                                          const Tolerances& tol = {});

/// Commutant of {ad_X : X ∈ elems}; trivial iff elems generate the algebra
/// (for simple algebras).
CommutantReport check_algebra_generation(
    const std::vector<Eigen::MatrixXcd>& elems, Group group,
    const Tolerances& tol = {});

}  // namespace univgate
