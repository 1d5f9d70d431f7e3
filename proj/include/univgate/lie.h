#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"

namespace univgate {

/// Orthonormal basis of su(d) or so(d) under ⟨X, Y⟩ = −tr(XY).
///
/// SU order: X_12, Y_12, X_13, Y_13, …, X_{d−1,d}, Y_{d−1,d}, then the
/// Gram–Schmidt orthonormalized Z_12, Z_23, …, Z_{d−1,d}.
/// SO order: X_ij with pairs in reverse lexicographic order, so SO(3) gives
/// X_23, X_13, X_12.
struct LieBasis {
  Group group;
  int d;
  std::vector<Eigen::MatrixXcd> elements;
  /// Scale applied to X_ij and Y_ij (and to Z_ij before Gram–Schmidt).
  double gram_normalization;
  /// Column a is the column-major vectorization of elements[a].
  Eigen::MatrixXcd flattened;

  int dim() const { return static_cast<int>(elements.size()); }
};

/// Cached per (group, d). Throws kBadDimension.
std::shared_ptr<const LieBasis> standard_basis(Group group, int d);

/// ⟨X, Y⟩ = −Re tr(XY).
double killing_inner(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y);

/// Real coordinates of an algebra element in the basis.
Eigen::VectorXd algebra_coordinates(const Eigen::MatrixXcd& x,
                                    const LieBasis& basis);

/// Algebra element with the given coordinates.
Eigen::MatrixXcd algebra_element(const Eigen::VectorXd& coords,
                                 const LieBasis& basis);

enum class AdjointKind { kAd, kad };

struct AdjointMatrix {
  AdjointKind kind;
  Eigen::MatrixXd entries;
};

/// (Ad_g)_{ab} = ⟨X_a, g X_b g⁻¹⟩. Throws kDimensionMismatch.
AdjointMatrix adjoint_of_gate(const GateMatrix& g, const LieBasis& basis);

/// Same as adjoint_of_gate for an unwrapped unitary matrix.
Eigen::MatrixXd adjoint_matrix(const Eigen::MatrixXcd& g,
                               const LieBasis& basis);

/// (ad_X)_{ab} = ⟨X_a, [X, X_b]⟩. Any multiple of the identity in X acts
/// trivially and is dropped. Throws kDimensionMismatch.
AdjointMatrix adjoint_of_algebra(const Eigen::MatrixXcd& x,
                                 const LieBasis& basis);

}  // namespace univgate
