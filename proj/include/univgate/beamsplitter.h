#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "univgate/commutant.h"
#include "univgate/engine.h"
#include "univgate/gate.h"
#include "univgate/su2.h"

namespace univgate {

/// A 2-mode gate B ∈ SU(2) or SO(2) to be embedded on d ≥ 3 modes.
struct Beamsplitter {
  Eigen::Matrix2cd b;
  Group group = Group::kSU;
  /// Rotation angle in [0, 2π) for SO(2); the SU(2) angle in [0, π].
  double phi = 0.0;
  /// (φ, k̂) with φ ∈ [0, π]; SU(2) only.
  std::optional<AxisAngleGate> axis_angle;
  int embedding_dim = 3;
};

/// Throws kBadDimension (d < 3), kNotUnitary, kDetNotOne, kNotReal.
Beamsplitter make_beamsplitter(const Eigen::Matrix2cd& b, Group group, int d = 3,
                               const Tolerances& tol = {});
Beamsplitter make_beamsplitter(const AxisAngleGate& gate, int d = 3);
/// B = [[cos φ, sin φ], [−sin φ, cos φ]].
Beamsplitter make_orthogonal_beamsplitter(double phi, int d = 3);

/// σᵗBσ with σ the 2-mode swap.
Eigen::Matrix2cd swapped(const Eigen::Matrix2cd& b);

/// B acting on modes (i, j) (0-based) of a d-mode system, identity elsewhere.
Eigen::MatrixXcd embed(const Eigen::Matrix2cd& b, int i, int j, int d);

/// {B_ij, B^σ_ij} for i < j in lexicographic order, B_ij before B^σ_ij.
/// Throws kBadDimension.
std::vector<GateMatrix> embed_gate_set(const Beamsplitter& bs, int d,
                                       const Tolerances& tol = {});

/// Mode-pair index of B_ij (or B^σ_ij when sigma) inside embed_gate_set(·, 3).
int s3_index(int i, int j, bool sigma);

enum class ObstructionFamily {
  kNone,
  kCentral,        ///< B = ±I
  kRealOffDiag,    ///< |k_x| = 1
  kDiagonal,       ///< |k_z| = 1
  kQuarterTurn,    ///< φ = ±π/2, k_z = 0
};

const char* obstruction_family_name(ObstructionFamily f);

struct FamilyReport {
  ObstructionFamily family = ObstructionFamily::kNone;
  /// Some defining quantity lies between 1e-10 and 1e-6 of a family.
  bool borderline = false;
};

FamilyReport obstruction_family(const Beamsplitter& bs, double threshold = 1e-10);

struct BeamsplitterOptions {
  EngineConfig engine;
  /// Run the engine on the full S_d instead of reducing to d = 3.
  bool full_engine = false;
  /// Closure budget for the finite quarter-turn family.
  std::size_t closure_budget = 100000;
};

UniversalityVerdict orthogonal_bs_universal(double phi, int d = 3,
                                            const BeamsplitterOptions& opts = {});

UniversalityVerdict unitary_bs_universal(const Beamsplitter& bs,
                                         const BeamsplitterOptions& opts = {});

/// Dispatches on bs.group.
UniversalityVerdict beamsplitter_universal(const Beamsplitter& bs,
                                           const BeamsplitterOptions& opts = {});

/// b_ij = φ(k_x X_ij + k_y Y_ij + k_z Z_ij) and b^σ_ij on three modes.
std::vector<Eigen::MatrixXcd> algebra_generators(const Beamsplitter& bs);

CommutantReport algebra_level_check(const Beamsplitter& bs,
                                    const Tolerances& tol = {});

/// Whether span{Z₁₂, Z₂₃} is invariant under Ad of every element of S₃.
bool cartan_plane_invariant(const Beamsplitter& bs, double tol = 1e-9);

/// tr B₁₂(φ)B₂₃(φ) = 2cos φ + cos²φ + k_z² sin²φ.
double trace_b12_b23(double phi, double kz2);
/// tr B₁₂(2φ)B₂₃(2φ) = (2 + 4cos 2φ + (1 − k_z²)(cos 4φ − 1))/2.
double trace_doubled(double phi, double kz2);
/// tr B₂₃²B₁₂²B₂₃B₁₂ as a polynomial in cos kφ and k_z².
double trace_chain4(double phi, double kz2);
/// cos γ of O(φ, x̂)O(φ, ẑ): (cos²φ + 2cos φ − 1)/2.
double so3_gamma_cos(double phi);

}  // namespace univgate
