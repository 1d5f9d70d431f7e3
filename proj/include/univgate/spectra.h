#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"
#include "univgate/rational.h"

namespace univgate {

/// Balls B_α = {g : ‖g − αI‖ < 1/√2} around central elements.
struct BallReport {
  std::vector<std::pair<Complex, double>> distances;
  std::optional<Complex> member_of;
  bool in_center = false;
};

/// Membership radius actually applied: 1/√2 − tol.ball.
double ball_radius(const Tolerances& tol);

BallReport ball_membership(const GateMatrix& g, const Tolerances& tol = {});
BallReport ball_membership(const Eigen::MatrixXcd& g, Group group,
                           const Tolerances& tol = {});

/// Σ sin²((φ_i − θ)/2) over a full eigenvalue phase list, α = e^{iθ}.
/// Membership in B_α is equivalent to this being < 1/8.
double angle_ball_sum(const std::vector<double>& phases, Complex alpha);

struct PowerReport {
  std::optional<int> n_g;
  std::optional<Complex> landing_center;
  bool power_in_center = false;
};

/// First n ∈ [1, N] with g^n in some ball. Powers are re-projected onto the
/// group every 16 multiplications.
PowerReport minimal_power(const GateMatrix& g, std::int64_t N,
                          const Tolerances& tol = {});
PowerReport minimal_power(const Eigen::MatrixXcd& g, Group group,
                          std::int64_t N, const Tolerances& tol = {});

enum class NgSource { kExact, kAnalyticBound, kNumericEstimate, kUserOverride };

const char* ng_source_name(NgSource source);

struct NgConfig {
  Group group = Group::kSU;
  int d = 2;
  std::int64_t value = 1;
  NgSource source = NgSource::kExact;
  /// Set for SO(4), which the decision algorithm does not support.
  bool flagged = false;
  std::string note;
};

struct NumericEstimateOptions {
  /// Grid step is π / divisions.
  int divisions = 2000;
  /// Each refinement patch covers ±one grid step at step/refine_factor.
  int refine_factor = 10;
  /// Grid points with value ≥ seed_fraction · best seed refinement patches.
  double seed_fraction = 0.9;
  std::size_t max_seeds = 4000;
  std::int64_t max_power = 100000;
  int jobs = 1;
  Tolerances tol;
};

struct NumericEstimate {
  std::int64_t value = 0;       ///< after refinement
  std::int64_t grid_value = 0;  ///< before refinement
  std::vector<double> argmax;   ///< free angles attaining value
  std::size_t seeds = 0;
  std::size_t evaluations = 0;
};

/// Dense grid + local refinement of max over spectra of the minimal landing
/// power. SO(d): floor(d/2) rotation angles in [0, π], sorted. SU(d): d − 1
/// free phases in [0, 2π), the last one fixed by det = 1.
NumericEstimate estimate_ng(Group group, int d,
                            const NumericEstimateOptions& options = {});

/// Minimal landing power for a spectrum given by free angles, as used by
/// estimate_ng. Returns max_power + 1 when nothing lands.
std::int64_t landing_power(Group group, int d, const std::vector<double>& free,
                           std::int64_t max_power, const Tolerances& tol = {});

/// Root of (d−1) sin²(β/2) + sin²((d−1)β/2) = 1/8 on (0, π/(d−1)).
double su_beta(int d);

/// Throws kUnsupportedGroup (Exact outside SU(2)/SO(3), or UserOverride),
/// kBadDimension.
NgConfig ng_constant(Group group, int d, NgSource mode,
                     const NumericEstimateOptions& options = {});

/// Exact where known, otherwise the analytic bound.
NgConfig default_ng(Group group, int d);

struct ExceptionalResult {
  bool exceptional = false;
  int n = 0;
  Complex center = 1.0;
};

/// Whether g^n is central for some n ≤ N, decided on the eigenvalue phases:
/// all n·φ_i ≡ θ mod 2π within tol.spec·n for one central α = e^{iθ}.
ExceptionalResult is_exceptional_spectrum(const GateMatrix& g, std::int64_t N,
                                          const Tolerances& tol = {});
ExceptionalResult is_exceptional_spectrum(const Eigen::MatrixXcd& g,
                                          Group group, std::int64_t N,
                                          const Tolerances& tol = {});

enum class AngleSet { kSU2, kSO3 };

/// Sorted a ∈ [0, 2) such that aπ is an exceptional angle: powers of
/// e^{iaπ} of order ≤ 6 reach ±1 (SU(2)), or rotations by aπ of order ≤ 12
/// (SO(3)).
std::vector<Rational> exceptional_angles(AngleSet set);

/// The element of exceptional_angles(set) within tol of phi/π (mod 2).
std::optional<Rational> match_exceptional_angle(double phi, AngleSet set,
                                                double tol = 1e-9);

}  // namespace univgate
