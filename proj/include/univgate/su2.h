#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "univgate/engine.h"
#include "univgate/gate.h"
#include "univgate/rational.h"

namespace univgate {

/// su(2) basis X = [[0,1],[−1,0]], Y = [[0,i],[i,0]], Z = [[i,0],[0,−i]].
Eigen::Matrix2cd su2_x();
Eigen::Matrix2cd su2_y();
Eigen::Matrix2cd su2_z();

/// U(φ, k) = cos φ I + sin φ (k_x X + k_y Y + k_z Z).
Eigen::Matrix2cd su2_matrix(double phi, const Eigen::Vector3d& k);

/// O(φ, k) = exp(φ(−k_x X₂₃ + k_y X₁₃ − k_z X₁₂)).
Eigen::Matrix3d so3_matrix(double phi, const Eigen::Vector3d& k);

enum class AxisGroup { kSU2, kSO3 };

struct AxisAngleGate {
  double phi = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  AxisGroup group = AxisGroup::kSU2;
  /// phi / π when phi is known exactly.
  std::optional<Rational> exact;

  static AxisAngleGate su2(double phi, const Eigen::Vector3d& axis);
  static AxisAngleGate su2(const Rational& a, const Eigen::Vector3d& axis);
};

GateMatrix materialize(const AxisAngleGate& gate, const Tolerances& tol = {});

/// (φ, k) with φ ∈ [0, π] from an SU(2) matrix; the axis is arbitrary
/// (ẑ) when the matrix is ±I.
AxisAngleGate axis_angle_of(const Eigen::Matrix2cd& u);

struct ProductResult {
  AxisAngleGate gate;
  /// sin γ ≈ 0: the product is ±I and the axis is a placeholder.
  bool axis_undefined = false;
};

/// cos γ = cos φ₁ cos φ₂ − sin φ₁ sin φ₂ k₁·k₂ and
/// k₁₂ = (k₁ sin φ₁ cos φ₂ + k₂ sin φ₂ cos φ₁ + k₁×k₂ sin φ₁ sin φ₂)/sin γ.
ProductResult su2_product(const AxisAngleGate& a, const AxisAngleGate& b);

struct DicyclicResult {
  bool finite = false;
  /// Order of the cyclic subgroup ⟨a, −I⟩ of index 2.
  std::optional<std::int64_t> cyclic_order;
  /// Group order, twice cyclic_order.
  std::optional<std::int64_t> group_order;
};

/// Group generated by a pair obstructed by the commutant test: k₁ ⊥ k₂ with
/// φ₂ ∈ {π/2, 3π/2}, or both angles in {π/2, 3π/2}. Throws
/// kNotObstructedShape.
DicyclicResult dicyclic_check(const AxisAngleGate& a, const AxisAngleGate& b,
                              double tol = 1e-9);

/// Engine run on a noncommuting pair, with the SU(2) contract recorded in
/// the trace (Universal by l ≤ 4, Finite by l ≤ 13 with a polyhedral
/// label). Commutant obstructions are labelled through dicyclic_check.
/// Throws kCommutingPair.
UniversalityVerdict classify_pair(const AxisAngleGate& a, const AxisAngleGate& b,
                                  const EngineConfig& config = {});

/// True when the trace of a classify_pair verdict records a broken contract.
bool contract_violated(const UniversalityVerdict& verdict);

struct TripletRecord {
  Rational phi1, phi2, gamma;
  long double cos_alpha = 0.0L;
  bool feasible = false;
  int termination_l = 0;  ///< 0 for commutant obstructions
  int step = 0;
  std::string group_label;
  std::int64_t order = 0;
};

/// All (φ₁, φ₂, γ) with φ₁ ∈ L∖{0, 1/2, 1, 3/2}, φ₂ ∈ L∖{0, 1}, γ ∈ L
/// (L the SU(2) exceptional set, angles in units of π). Feasible triplets
/// are classified on k₁ = ẑ, k₂ = (sin α, 0, cos α).
std::vector<TripletRecord> enumerate_triplets(int jobs = 1,
                                              const EngineConfig& config = {});

struct Table1Row {
  std::optional<int> l;
  int step = 0;
  std::string group_label;
  std::int64_t count = 0;
};

/// Counts keyed by (l, step, label), in the order of the published table.
std::vector<Table1Row> aggregate_table1(const std::vector<TripletRecord>& records);

/// The published table.
std::vector<Table1Row> expected_table1();

}  // namespace univgate
