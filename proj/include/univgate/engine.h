#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "univgate/gate.h"
#include "univgate/spectra.h"
#include "univgate/word_set.h"

namespace univgate {

struct EngineConfig {
  Tolerances tol;
  /// N_G for the ball/power step; default_ng() when unset.
  std::optional<NgConfig> ng;
  int max_length = 20;
  std::size_t max_set_size = 1000000;
  /// Adds g⁻¹ for every generator before growing words. Off by default:
  /// with positive words only, a finite closure is already a group.
  bool close_under_inverses = false;
};

enum class VerdictStatus { kUniversal, kFinite, kCommutantObstruction, kInconclusive };

const char* verdict_status_name(VerdictStatus status);

struct Witness {
  /// Indices into UniversalityVerdict::generator_names.
  std::vector<int> word;
  int power = 0;
  Complex center = 1.0;
  /// True when the element was flagged by the non-exceptional spectrum test
  /// before the ball/power step.
  bool fast_path = false;
};

struct TraceEntry {
  int l = 0;
  int step = 0;
  std::string message;
};

struct UniversalityVerdict {
  VerdictStatus status = VerdictStatus::kInconclusive;
  std::optional<std::int64_t> order;
  std::optional<std::string> group_label;
  std::optional<Witness> witness;
  std::vector<TraceEntry> trace;
  int commutant_dim = 0;
  double commutant_gap = 0.0;
  bool ill_conditioned = false;
  /// Step that decided the verdict (1, 2 or 3; 0 when undecided).
  int step = 0;
  /// Universal: length of the words containing the witness. Finite: length
  /// of the longest word in the closed set.
  int termination_l = 0;
  std::int64_t n_g_used = 0;
  NgSource ng_source = NgSource::kExact;
  /// "g0", "g1", …; inverse generators appear as "g0^-1".
  std::vector<std::string> generator_names;
  /// Closed set for Finite verdicts.
  std::shared_ptr<const WordSet> closed_set;
};

/// The three-step decision procedure. Throws kEmptyInput,
/// kDimensionMismatch, kUnsupportedGroup (SO(4)).
UniversalityVerdict decide_universality(const std::vector<GateMatrix>& gates,
                                        const EngineConfig& config = {});

/// Independent re-check of a Universal verdict: commutant of the original
/// gates is trivial and the witness word, raised to its power through an
/// eigendecomposition, lies in a ball but not in the center.
bool verify_universal(const std::vector<GateMatrix>& gates,
                      const UniversalityVerdict& verdict,
                      const EngineConfig& config = {});

/// Closure check for Finite verdicts: every element times every generator is
/// in the set, the identity is present and so is every inverse.
bool verify_finite(const WordSet& ws);

struct FiniteGroupInfo {
  std::int64_t order = 0;
  std::optional<std::string> label;
  /// Element order → number of elements of that order.
  std::map<int, int> order_statistics;
};

/// Labels SU(2) closures (trivial, cyclic, dicyclic, <2,3,3>, <2,3,4>,
/// <2,3,5>) and SO(3) closures (cyclic, dihedral, A4, S4, A5) from element
/// order statistics and, for dicyclic groups, the presentation
/// ⟨a, x | a^{2n} = 1, x² = aⁿ, x a x⁻¹ = a⁻¹⟩. Throws kNotClosed.
FiniteGroupInfo classify_finite_group(const WordSet& ws);

/// Orders of every element of a closed set (same indexing as the set).
std::vector<int> element_orders(const WordSet& ws);

struct WordLengthBound {
  double a = 0.0;
  double b = 0.0;
  double a1 = 0.0;
  double bound = 0.0;
};

/// Volume constant a₁ for SU(2) balls.
double su2_volume_constant();

/// l ≤ A log(1/ε) + B with A = (d²−1)/log(1/λ₁) and
/// B = [log(2^{d²−1}/a₁) + ½(d²−1) log(d²−1)] / log(1/λ₁).
/// a₁ defaults to su2_volume_constant() for d = 2 and must be given
/// otherwise. Throws kBadLambda, kBadArgument.
WordLengthBound word_length_bound(double lambda1, int d, double epsilon,
                                  std::optional<double> a1 = std::nullopt);

}  // namespace univgate
