#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace univgate {

using Complex = std::complex<double>;

enum class Group { kSU, kSO };

const char* group_name(Group group);

/// Every numerical threshold used by the library. Downstream rank and
/// membership decisions read from one record so their scales stay consistent.
struct Tolerances {
  double gate = 1e-10;        ///< unitarity / determinant / realness defects
  double spec = 1e-9;         ///< spectral angle snapping and comparisons
  double exp = 1e-8;          ///< ‖exp(log g) − g‖_F
  double rank = 1e-8;         ///< relative singular value threshold τ
  double ill_conditioned_gap = 1e3;
  double ball = 1e-10;        ///< strict margin inside the radius 1/√2
  double center = 1e-8;       ///< distance to αI counted as central
  double dedup = 1e-6;        ///< word set identification radius
  double word_per_length = 1e-7;
  double entry = 1e-10;       ///< "entry is zero / real" decisions

  static Tolerances strict();
  static Tolerances loose();
  /// "strict", "default" or "loose"; throws kBadArgument otherwise.
  static Tolerances from_profile(std::string_view name);
};

/// A validated element of SU(d) or SO(d). SO gates are stored with zero
/// imaginary parts.
class GateMatrix {
 public:
  Group group() const { return group_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  double unitarity_defect() const { return unitarity_defect_; }
  double det_defect() const { return det_defect_; }

 private:
  friend GateMatrix validate_gate(const Eigen::MatrixXcd&, Group,
                                  const Tolerances&);
  GateMatrix(Group group, Eigen::MatrixXcd entries, double u, double det)
      : group_(group), entries_(std::move(entries)), unitarity_defect_(u),
        det_defect_(det) {}

  Group group_;
  Eigen::MatrixXcd entries_;
  double unitarity_defect_;
  double det_defect_;
};

/// Throws Error with kBadDimension, kNotUnitary, kDetNotOne or kNotReal.
GateMatrix validate_gate(const Eigen::MatrixXcd& raw, Group group,
                         const Tolerances& tol = {});

/// Nearest group element by polar projection. For SU the determinant phase
/// is divided out; for SO the result is real.
Eigen::MatrixXcd project_to_group(const Eigen::MatrixXcd& m, Group group);

/// Scalars α with αI in the center: d-th roots of unity for SU(d), {1} for
/// SO(odd), {1, −1} for SO(even).
std::vector<Complex> center_elements(Group group, int d);

/// Smallest dimension for which the group is handled (2 for SU, 3 for SO).
int min_dimension(Group group);

}  // namespace univgate
