#include "univgate/gate.h"

#include <cmath>
#include <numbers>

#include "univgate/errors.h"

namespace univgate {

const char* group_name(Group group) {
  return group == Group::kSU ? "SU" : "SO";
}

Tolerances Tolerances::strict() {
  Tolerances t;
  t.gate = 1e-12;
  t.spec = 1e-11;
  t.exp = 1e-10;
  t.rank = 1e-10;
  t.ball = 1e-12;
  t.center = 1e-10;
  t.dedup = 1e-8;
  t.word_per_length = 1e-9;
  t.entry = 1e-12;
  return t;
}

Tolerances Tolerances::loose() {
  Tolerances t;
  t.gate = 1e-8;
  t.spec = 1e-7;
  t.exp = 1e-6;
  t.rank = 1e-6;
  t.ball = 1e-8;
  t.center = 1e-6;
  t.dedup = 1e-5;
  t.word_per_length = 1e-6;
  t.entry = 1e-8;
  return t;
}

Tolerances Tolerances::from_profile(std::string_view name) {
  if (name == "default") return Tolerances{};
  if (name == "strict") return strict();
  if (name == "loose") return loose();
  throw Error(ErrorCode::kBadArgument,
              "unknown tolerance profile '" + std::string(name) + "'");
}

int min_dimension(Group group) { return group == Group::kSU ? 2 : 3; }

GateMatrix validate_gate(const Eigen::MatrixXcd& raw, Group group,
                         const Tolerances& tol) {
  if (raw.rows() != raw.cols() || raw.rows() < 2) {
    throw Error(ErrorCode::kBadDimension, "gate must be square with d >= 2");
  }
  const int d = static_cast<int>(raw.rows());
  if (group == Group::kSO) {
    if (raw.imag().cwiseAbs().maxCoeff() > tol.gate) {
      throw Error(ErrorCode::kNotReal, "SO gate has complex entries");
    }
  }
  Eigen::MatrixXcd entries = raw;
  if (group == Group::kSO) entries = raw.real().cast<Complex>();
  const double unitarity =
      (entries.adjoint() * entries - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (!(unitarity <= tol.gate)) {
    throw Error(ErrorCode::kNotUnitary,
                "‖g†g − I‖_F = " + std::to_string(unitarity));
  }
  const double det = std::abs(entries.determinant() - Complex(1.0, 0.0));
  if (!(det <= tol.gate)) {
    throw Error(ErrorCode::kDetNotOne, "|det g − 1| = " + std::to_string(det));
  }
  return GateMatrix(group, std::move(entries), unitarity, det);
}

Eigen::MatrixXcd project_to_group(const Eigen::MatrixXcd& m, Group group) {
  const int d = static_cast<int>(m.rows());
  if (group == Group::kSO) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        m.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose();
    return q.cast<Complex>();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd q = svd.matrixU() * svd.matrixV().adjoint();
  // The drift is tiny, so the principal d-th root of det lands on the
  // right branch.
  const Complex det = q.determinant();
  q *= std::pow(det / std::abs(det), -1.0 / d);
  return q;
}

std::vector<Complex> center_elements(Group group, int d) {
  std::vector<Complex> out;
  if (group == Group::kSU) {
    for (int m = 0; m < d; ++m) {
      out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * m / d));
    }
    // Exact values for the common roots keep traces clean.
    out[0] = 1.0;
    if (d % 2 == 0) out[d / 2] = -1.0;
  } else {
    out.push_back(1.0);
    if (d % 2 == 0) out.push_back(-1.0);
  }
  return out;
}

}  // namespace univgate
