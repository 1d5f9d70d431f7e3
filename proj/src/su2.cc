#include "univgate/su2.h"

#include <cmath>
#include <numbers>

#include "univgate/errors.h"

namespace univgate {
namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::int64_t kMaxDenominator = 1000;

std::optional<Rational> maybe_exact(double phi, const std::optional<Rational>& exact,
                                    double tol) {
  if (exact) return mod_two(*exact);
  // Denominators stay small enough that a tol-sized match is not an
  // accident of double precision (1/π has a convergent within 1e−10 at
  // q ≈ 1e5).
  auto r = rationalize(phi / kPi, kMaxDenominator, tol);
  if (r) return mod_two(*r);
  return std::nullopt;
}

bool is_quarter_turn(double phi, double tol) { return std::abs(std::cos(phi)) <= tol; }

}  // namespace

Eigen::Matrix2cd su2_x() {
  Eigen::Matrix2cd m;
  m << 0.0, 1.0, -1.0, 0.0;
  return m;
}

Eigen::Matrix2cd su2_y() {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << 0.0, i, i, 0.0;
  return m;
}

Eigen::Matrix2cd su2_z() {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << i, 0.0, 0.0, -i;
  return m;
}

Eigen::Matrix2cd su2_matrix(double phi, const Eigen::Vector3d& k) {
  return std::cos(phi) * Eigen::Matrix2cd::Identity() +
         std::sin(phi) * (k.x() * su2_x() + k.y() * su2_y() + k.z() * su2_z());
}

Eigen::Matrix3d so3_matrix(double phi, const Eigen::Vector3d& k) {
  Eigen::Matrix3d cross;
  cross << 0.0, -k.z(), k.y(), k.z(), 0.0, -k.x(), -k.y(), k.x(), 0.0;
  return Eigen::Matrix3d::Identity() + std::sin(phi) * cross +
         (1.0 - std::cos(phi)) * cross * cross;
}

AxisAngleGate AxisAngleGate::su2(double phi, const Eigen::Vector3d& axis) {
  AxisAngleGate g;
  g.phi = phi;
  g.axis = axis.normalized();
  return g;
}

AxisAngleGate AxisAngleGate::su2(const Rational& a, const Eigen::Vector3d& axis) {
  AxisAngleGate g;
  g.exact = mod_two(a);
  g.phi = static_cast<double>(g.exact->value_ld() * std::numbers::pi_v<long double>);
  g.axis = axis.normalized();
  return g;
}

GateMatrix materialize(const AxisAngleGate& gate, const Tolerances& tol) {
  if (std::abs(gate.axis.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::kBadArgument, "axis must be a unit vector");
  }
  if (gate.group == AxisGroup::kSU2) {
    return validate_gate(su2_matrix(gate.phi, gate.axis), Group::kSU, tol);
  }
  return validate_gate(so3_matrix(gate.phi, gate.axis).cast<Complex>(),
                       Group::kSO, tol);
}

AxisAngleGate axis_angle_of(const Eigen::Matrix2cd& u) {
  const double c = 0.5 * (u(0, 0) + u(1, 1)).real();
  Eigen::Vector3d v;
  v.x() = 0.5 * (u(0, 1).real() - u(1, 0).real());
  v.y() = 0.5 * (u(0, 1).imag() + u(1, 0).imag());
  v.z() = 0.5 * (u(0, 0).imag() - u(1, 1).imag());
  const double s = v.norm();
  AxisAngleGate g;
  g.phi = std::atan2(s, c);
  g.axis = s > 1e-12 ? Eigen::Vector3d(v / s) : Eigen::Vector3d::UnitZ();
  return g;
}

ProductResult su2_product(const AxisAngleGate& a, const AxisAngleGate& b) {
  const double c1 = std::cos(a.phi), s1 = std::sin(a.phi);
  const double c2 = std::cos(b.phi), s2 = std::sin(b.phi);
  const double cos_gamma = c1 * c2 - s1 * s2 * a.axis.dot(b.axis);
  const Eigen::Vector3d n = a.axis * s1 * c2 + b.axis * s2 * c1 +
                            a.axis.cross(b.axis) * s1 * s2;
  ProductResult out;
  const double sin_gamma = n.norm();
  out.gate.phi = std::atan2(sin_gamma, cos_gamma);
  out.axis_undefined = sin_gamma <= 1e-12;
  out.gate.axis = out.axis_undefined ? Eigen::Vector3d::UnitZ()
                                     : Eigen::Vector3d(n / sin_gamma);
  return out;
}

DicyclicResult dicyclic_check(const AxisAngleGate& a, const AxisAngleGate& b,
                              double tol) {
  DicyclicResult out;
  auto finish = [&](const std::optional<Rational>& angle) {
    if (!angle) return;  // irrational: infinite dicyclic
    const std::int64_t n =
        std::max(su2_order(*angle), su2_order(mod_two(*angle + Rational(1))));
    out.finite = true;
    out.cyclic_order = n;
    out.group_order = 2 * n;
  };
  const bool qa = is_quarter_turn(a.phi, tol);
  const bool qb = is_quarter_turn(b.phi, tol);
  if (qa && qb) {
    const ProductResult c = su2_product(a, b);
    finish(maybe_exact(c.gate.phi, std::nullopt, tol));
    return out;
  }
  if (std::abs(a.axis.dot(b.axis)) <= tol && (qa || qb)) {
    const AxisAngleGate& rot = qb ? a : b;
    finish(maybe_exact(rot.phi, rot.exact, tol));
    return out;
  }
  throw Error(ErrorCode::kNotObstructedShape,
              "pair is not a commutant-obstructed shape");
}

UniversalityVerdict classify_pair(const AxisAngleGate& a, const AxisAngleGate& b,
                                  const EngineConfig& config) {
  const GateMatrix ga = materialize(a, config.tol);
  const GateMatrix gb = materialize(b, config.tol);
  const Eigen::MatrixXcd comm =
      ga.entries() * gb.entries() - gb.entries() * ga.entries();
  if (comm.norm() <= 1e-12) {
    throw Error(ErrorCode::kCommutingPair, "the two gates commute");
  }
  UniversalityVerdict v = decide_universality({ga, gb}, config);
  if (v.status == VerdictStatus::kCommutantObstruction) {
    const DicyclicResult dic = dicyclic_check(a, b);
    v.group_label = "dicyclic";
    if (!dic.finite) {
      v.trace.push_back({0, 1, "infinite dicyclic group (non-universal, infinite)"});
      return v;
    }
    // Confirm the order by explicit closure.
    WordSet ws({ga.entries(), gb.entries()}, Group::kSU, config.tol,
               static_cast<std::size_t>(4 * *dic.group_order + 16));
    try {
      while (!ws.closed()) ws = grow_words(std::move(ws));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSetBudgetExceeded) throw;
      v.trace.push_back({0, 1, "contract violated: dicyclic closure exceeds predicted order"});
      return v;
    }
    const FiniteGroupInfo info = classify_finite_group(ws);
    v.order = info.order;
    v.trace.push_back({0, 1, "finite dicyclic group, closure order " +
                                 std::to_string(info.order) +
                                 ", predicted " + std::to_string(*dic.group_order)});
    if (info.order != *dic.group_order ||
        (info.label != "dicyclic" && info.label != "cyclic")) {
      v.trace.push_back({0, 1, "contract violated: dicyclic closure mismatch"});
    }
    v.closed_set = std::make_shared<const WordSet>(std::move(ws));
    return v;
  }
  if (v.status == VerdictStatus::kUniversal && v.termination_l > 4) {
    v.trace.push_back({v.termination_l, 2,
                       "contract violated: universal only at l > 4"});
  }
  if (v.status == VerdictStatus::kFinite) {
    const std::string label = v.group_label.value_or("");
    const bool polyhedral =
        label == "<2,3,3>" || label == "<2,3,4>" || label == "<2,3,5>";
    if (v.termination_l > 13 || !polyhedral) {
      v.trace.push_back({v.termination_l, 3,
                         "contract violated: finite group outside the "
                         "binary polyhedral cases or l > 13"});
    }
  }
  if (v.status == VerdictStatus::kInconclusive) {
    v.trace.push_back({v.termination_l, 3, "contract violated: inconclusive"});
  }
  return v;
}

bool contract_violated(const UniversalityVerdict& verdict) {
  for (const auto& e : verdict.trace) {
    if (e.message.starts_with("contract violated")) return true;
  }
  return false;
}

}  // namespace univgate
