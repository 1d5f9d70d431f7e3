#include "univgate/spectra.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "univgate/errors.h"
#include "univgate/spectral.h"

namespace univgate {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_signed(double x) {
  x = std::fmod(x, 2.0 * kPi);
  if (x > kPi) x -= 2.0 * kPi;
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

}  // namespace

double ball_radius(const Tolerances& tol) {
  return 1.0 / std::sqrt(2.0) - tol.ball;
}

BallReport ball_membership(const Eigen::MatrixXcd& g, Group group,
                           const Tolerances& tol) {
  BallReport report;
  const int d = static_cast<int>(g.rows());
  const double radius = ball_radius(tol);
  for (Complex alpha : center_elements(group, d)) {
    const double dist = hs_distance_to_scalar(g, alpha);
    report.distances.emplace_back(alpha, dist);
    if (dist < radius && !report.member_of) report.member_of = alpha;
  }
  if (report.member_of) {
    Eigen::MatrixXcd diff = g;
    diff.diagonal().array() -= *report.member_of;
    report.in_center = diff.norm() <= tol.center;
  }
  return report;
}

BallReport ball_membership(const GateMatrix& g, const Tolerances& tol) {
  return ball_membership(g.entries(), g.group(), tol);
}

double angle_ball_sum(const std::vector<double>& phases, Complex alpha) {
  const double theta = std::arg(alpha);
  double sum = 0.0;
  for (double phi : phases) {
    const double s = std::sin(0.5 * (phi - theta));
    sum += s * s;
  }
  return sum;
}

PowerReport minimal_power(const Eigen::MatrixXcd& g, Group group,
                          std::int64_t N, const Tolerances& tol) {
  PowerReport report;
  Eigen::MatrixXcd power = g;
  for (std::int64_t n = 1; n <= N; ++n) {
    BallReport ball = ball_membership(power, group, tol);
    if (ball.member_of) {
      report.n_g = static_cast<int>(n);
      report.landing_center = ball.member_of;
      report.power_in_center = ball.in_center;
      return report;
    }
    power = power * g;
    if (n % 16 == 0) power = project_to_group(power, group);
  }
  return report;
}

PowerReport minimal_power(const GateMatrix& g, std::int64_t N,
                          const Tolerances& tol) {
  return minimal_power(g.entries(), g.group(), N, tol);
}

const char* ng_source_name(NgSource source) {
  switch (source) {
    case NgSource::kExact: return "Exact";
    case NgSource::kAnalyticBound: return "AnalyticBound";
    case NgSource::kNumericEstimate: return "NumericEstimate";
    case NgSource::kUserOverride: return "UserOverride";
  }
  return "Unknown";
}

double su_beta(int d) {
  if (d < 2) throw Error(ErrorCode::kBadDimension, "su_beta needs d >= 2");
  auto f = [d](double beta) {
    const double a = std::sin(0.5 * beta);
    const double b = std::sin(0.5 * (d - 1) * beta);
    return (d - 1) * a * a + b * b - 0.125;
  };
  double lo = 0.0;
  double hi = kPi / (d - 1);
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

std::int64_t checked_ceil(long double x) {
  if (!(x < 9e18L)) {
    throw Error(ErrorCode::kBadArgument, "analytic bound overflows int64");
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t analytic_bound(Group group, int d) {
  if (group == Group::kSU) {
    const long double beta = su_beta(d);
    const long double ratio = 2.0L * std::numbers::pi_v<long double> / beta;
    return checked_ceil(std::pow(ratio, d - 1) / d);
  }
  const int k = d / 2;
  const long double base =
      std::numbers::pi_v<long double> / std::asin(1.0L / (4.0L * std::sqrt(static_cast<long double>(k))));
  const long double value = std::pow(base, k);
  return checked_ceil(d % 2 == 1 ? value : 0.5L * value);
}

}  // namespace

NgConfig ng_constant(Group group, int d, NgSource mode,
                     const NumericEstimateOptions& options) {
  if (d < min_dimension(group)) {
    throw Error(ErrorCode::kBadDimension, "unsupported dimension");
  }
  NgConfig config;
  config.group = group;
  config.d = d;
  config.source = mode;
  config.flagged = group == Group::kSO && d == 4;
  if (config.flagged) {
    config.note = "SO(4) is outside the decision algorithm's scope";
  }
  switch (mode) {
    case NgSource::kExact:
      if (group == Group::kSU && d == 2) {
        config.value = 6;
      } else if (group == Group::kSO && d == 3) {
        config.value = 12;
      } else {
        throw Error(ErrorCode::kUnsupportedGroup,
                    "exact N_G is known only for SU(2) and SO(3)");
      }
      break;
    case NgSource::kAnalyticBound:
      config.value = analytic_bound(group, d);
      break;
    case NgSource::kNumericEstimate: {
      NumericEstimate est = estimate_ng(group, d, options);
      config.value = est.value;
      config.note += (config.note.empty() ? "" : "; ");
      config.note += "grid estimate at pi/" + std::to_string(options.divisions) +
                     " with x" + std::to_string(options.refine_factor) +
                     " refinement";
      break;
    }
    case NgSource::kUserOverride:
      throw Error(ErrorCode::kUnsupportedGroup,
                  "UserOverride values are supplied by the caller");
  }
  return config;
}

NgConfig default_ng(Group group, int d) {
  if ((group == Group::kSU && d == 2) || (group == Group::kSO && d == 3)) {
    return ng_constant(group, d, NgSource::kExact);
  }
  return ng_constant(group, d, NgSource::kAnalyticBound);
}

ExceptionalResult is_exceptional_spectrum(const Eigen::MatrixXcd& g,
                                          Group group, std::int64_t N,
                                          const Tolerances& tol) {
  const std::vector<double> phases = eigen_phases(g);
  const auto centers = center_elements(group, static_cast<int>(g.rows()));
  for (std::int64_t n = 1; n <= N; ++n) {
    const double slack = tol.spec * static_cast<double>(n);
    for (Complex alpha : centers) {
      const double theta = std::arg(alpha);
      bool all = true;
      for (double phi : phases) {
        if (std::abs(wrap_signed(n * phi - theta)) > slack) {
          all = false;
          break;
        }
      }
      if (all) return {true, static_cast<int>(n), alpha};
    }
  }
  return {};
}

ExceptionalResult is_exceptional_spectrum(const GateMatrix& g, std::int64_t N,
                                          const Tolerances& tol) {
  return is_exceptional_spectrum(g.entries(), g.group(), N, tol);
}

std::vector<Rational> exceptional_angles(AngleSet set) {
  std::set<Rational> out;
  if (set == AngleSet::kSU2) {
    // e^{iaπ} with (e^{iaπ})^n = ±1 for some n ≤ 6: a = m/n.
    for (int n = 1; n <= 6; ++n) {
      for (int m = 0; m < 2 * n; ++m) out.insert(Rational(m, n));
    }
  } else {
    // Rotation by aπ of order n ≤ 12: a = 2m/n.
    for (int n = 1; n <= 12; ++n) {
      for (int m = 0; m < n; ++m) out.insert(Rational(2 * m, n));
    }
  }
  return {out.begin(), out.end()};
}

std::optional<Rational> match_exceptional_angle(double phi, AngleSet set,
                                                double tol) {
  double a = std::fmod(phi / kPi, 2.0);
  if (a < 0.0) a += 2.0;
  for (const Rational& r : exceptional_angles(set)) {
    const double diff = std::abs(a - r.value());
    if (diff <= tol || std::abs(diff - 2.0) <= tol) return r;
  }
  return std::nullopt;
}

}  // namespace univgate
