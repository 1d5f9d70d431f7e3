#pragma once

// Random generators and brute-force oracles shared by the tests and the
// acceptance binary.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "univgate/gate.h"

namespace univgate::testing {

using Rng = std::mt19937_64;

inline Eigen::MatrixXcd gaussian_complex(int d, Rng& rng) {
  std::normal_distribution<double> n;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

/// Haar-ish random element of SU(d): QR of a Ginibre matrix, phases fixed.
inline Eigen::MatrixXcd random_su(int d, Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_complex(d, rng));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  const Complex det = q.determinant();
  return q / std::pow(det, 1.0 / d);
}

inline Eigen::MatrixXcd random_so(int d, Rng& rng) {
  std::normal_distribution<double> n;
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = n(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  for (int i = 0; i < d; ++i)
    if (qr.matrixQR()(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q.cast<Complex>();
}

inline Eigen::MatrixXcd random_gate(Group g, int d, Rng& rng) {
  return g == Group::kSU ? random_su(d, rng) : random_so(d, rng);
}

/// Random algebra element with Frobenius norm `scale`.
inline Eigen::MatrixXcd random_algebra(Group g, int d, double scale, Rng& rng) {
  Eigen::MatrixXcd a = gaussian_complex(d, rng);
  if (g == Group::kSO) a = Eigen::MatrixXcd(a.real().cast<Complex>());
  Eigen::MatrixXcd x = a - a.adjoint();
  if (g == Group::kSU) x -= (x.trace() / double(d)) * Eigen::MatrixXcd::Identity(d, d);
  return x * (scale / x.norm());
}

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& x) { return x.exp(); }

inline Eigen::Vector3d random_unit(Rng& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  return v.normalized();
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Naive closure under right multiplication by the generators, with a
/// linear-scan duplicate test. Returns 0 when the size exceeds `cap`.
inline std::size_t brute_force_closure(const std::vector<Eigen::MatrixXcd>& gens,
                                       std::size_t cap = 2000) {
  std::vector<Eigen::MatrixXcd> elems = gens;
  std::size_t done = 0;
  auto known = [&](const Eigen::MatrixXcd& m) {
    for (const auto& e : elems)
      if ((e - m).norm() < 1e-8) return true;
    return false;
  };
  while (done < elems.size()) {
    const Eigen::MatrixXcd cur = elems[done++];
    for (const auto& g : gens) {
      Eigen::MatrixXcd p = cur * g;
      if (!known(p)) {
        elems.push_back(p);
        if (elems.size() > cap) return 0;
      }
    }
  }
  return elems.size();
}

}  // namespace univgate::testing
