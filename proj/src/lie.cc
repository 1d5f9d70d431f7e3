#include "univgate/lie.h"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "univgate/errors.h"

namespace univgate {
namespace {

Eigen::MatrixXcd unit(int d, int i, int j) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

std::shared_ptr<LieBasis> build_basis(Group group, int d) {
  auto basis = std::make_shared<LieBasis>();
  basis->group = group;
  basis->d = d;
  const double s = 1.0 / std::sqrt(2.0);
  basis->gram_normalization = s;
  const Complex i_unit(0.0, 1.0);
  if (group == Group::kSU) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        basis->elements.push_back(s * (unit(d, i, j) - unit(d, j, i)));
        basis->elements.push_back(s * i_unit * (unit(d, i, j) + unit(d, j, i)));
      }
    }
    const size_t first_z = basis->elements.size();
    for (int i = 0; i + 1 < d; ++i) {
      Eigen::MatrixXcd z = s * i_unit * (unit(d, i, i) - unit(d, i + 1, i + 1));
      for (size_t k = first_z; k < basis->elements.size(); ++k) {
        z -= killing_inner(basis->elements[k], z) * basis->elements[k];
      }
      z /= std::sqrt(killing_inner(z, z));
      basis->elements.push_back(z);
    }
  } else {
    for (int i = d - 1; i >= 0; --i) {
      for (int j = d - 1; j > i; --j) {
        basis->elements.push_back(s * (unit(d, i, j) - unit(d, j, i)));
      }
    }
  }
  const int m = basis->dim();
  basis->flattened.resize(d * d, m);
  for (int a = 0; a < m; ++a) {
    basis->flattened.col(a) =
        Eigen::Map<const Eigen::VectorXcd>(basis->elements[a].data(), d * d);
  }
  return basis;
}

void check_dim(const Eigen::MatrixXcd& m, const LieBasis& basis) {
  if (m.rows() != basis.d || m.cols() != basis.d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix size does not match the Lie basis");
  }
}

}  // namespace

std::shared_ptr<const LieBasis> standard_basis(Group group, int d) {
  if (d < min_dimension(group)) {
    throw Error(ErrorCode::kBadDimension,
                std::string("no standard basis for ") + group_name(group) +
                    "(" + std::to_string(d) + ")");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const LieBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(group), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = build_basis(group, d);
  cache.emplace(key, basis);
  return basis;
}

double killing_inner(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  // −tr(XY) = Σ_ij −X_ij Y_ji
  return -(x.cwiseProduct(y.transpose())).sum().real();
}

Eigen::VectorXd algebra_coordinates(const Eigen::MatrixXcd& x,
                                    const LieBasis& basis) {
  check_dim(x, basis);
  const int d = basis.d;
  Eigen::Map<const Eigen::VectorXcd> vx(x.data(), d * d);
  // For anti-Hermitian X_a, −tr(X_a M) is the Frobenius product ⟨X_a, M⟩.
  return (basis.flattened.adjoint() * vx).real();
}

Eigen::MatrixXcd algebra_element(const Eigen::VectorXd& coords,
                                 const LieBasis& basis) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(basis.d, basis.d);
  for (int a = 0; a < basis.dim(); ++a) x += coords(a) * basis.elements[a];
  return x;
}

Eigen::MatrixXd adjoint_matrix(const Eigen::MatrixXcd& g,
                               const LieBasis& basis) {
  check_dim(g, basis);
  const int d = basis.d;
  const int m = basis.dim();
  Eigen::MatrixXcd images(d * d, m);
  const Eigen::MatrixXcd g_inv = g.adjoint();
  for (int b = 0; b < m; ++b) {
    Eigen::MatrixXcd conj = g * basis.elements[b] * g_inv;
    images.col(b) = Eigen::Map<const Eigen::VectorXcd>(conj.data(), d * d);
  }
  return (basis.flattened.adjoint() * images).real();
}

AdjointMatrix adjoint_of_gate(const GateMatrix& g, const LieBasis& basis) {
  if (g.group() != basis.group) {
    throw Error(ErrorCode::kDimensionMismatch, "gate and basis groups differ");
  }
  return {AdjointKind::kAd, adjoint_matrix(g.entries(), basis)};
}

AdjointMatrix adjoint_of_algebra(const Eigen::MatrixXcd& x,
                                 const LieBasis& basis) {
  check_dim(x, basis);
  const int d = basis.d;
  const int m = basis.dim();
  Eigen::MatrixXcd x0 = x;
  x0.diagonal().array() -= x.trace() / static_cast<double>(d);
  Eigen::MatrixXcd images(d * d, m);
  for (int b = 0; b < m; ++b) {
    Eigen::MatrixXcd c = x0 * basis.elements[b] - basis.elements[b] * x0;
    images.col(b) = Eigen::Map<const Eigen::VectorXcd>(c.data(), d * d);
  }
  return {AdjointKind::kad, (basis.flattened.adjoint() * images).real()};
}

}  // namespace univgate
