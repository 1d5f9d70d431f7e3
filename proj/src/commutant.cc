#include "univgate/commutant.h"

#include <limits>

#include <Eigen/SVD>

#include "univgate/errors.h"
#include "univgate/lie.h"

namespace univgate {
namespace {

Eigen::MatrixXd stacked_system(const std::vector<Eigen::MatrixXd>& mats) {
  if (mats.empty()) {
    throw Error(ErrorCode::kEmptyInput, "commutant of an empty list");
  }
  const int m = static_cast<int>(mats.front().rows());
  for (const auto& mat : mats) {
    if (mat.rows() != m || mat.cols() != m) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "commutant inputs must share one square size");
    }
  }
  const int m2 = m * m;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(mats.size() * m2, m2);
  for (size_t k = 0; k < mats.size(); ++k) {
    const Eigen::MatrixXd& mat = mats[k];
    auto block = a.middleRows(k * m2, m2);
    // vec(M L) = (I ⊗ M) vec L ; vec(L M) = (Mᵀ ⊗ I) vec L
    for (int j = 0; j < m; ++j) {
      block.block(j * m, j * m, m, m) += mat;
      for (int i = 0; i < m; ++i) {
        block.block(j * m, i * m, m, m).diagonal().array() -= mat(i, j);
      }
    }
  }
  return a;
}

CommutantReport summarize(const Eigen::VectorXd& sigma, const Tolerances& tol) {
  CommutantReport report;
  const int n = static_cast<int>(sigma.size());
  report.singular_values.assign(sigma.data(), sigma.data() + n);
  const double threshold = tol.rank * (n > 0 ? sigma(0) : 0.0);
  int rank = 0;
  while (rank < n && sigma(rank) > threshold) ++rank;
  report.dim = n - rank;
  report.trivial = report.dim == 1;
  if (rank == 0 || rank == n || sigma(rank) == 0.0) {
    report.gap = std::numeric_limits<double>::infinity();
  } else {
    report.gap = sigma(rank - 1) / sigma(rank);
  }
  report.ill_conditioned = report.gap < tol.ill_conditioned_gap;
  return report;
}

}  // namespace

CommutantReport commutant_dim(const std::vector<Eigen::MatrixXd>& mats,
                              const Tolerances& tol) {
  Eigen::MatrixXd a = stacked_system(mats);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return summarize(svd.singularValues(), tol);
}

std::vector<Eigen::MatrixXd> commutant_basis(
    const std::vector<Eigen::MatrixXd>& mats, const Tolerances& tol) {
  Eigen::MatrixXd a = stacked_system(mats);
  const int m = static_cast<int>(mats.front().rows());
  // BDCSVD returns wrong right singular vectors for exactly repeated zero
  // singular values (Eigen 3.4); Jacobi is slower but exact here.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
  CommutantReport report = summarize(svd.singularValues(), tol);
  std::vector<Eigen::MatrixXd> out;
  const int n = m * m;
  for (int k = n - report.dim; k < n; ++k) {
    Eigen::VectorXd v = svd.matrixV().col(k);
    out.push_back(Eigen::Map<Eigen::MatrixXd>(v.data(), m, m));
  }
  return out;
}

CommutantReport check_necessary_condition(const std::vector<GateMatrix>& gates,
                                          const Tolerances& tol) {
  if (gates.empty()) throw Error(ErrorCode::kEmptyInput, "no gates");
  auto basis = standard_basis(gates.front().group(), gates.front().dim());
  std::vector<Eigen::MatrixXd> ads;
  for (const auto& g : gates) ads.push_back(adjoint_of_gate(g, *basis).entries);
  return commutant_dim(ads, tol);
}

CommutantReport check_algebra_generation(
    const std::vector<Eigen::MatrixXcd>& elems, Group group,
    const Tolerances& tol) {
  if (elems.empty()) throw Error(ErrorCode::kEmptyInput, "no algebra elements");
  auto basis = standard_basis(group, static_cast<int>(elems.front().rows()));
  std::vector<Eigen::MatrixXd> ads;
  for (const auto& x : elems) ads.push_back(adjoint_of_algebra(x, *basis).entries);
  return commutant_dim(ads, tol);
}

}  // namespace univgate
