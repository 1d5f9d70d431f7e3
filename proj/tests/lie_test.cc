#include "univgate/lie.h"

#include <numbers>

#include <gtest/gtest.h>

#include "test_util.h"
#include "univgate/su2.h"

namespace univgate {
namespace {

TEST(LieBasisTest, OrthonormalAndSized) {
  for (Group g : {Group::kSU, Group::kSO}) {
    for (int d = min_dimension(g); d <= 5; ++d) {
      const auto basis = standard_basis(g, d);
      const int expected = g == Group::kSU ? d * d - 1 : d * (d - 1) / 2;
      ASSERT_EQ(basis->dim(), expected);
      for (int a = 0; a < basis->dim(); ++a) {
        const auto& x = basis->elements[a];
        EXPECT_LT((x + x.adjoint()).norm(), 1e-14);
        EXPECT_LT(std::abs(x.trace()), 1e-14);
        for (int b = 0; b < basis->dim(); ++b) {
          EXPECT_NEAR(killing_inner(x, basis->elements[b]), a == b ? 1.0 : 0.0, 1e-12);
        }
      }
    }
  }
  testing::expect_error(ErrorCode::kBadDimension, [] { standard_basis(Group::kSO, 2); });
  testing::expect_error(ErrorCode::kBadDimension, [] { standard_basis(Group::kSU, 1); });
}

TEST(LieBasisTest, So3Order) {
  const auto basis = standard_basis(Group::kSO, 3);
  // X_23 first: nonzero at (1, 2).
  EXPECT_GT(std::abs(basis->elements[0](1, 2)), 0.5);
  EXPECT_GT(std::abs(basis->elements[1](0, 2)), 0.5);
  EXPECT_GT(std::abs(basis->elements[2](0, 1)), 0.5);
}

TEST(LieBasisTest, CoordinatesRoundTrip) {
  testing::Rng rng(3);
  for (Group g : {Group::kSU, Group::kSO}) {
    const auto basis = standard_basis(g, 4);
    const Eigen::MatrixXcd x = testing::random_algebra(g, 4, 2.0, rng);
    const Eigen::VectorXd c = algebra_coordinates(x, *basis);
    EXPECT_LT((algebra_element(c, *basis) - x).norm(), 1e-12);
    EXPECT_NEAR(c.norm(), x.norm(), 1e-12);
  }
}

TEST(AdjointTest, Su2CoversSo3) {
  testing::Rng rng(4);
  const auto basis = standard_basis(Group::kSU, 2);
  for (int i = 0; i < 200; ++i) {
    const double phi = testing::uniform(rng, 0.0, 2 * std::numbers::pi);
    const Eigen::Vector3d k = testing::random_unit(rng);
    const GateMatrix u = validate_gate(su2_matrix(phi, k), Group::kSU);
    const AdjointMatrix ad = adjoint_of_gate(u, *basis);
    EXPECT_EQ(ad.kind, AdjointKind::kAd);
    EXPECT_LT((ad.entries - so3_matrix(2 * phi, k)).norm(), 1e-10);
  }
}

TEST(AdjointTest, Su2AlgebraGenerators) {
  const auto basis = standard_basis(Group::kSU, 2);
  auto x_pair = [](int i, int j) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    m(i, j) = 1.0;
    m(j, i) = -1.0;
    return m;
  };
  // ad_X = −2 X₂₃, ad_Y = 2 X₁₃, ad_Z = −2 X₁₂ in the (X, Y, Z) basis.
  EXPECT_LT((adjoint_of_algebra(su2_x(), *basis).entries + 2 * x_pair(1, 2)).norm(), 1e-12);
  EXPECT_LT((adjoint_of_algebra(su2_y(), *basis).entries - 2 * x_pair(0, 2)).norm(), 1e-12);
  EXPECT_LT((adjoint_of_algebra(su2_z(), *basis).entries + 2 * x_pair(0, 1)).norm(), 1e-12);
}

TEST(AdjointTest, IdentityPartDropped) {
  testing::Rng rng(5);
  const auto basis = standard_basis(Group::kSU, 3);
  const Eigen::MatrixXcd x = testing::random_algebra(Group::kSU, 3, 1.0, rng);
  const Eigen::MatrixXcd shifted = x + Complex(0, 0.7) * Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_LT((adjoint_of_algebra(x, *basis).entries -
             adjoint_of_algebra(shifted, *basis).entries).norm(), 1e-12);
}

TEST(AdjointTest, OrthogonalAndAntisymmetric) {
  testing::Rng rng(6);
  for (Group g : {Group::kSU, Group::kSO}) {
    const auto basis = standard_basis(g, 4);
    const GateMatrix u = validate_gate(testing::random_gate(g, 4, rng), g);
    const Eigen::MatrixXd ad = adjoint_of_gate(u, *basis).entries;
    const auto n = ad.rows();
    EXPECT_LT((ad.transpose() * ad - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-10);
    EXPECT_NEAR(ad.determinant(), 1.0, 1e-10);
    const Eigen::MatrixXd small = adjoint_of_algebra(
        testing::random_algebra(g, 4, 1.0, rng), *basis).entries;
    EXPECT_LT((small + small.transpose()).norm(), 1e-12);
  }
}

TEST(AdjointTest, GroupMismatch) {
  const GateMatrix o = validate_gate(Eigen::MatrixXcd::Identity(3, 3), Group::kSO);
  EXPECT_THROW(adjoint_of_gate(o, *standard_basis(Group::kSU, 3)), Error);
  EXPECT_THROW(adjoint_of_gate(o, *standard_basis(Group::kSO, 4)), Error);
}

}  // namespace
}  // namespace univgate
