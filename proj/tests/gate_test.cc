#include "univgate/gate.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace univgate {
namespace {

using testing::expect_error;

TEST(ValidateGateTest, AcceptsGroupElements) {
  testing::Rng rng(1);
  for (int d = 2; d <= 5; ++d) {
    const GateMatrix g = validate_gate(testing::random_su(d, rng), Group::kSU);
    EXPECT_EQ(g.dim(), d);
    EXPECT_LT(g.unitarity_defect(), 1e-12);
    EXPECT_LT(g.det_defect(), 1e-12);
  }
  const GateMatrix o = validate_gate(testing::random_so(4, rng), Group::kSO);
  EXPECT_EQ(o.group(), Group::kSO);
  EXPECT_DOUBLE_EQ(o.entries().imag().norm(), 0.0);
}

TEST(ValidateGateTest, Rejections) {
  expect_error(ErrorCode::kBadDimension, [] {
    validate_gate(Eigen::MatrixXcd::Identity(1, 1), Group::kSU);
  });
  expect_error(ErrorCode::kBadDimension, [] {
    validate_gate(Eigen::MatrixXcd::Identity(2, 3), Group::kSU);
  });
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 0) = 1.1;
  expect_error(ErrorCode::kNotUnitary, [&] { validate_gate(m, Group::kSU); });
  Eigen::MatrixXcd flip = Eigen::MatrixXcd::Identity(2, 2);
  flip(1, 1) = -1.0;
  expect_error(ErrorCode::kDetNotOne, [&] { validate_gate(flip, Group::kSU); });
  Eigen::MatrixXcd phase = Eigen::MatrixXcd::Identity(3, 3);
  phase(0, 0) = Complex(0, 1);
  phase(1, 1) = Complex(0, -1);
  EXPECT_NO_THROW(validate_gate(phase, Group::kSU));
  expect_error(ErrorCode::kNotReal, [&] { validate_gate(phase, Group::kSO); });
}

TEST(ValidateGateTest, ToleranceBoundary) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2);
  m(0, 0) = 1.0 + 1e-12;
  m(1, 1) = 1.0 / m(0, 0);
  EXPECT_NO_THROW(validate_gate(m, Group::kSU));
  expect_error(ErrorCode::kNotUnitary,
               [&] { validate_gate(m, Group::kSU, Tolerances::strict()); });
}

TEST(ProjectToGroupTest, RepairsDrift) {
  testing::Rng rng(2);
  for (Group g : {Group::kSU, Group::kSO}) {
    Eigen::MatrixXcd u = testing::random_gate(g, 4, rng);
    Eigen::MatrixXcd noisy = u + 1e-7 * testing::gaussian_complex(4, rng);
    if (g == Group::kSO) noisy = noisy.real().cast<Complex>();
    const Eigen::MatrixXcd p = project_to_group(noisy, g);
    EXPECT_NO_THROW(validate_gate(p, g, Tolerances::strict()));
    EXPECT_LT((p - u).norm(), 1e-6);
  }
}

TEST(CenterTest, Elements) {
  EXPECT_EQ(center_elements(Group::kSU, 3).size(), 3u);
  EXPECT_EQ(center_elements(Group::kSU, 2)[1], Complex(-1.0, 0.0));
  EXPECT_EQ(center_elements(Group::kSO, 3).size(), 1u);
  EXPECT_EQ(center_elements(Group::kSO, 4).size(), 2u);
  for (const Complex& z : center_elements(Group::kSU, 5)) {
    EXPECT_NEAR(std::abs(std::pow(z, 5) - 1.0), 0.0, 1e-14);
  }
}

TEST(TolerancesTest, Profiles) {
  EXPECT_LT(Tolerances::from_profile("strict").gate, Tolerances{}.gate);
  EXPECT_GT(Tolerances::from_profile("loose").gate, Tolerances{}.gate);
  EXPECT_EQ(Tolerances::from_profile("default").dedup, 1e-6);
  expect_error(ErrorCode::kBadArgument, [] { Tolerances::from_profile("sloppy"); });
}

}  // namespace
}  // namespace univgate
