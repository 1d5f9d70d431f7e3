#include "univgate/beamsplitter.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_util.h"
#include "univgate/lie.h"

namespace univgate {
namespace {

constexpr double kPi = std::numbers::pi;

Beamsplitter su_bs(double phi, Eigen::Vector3d k, int d = 3) {
  return make_beamsplitter(AxisAngleGate::su2(phi, k.normalized()), d);
}

Complex trace3(std::initializer_list<Eigen::MatrixXcd> ms) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(3, 3);
  for (const auto& m : ms) p = p * m;
  return p.trace();
}

TEST(EmbedTest, GateSetShape) {
  const Beamsplitter bs = su_bs(0.7, {0.3, 0.4, 0.5});
  const auto s3 = embed_gate_set(bs, 3);
  ASSERT_EQ(s3.size(), 6u);
  EXPECT_EQ(embed_gate_set(bs, 4).size(), 12u);
  EXPECT_EQ(s3_index(1, 2, false), 0);
  EXPECT_EQ(s3_index(2, 3, true), 5);
  const Eigen::MatrixXcd e = embed(bs.b, 1, 3, 4);
  EXPECT_EQ(e(0, 0), Complex(1.0));
  EXPECT_EQ(e(2, 2), Complex(1.0));
  EXPECT_EQ(e(1, 1), bs.b(0, 0));
  EXPECT_EQ(e(3, 1), bs.b(1, 0));
  EXPECT_EQ(swapped(bs.b)(0, 0), bs.b(1, 1));
  EXPECT_EQ(swapped(bs.b)(0, 1), bs.b(1, 0));
  testing::expect_error(ErrorCode::kBadDimension, [&] { embed_gate_set(bs, 2); });
  testing::expect_error(ErrorCode::kBadDimension,
                        [] { make_beamsplitter(Eigen::Matrix2cd::Identity(), Group::kSU, 2); });
}

TEST(EmbedTest, IdentityEmbedsToIdentity) {
  const Beamsplitter bs = make_beamsplitter(Eigen::Matrix2cd::Identity(), Group::kSU);
  for (const auto& g : embed_gate_set(bs, 3))
    EXPECT_LT((g.entries() - Eigen::MatrixXcd::Identity(3, 3)).norm(), 1e-15);
  EXPECT_EQ(obstruction_family(bs).family, ObstructionFamily::kCentral);
  EXPECT_NE(unitary_bs_universal(bs).status, VerdictStatus::kUniversal);
}

TEST(FamilyTest, KnownFamiliesAreNotUniversal) {
  struct Case {
    Beamsplitter bs;
    ObstructionFamily family;
  };
  const std::vector<Case> cases = {
      {su_bs(0.7, {1, 0, 0}), ObstructionFamily::kRealOffDiag},
      {su_bs(1.3, {0, 0, 1}), ObstructionFamily::kDiagonal},
      {su_bs(kPi / 2, {0, 1, 0}), ObstructionFamily::kQuarterTurn},
      {su_bs(kPi / 2, {0.6, 0.8, 0}), ObstructionFamily::kQuarterTurn},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(obstruction_family(c.bs).family, c.family);
    const UniversalityVerdict v = unitary_bs_universal(c.bs);
    EXPECT_NE(v.status, VerdictStatus::kUniversal) << obstruction_family_name(c.family);
    EXPECT_NE(v.status, VerdictStatus::kInconclusive);
  }
}

TEST(FamilyTest, QuarterTurnIsFinite) {
  const UniversalityVerdict v = unitary_bs_universal(su_bs(kPi / 2, {0, 1, 0}));
  ASSERT_EQ(v.status, VerdictStatus::kFinite);
  EXPECT_EQ(v.order, 96);
  ASSERT_TRUE(v.closed_set);
  EXPECT_TRUE(verify_finite(*v.closed_set));
}

TEST(FamilyTest, Borderline) {
  EXPECT_TRUE(obstruction_family(su_bs(0.7, {1e-8, 0, 1})).borderline);
  EXPECT_FALSE(obstruction_family(su_bs(0.7, {0.3, 0.4, 0.5})).borderline);
}

TEST(FamilyTest, CartanPlaneInvariance) {
  EXPECT_TRUE(cartan_plane_invariant(su_bs(kPi / 2, {0, 1, 0})));
  EXPECT_TRUE(cartan_plane_invariant(su_bs(kPi / 2, {1, 1, 0})));
  EXPECT_FALSE(cartan_plane_invariant(su_bs(kPi / 3, {0, 1, 0})));
  EXPECT_FALSE(cartan_plane_invariant(su_bs(0.7, {0.3, 0.4, 0.5})));
}

TEST(AlgebraTest, LevelCheck) {
  EXPECT_TRUE(algebra_level_check(su_bs(kPi / 2, {0, 1, 0})).trivial);
  EXPECT_GT(algebra_level_check(su_bs(kPi / 2, {1, 0, 0})).dim, 1);
  EXPECT_GT(algebra_level_check(su_bs(kPi / 2, {0, 0, 1})).dim, 1);
  EXPECT_TRUE(algebra_level_check(su_bs(0.7, {0.3, 0.4, 0.5})).trivial);
  const auto gens = algebra_generators(su_bs(0.7, {0.3, 0.4, 0.5}));
  ASSERT_EQ(gens.size(), 6u);
  for (const auto& x : gens) {
    EXPECT_LT((x + x.adjoint()).norm(), 1e-14);
    EXPECT_LT(std::abs(x.trace()), 1e-14);
  }
}

TEST(TraceFormulaTest, AgreeWithProducts) {
  testing::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Vector3d k = testing::random_unit(rng);
    const double phi = testing::uniform(rng, 0.0, kPi);
    const double kz2 = k.z() * k.z();
    const auto u = [&](double p) { return Eigen::Matrix2cd(su2_matrix(p, k)); };
    const Eigen::MatrixXcd b12 = embed(u(phi), 0, 1, 3), b23 = embed(u(phi), 1, 2, 3);
    EXPECT_NEAR(trace3({b12, b23}).real(), trace_b12_b23(phi, kz2), 1e-12);
    EXPECT_NEAR(trace3({embed(u(2 * phi), 0, 1, 3), embed(u(2 * phi), 1, 2, 3)}).real(),
                trace_doubled(phi, kz2), 1e-12);
    const Complex c4 = trace3({b23, b23, b12, b12, b23, b12});
    EXPECT_NEAR(c4.real(), trace_chain4(phi, kz2), 1e-12);
    EXPECT_NEAR(c4.imag(), 0.0, 1e-12);
  }
  // SO(3) γ: O(φ,x)O(φ,z) has trace 1 + 2 cos γ.
  for (double phi : {0.3, kPi / 3, 1.9, 2 * kPi / 3}) {
    const Eigen::Matrix3d p = so3_matrix(phi, Eigen::Vector3d::UnitX()) *
                              so3_matrix(phi, Eigen::Vector3d::UnitZ());
    EXPECT_NEAR((p.trace() - 1) / 2, so3_gamma_cos(phi), 1e-13);
  }
}

TEST(TraceFormulaTest, QuarterTurnSpecialWord) {
  // At φ = π/2, k_y² = 1/2 the word B12² B13 B23 B13² has trace k_z².
  const Eigen::Vector3d k(std::sqrt(0.25), std::sqrt(0.5), std::sqrt(0.25));
  const Eigen::Matrix2cd u = su2_matrix(kPi / 2, k);
  const Eigen::MatrixXcd b12 = embed(u, 0, 1, 3), b13 = embed(u, 0, 2, 3),
                         b23 = embed(u, 1, 2, 3);
  EXPECT_NEAR(trace3({b12, b12, b13, b23, b13, b13}).real(), 0.25, 1e-12);
}

TEST(OrthogonalTest, SpecialAngles) {
  const UniversalityVerdict half = orthogonal_bs_universal(kPi);
  EXPECT_EQ(half.status, VerdictStatus::kCommutantObstruction);
  const UniversalityVerdict quarter = orthogonal_bs_universal(kPi / 2);
  EXPECT_EQ(quarter.status, VerdictStatus::kFinite);
  EXPECT_EQ(quarter.order, 24);
  for (double phi : {kPi / 3, 2 * kPi / 3, 0.4, 5.0}) {
    const UniversalityVerdict v = orthogonal_bs_universal(phi);
    EXPECT_EQ(v.status, VerdictStatus::kUniversal) << phi;
    const auto gates = embed_gate_set(make_orthogonal_beamsplitter(phi), 3);
    EXPECT_TRUE(verify_universal(gates, v));
  }
}

TEST(UnitaryTest, RandomBeamsplittersAreUniversal) {
  testing::Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const Beamsplitter bs = make_beamsplitter(Eigen::Matrix2cd(testing::random_su(2, rng)),
                                              Group::kSU);
    const UniversalityVerdict v = unitary_bs_universal(bs);
    EXPECT_EQ(v.status, VerdictStatus::kUniversal);
    EXPECT_LE(v.termination_l, 6);
    EXPECT_TRUE(verify_universal(embed_gate_set(bs, 3), v));
  }
}

TEST(UnitaryTest, QuarterTurnChainBranches) {
  // Quarter turns away from every family need the longer chain words.
  for (const Eigen::Vector3d& k :
       {Eigen::Vector3d(0.5, std::sqrt(0.5), 0.5), Eigen::Vector3d(0.2, 0.3, 0.9),
        Eigen::Vector3d(0.6, 0.0, 0.8)}) {
    const Beamsplitter bs = su_bs(kPi / 2, k);
    const UniversalityVerdict v = unitary_bs_universal(bs);
    EXPECT_EQ(v.status, VerdictStatus::kUniversal);
    EXPECT_TRUE(verify_universal(embed_gate_set(bs, 3), v));
  }
}

TEST(UnitaryTest, PermutationCovariance) {
  // Relabelling modes conjugates the gate set by a permutation matrix, which
  // leaves the commutant dimension unchanged.
  testing::Rng rng(3);
  Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(3, 3);
  perm(0, 2) = perm(1, 0) = perm(2, 1) = 1.0;
  for (int t = 0; t < 10; ++t) {
    const Beamsplitter bs =
        su_bs(testing::uniform(rng, 0.1, 3.0), testing::random_unit(rng));
    std::vector<GateMatrix> a = embed_gate_set(bs, 3), b;
    for (const auto& g : a)
      b.push_back(validate_gate(perm * g.entries() * perm.adjoint(), Group::kSU));
    EXPECT_EQ(check_necessary_condition(a).dim, check_necessary_condition(b).dim);
  }
}

TEST(UnitaryTest, LargerEmbeddings) {
  const Beamsplitter bs = su_bs(0.9, {0.3, 0.4, 0.5}, 4);
  const UniversalityVerdict v = beamsplitter_universal(bs);
  EXPECT_EQ(v.status, VerdictStatus::kUniversal);
  EXPECT_EQ(v.group_label, "SU(4)");
  EXPECT_EQ(orthogonal_bs_universal(kPi / 3, 5).group_label, "SO(5)");
  bool reduced = false;
  for (const auto& e : v.trace) reduced |= e.message.find("three modes") != std::string::npos;
  EXPECT_TRUE(reduced);
  BeamsplitterOptions full;
  full.full_engine = true;
  EXPECT_EQ(beamsplitter_universal(bs, full).status, VerdictStatus::kUniversal);
}

}  // namespace
}  // namespace univgate
