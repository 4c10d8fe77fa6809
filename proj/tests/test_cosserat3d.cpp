#include <gtest/gtest.h>

#include <random>

#include "cosserat_plate/cosserat3d.hpp"
#include "cosserat_plate/verify.hpp"

using namespace cosserat_plate;

namespace {

Eigen::Matrix3d random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::Matrix3d m;
  for (int i = 0; i < 9; ++i) m.data()[i] = u(rng);
  return m;
}

// Independent 9x9 assembly of t = a e + b e^T + c tr(e) 1 acting on the
// row-major flattening.
Eigen::Matrix<double, 9, 9> isotropic_matrix(double a, double b, double c) {
  Eigen::Matrix<double, 9, 9> K = Eigen::Matrix<double, 9, 9>::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K(3 * i + j, 3 * i + j) += a;
      K(3 * i + j, 3 * j + i) += b;
      if (i == j)
        for (int k = 0; k < 3; ++k) K(3 * i + i, 3 * k + k) += c;
    }
  return K;
}

Eigen::Matrix<double, 9, 1> flat(const Eigen::Matrix3d& m) {
  Eigen::Matrix<double, 9, 1> v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[3 * i + j] = m(i, j);
  return v;
}

}  // namespace

TEST(StressFromStrain3D, ZeroStrainZeroStress) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  const Stress3D t = stress_from_strain_3d(Strain3D{}, p);
  EXPECT_EQ(t.sigma.norm(), 0.0);
  EXPECT_EQ(t.mu_c.norm(), 0.0);
}

TEST(StressFromStrain3D, IdentityStrain) {
  const MaterialParams p{1, 1, 0.37, 1, 1, 1, 1, {1, 1, 1}};
  Strain3D s;
  s.gamma = Eigen::Matrix3d::Identity();
  const Stress3D t = stress_from_strain_3d(s, p);
  EXPECT_NEAR((t.sigma - 5.0 * Eigen::Matrix3d::Identity()).norm(), 0.0, 1e-14);
}

TEST(StressFromStrain3D, MatchesMatrixAssembly) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  std::mt19937_64 rng(3);
  Strain3D s{random_matrix(rng), random_matrix(rng)};
  const Stress3D t = stress_from_strain_3d(s, p);
  const auto Ks = isotropic_matrix(p.mu + p.alpha, p.mu - p.alpha, p.lambda);
  const auto Kc = isotropic_matrix(p.gamma + p.epsilon, p.gamma - p.epsilon, p.beta);
  // Entry (j, i) stores sigma_ji; the law is symmetric in the layout convention.
  EXPECT_NEAR((flat(t.sigma) - Ks * flat(s.gamma)).norm(), 0.0, 1e-14);
  EXPECT_NEAR((flat(t.mu_c) - Kc * flat(s.chi)).norm(), 0.0, 1e-14);
}

TEST(StrainFromStress3D, ZeroAndIdentity) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  const auto r = reciprocal_constants(p);
  EXPECT_EQ(strain_from_stress_3d(Stress3D{}, r).gamma.norm(), 0.0);
  Stress3D t;
  t.sigma = Eigen::Matrix3d::Identity();
  EXPECT_NEAR((strain_from_stress_3d(t, r).gamma - 0.2 * Eigen::Matrix3d::Identity()).norm(), 0.0,
              1e-15);
}

TEST(StrainFromStress3D, RoundTripRandom) {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_admissible_material(rng);
    Strain3D s{random_matrix(rng), random_matrix(rng)};
    const Strain3D b = strain_from_stress_3d(stress_from_strain_3d(s, p), reciprocal_constants(p));
    const double scale = std::max(s.gamma.cwiseAbs().maxCoeff(), s.chi.cwiseAbs().maxCoeff());
    worst = std::max({worst, (b.gamma - s.gamma).cwiseAbs().maxCoeff() / scale,
                      (b.chi - s.chi).cwiseAbs().maxCoeff() / scale});
    // stress -> strain -> stress
    Stress3D t{random_matrix(rng), random_matrix(rng)};
    const Stress3D tb = stress_from_strain_3d(strain_from_stress_3d(t, reciprocal_constants(p)), p);
    const double ts = std::max(t.sigma.cwiseAbs().maxCoeff(), t.mu_c.cwiseAbs().maxCoeff());
    worst = std::max({worst, (tb.sigma - t.sigma).cwiseAbs().maxCoeff() / ts,
                      (tb.mu_c - t.mu_c).cwiseAbs().maxCoeff() / ts});
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(EnergyDensities3D, ZeroStrain) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  const auto e = energy_densities_3d(Strain3D{}, p);
  EXPECT_EQ(e.W, 0.0);
  EXPECT_EQ(e.Phi, 0.0);
  EXPECT_EQ(e.internal_work, 0.0);
}

TEST(EnergyDensities3D, OnShellIdentities) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_admissible_material(rng);
    Strain3D s{random_matrix(rng), random_matrix(rng)};
    const auto e = energy_densities_3d(s, p);
    ASSERT_GT(e.W, 0.0);
    EXPECT_NEAR(e.Phi, e.W, 1e-12 * e.W);
    EXPECT_NEAR(e.internal_work, 2.0 * e.W, 1e-12 * e.W);
  }
}
