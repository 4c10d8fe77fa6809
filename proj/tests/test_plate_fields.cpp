#include <gtest/gtest.h>

#include <random>

#include "cosserat_plate/plate_constitutive.hpp"
#include "cosserat_plate/plate_fields.hpp"

using namespace cosserat_plate;

namespace {

const MaterialParams kUnit{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};

PlateKinematics random_kinematics(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Vector9 v;
  for (int i = 0; i < 9; ++i) v[i] = u(rng);
  return PlateKinematics::from_vector(v);
}

// 1/2 (h/2) int (rho |u_dot|^2 + J |phi_dot|^2) dzeta with
// u_a = U_a - (h/2) zeta Psi_a, u_3 = W, phi_a = Theta_a^0 (1 - zeta^2),
// phi_3 = Theta_3^0 + zeta (1 - zeta^2/3) Theta_3, inverted through the weights.
double thickness_kinetic(const PlateKinematics& v, const MaterialParams& p, double h) {
  const double th1 = v.Omega1_0 / kK1Star, th2 = v.Omega2_0 / kK1Star;
  const double th3 = v.Omega3 * h / kK2Star, th30 = v.Omega3_0;
  const auto& g = gauss_legendre_8();
  double s = 0.0;
  for (int q = 0; q < 8; ++q) {
    const double z = g.nodes[q];
    const double u1 = v.U1 - 0.5 * h * z * v.Psi1, u2 = v.U2 - 0.5 * h * z * v.Psi2;
    const double b = 1.0 - z * z, c = z * (1.0 - z * z / 3.0);
    const double f1 = th1 * b, f2 = th2 * b, f3 = th30 + c * th3;
    s += g.weights[q] * (p.rho * (u1 * u1 + u2 * u2 + v.W * v.W) +
                         p.J[0] * f1 * f1 + p.J[1] * f2 * f2 + p.J[2] * f3 * f3);
  }
  return 0.5 * 0.5 * h * s;
}

}  // namespace

TEST(PlateKinematics, VectorRoundTripAndNames) {
  std::mt19937_64 rng(1);
  const auto k = random_kinematics(rng);
  EXPECT_EQ(PlateKinematics::from_vector(k.to_vector()).to_vector(), k.to_vector());
  EXPECT_EQ(PlateKinematics::field_name(2), "W");
  EXPECT_EQ(PlateKinematics::field_name(8), "Omega3_0");
}

TEST(PlateStrain, VectorRoundTrip) {
  Vector20 v;
  for (int i = 0; i < 20; ++i) v[i] = i + 0.5;
  EXPECT_EQ(PlateStrain::from_vector(v).to_vector(), v);
  EXPECT_EQ(PlateStress::from_vector(v).to_vector(), v);
}

TEST(LoadValues, FromFaces) {
  const auto l = LoadValues::from_faces(3.0, 1.0, 0.5, -0.5);
  EXPECT_DOUBLE_EQ(l.p, 2.0);
  EXPECT_DOUBLE_EQ(l.sigma0, 2.0);
  EXPECT_DOUBLE_EQ(l.v, 0.5);
  EXPECT_DOUBLE_EQ(l.t, 0.0);
}

TEST(InertiaConstants, UnitValues) {
  const auto in = inertia_constants(kUnit, 1.0);
  EXPECT_DOUBLE_EQ(in.I_o, 1.0 / 12.0);
  EXPECT_DOUBLE_EQ(in.rho_o, 1.0);
  EXPECT_DOUBLE_EQ(in.I_o1, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(in.I_o2, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(in.J3_s, 25.0 / 32.0);
  EXPECT_DOUBLE_EQ(in.I_o3, 1.0);
}

TEST(InertiaConstants, ThicknessScaling) {
  const auto a = inertia_constants(kUnit, 0.3), b = inertia_constants(kUnit, 0.6);
  EXPECT_NEAR(b.I_o, 8.0 * a.I_o, 1e-15);
  EXPECT_NEAR(b.rho_o, 2.0 * a.rho_o, 1e-15);
}

TEST(InertiaConstants, ZeroDensity) {
  MaterialParams p = kUnit;
  p.rho = 0.0;
  const auto in = inertia_constants(p, 1.0);
  EXPECT_EQ(in.I_o, 0.0);
  EXPECT_EQ(in.rho_o, 0.0);
  EXPECT_DOUBLE_EQ(in.I_o1, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(in.I_o3, 1.0);
}

TEST(InertiaConstants, RejectsNonPositiveThickness) {
  EXPECT_THROW(inertia_constants(kUnit, 0.0), DomainError);
}

TEST(WeightedMicrorotation, SpecValues) {
  const double h = 0.4;
  EXPECT_DOUBLE_EQ(weighted_from_microrotation(1, 0, 0, 0, h).Omega1_0, 0.8);
  EXPECT_DOUBLE_EQ(weighted_from_microrotation(0, 0, 0, h, h).Omega3, 1.6);
  const auto z = weighted_from_microrotation(0, 0, 0, 0, h);
  EXPECT_EQ(z.Omega1_0 + z.Omega2_0 + z.Omega3 + z.Omega3_0, 0.0);
}

TEST(WeightedMicrorotation, Homogeneous) {
  const auto a = weighted_from_microrotation(0.3, -0.2, 0.7, 0.1, 0.5);
  const auto b = weighted_from_microrotation(0.9, -0.6, 2.1, 0.3, 0.5);
  EXPECT_NEAR(b.Omega1_0, 3 * a.Omega1_0, 1e-15);
  EXPECT_NEAR(b.Omega2_0, 3 * a.Omega2_0, 1e-15);
  EXPECT_NEAR(b.Omega3, 3 * a.Omega3, 1e-15);
  EXPECT_NEAR(b.Omega3_0, 3 * a.Omega3_0, 1e-15);
}

TEST(KineticDensity, ZeroAndSingleTerm) {
  const auto in = inertia_constants(kUnit, 1.0);
  EXPECT_EQ(kinetic_energy_density(PlateKinematics{}, in), 0.0);
  PlateKinematics v;
  v.W = 1.0;
  EXPECT_DOUBLE_EQ(kinetic_energy_density(v, in), 0.5);
}

TEST(KineticDensity, MatchesThicknessQuadratureWithProfileK4) {
  std::mt19937_64 rng(4);
  const MaterialParams p{1.2, 0.8, 0.3, 0.1, 0.2, 0.3, 2.3, {0.4, 0.7, 1.1}};
  for (int i = 0; i < 50; ++i) {
    const double h = 0.05 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto v = random_kinematics(rng);
    const double ref = thickness_kinetic(v, p, h);
    EXPECT_NEAR(kinetic_energy_density(v, inertia_constants(p, h, kK4StarProfile)), ref,
                1e-13 * std::abs(ref));
  }
}

TEST(KineticDensity, DefaultK4DiffersOnlyInTheOmega3Term) {
  const MaterialParams p{1.2, 0.8, 0.3, 0.1, 0.2, 0.3, 2.3, {0.4, 0.7, 1.1}};
  std::mt19937_64 rng(6);
  auto v = random_kinematics(rng);
  v.Omega3 = 0.0;
  const double h = 0.2;
  EXPECT_NEAR(kinetic_energy_density(v, inertia_constants(p, h)), thickness_kinetic(v, p, h),
              1e-14);
}

TEST(KineticDensity, PositiveSemidefinite) {
  std::mt19937_64 rng(9);
  const auto in = inertia_constants(kUnit, 0.3);
  for (int i = 0; i < 100; ++i) EXPECT_GT(kinetic_energy_density(random_kinematics(rng), in), 0.0);
}
