#include <gtest/gtest.h>

#include <random>

#include "cosserat_plate/plate_constitutive.hpp"
#include "cosserat_plate/polynomial.hpp"
#include "cosserat_plate/verify.hpp"

using namespace cosserat_plate;

namespace {

const MaterialParams kGeneric{1.3, 1.0, 0.2, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};

Vector20 random20(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Vector20 v;
  for (int i = 0; i < 20; ++i) v[i] = u(rng);
  return v;
}

PlateKinematics only(int field, double value) {
  Vector9 v = Vector9::Zero();
  v[field] = value;
  return PlateKinematics::from_vector(v);
}

// Plate stress energy by thickness integration of the 3D stress energy of the
// reconstructed profiles (polynomial integrand of degree 6, Gauss-8 exact).
double integrated_energy(const PlateStress& S, const MaterialParams& p, double h) {
  const auto r = reciprocal_constants(p);
  const auto& g = gauss_legendre_8();
  double s = 0.0;
  for (int q = 0; q < 8; ++q)
    s += g.weights[q] * stress_energy_3d(thickness_profiles(S, LoadValues{}, h, g.nodes[q]), r);
  return 0.5 * h * s;
}

}  // namespace

TEST(StrainFromKinematics, ConstantWGivesZeroStrain) {
  const auto e = strain_from_kinematics(only(2, 3.0), KinematicsGradient{});
  EXPECT_EQ(e.to_vector().norm(), 0.0);
}

TEST(StrainFromKinematics, ConstantPsi1) {
  const auto e = strain_from_kinematics(only(0, 1.0), KinematicsGradient{});
  EXPECT_EQ(e.omega[0], 1.0);
  EXPECT_EQ(e.omega_s[0], 0.0);
  EXPECT_EQ(e.e.norm(), 0.0);
}

TEST(StrainFromKinematics, ConstantOmega3SignsFollowBalanceLaws) {
  const double c = 0.7;
  const auto e = strain_from_kinematics(only(3, c), KinematicsGradient{});
  EXPECT_DOUBLE_EQ(e.e(0, 1), -c);
  EXPECT_DOUBLE_EQ(e.e(1, 0), c);
  EXPECT_EQ(e.tau3.norm(), 0.0);
}

TEST(StrainFromKinematics, GradientTerms) {
  KinematicsGradient g;
  g.d1.Psi2 = 2.0;  // e12 = Psi2,1
  g.d2.W = 3.0;     // omega*_2 = W,2
  g.d1.U1 = 4.0;    // upsilon11 = U1,1
  g.d2.Omega3_0 = 5.0;
  const auto e = strain_from_kinematics(PlateKinematics{}, g);
  EXPECT_EQ(e.e(0, 1), 2.0);
  EXPECT_EQ(e.omega_s[1], 3.0);
  EXPECT_EQ(e.upsilon(0, 0), 4.0);
  EXPECT_EQ(e.tau3_0[1], 5.0);
}

TEST(StressFromKinematics, PressureMomentTerm) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  const auto tc = technical_constants(p, 1.0);
  ASSERT_DOUBLE_EQ(tc.nu, 0.25);
  const auto s = stress_from_kinematics(PlateKinematics{}, KinematicsGradient{}, tc,
                                        LoadValues{1, 0, 0, 0});
  EXPECT_NEAR(s.M(0, 0), 1.0 / 30.0, 1e-15);
  EXPECT_NEAR(s.M(1, 1), 1.0 / 30.0, 1e-15);
}

TEST(StressFromKinematics, ZeroInZeroOut) {
  const auto tc = technical_constants(kGeneric, 0.1);
  EXPECT_EQ(stress_from_kinematics(PlateKinematics{}, KinematicsGradient{}, tc, LoadValues{})
                .to_vector()
                .norm(),
            0.0);
}

TEST(StrainFromStress, ZeroInZeroOut) {
  EXPECT_EQ(strain_from_stress(PlateStress{}, kGeneric, 0.1, LoadValues{}, 0.0).to_vector().norm(),
            0.0);
}

TEST(StrainFromStress, TwistingShear) {
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  PlateStress s;
  s.S_s[0] = 1.0;
  EXPECT_NEAR(strain_from_stress(s, p, 1.0, LoadValues{}, 0.0).tau3[0], 6.0, 1e-14);
}

TEST(StrainFromStress, InvertsStiffnessOnPolynomialKinematics) {
  std::mt19937_64 rng(2);
  const double h = 0.1;
  const auto tc = technical_constants(kGeneric, h);
  std::array<Poly2, 9> P;
  for (auto& q : P) q = Poly2::random(3, rng);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0.0;
  for (int s = 0; s < 100; ++s) {
    const double x = u(rng), y = u(rng);
    Vector9 v, d1, d2;
    for (int f = 0; f < 9; ++f) {
      v[f] = P[f](x, y);
      d1[f] = P[f].derivative(0)(x, y);
      d2[f] = P[f].derivative(1)(x, y);
    }
    const KinematicsGradient g{PlateKinematics::from_vector(d1), PlateKinematics::from_vector(d2)};
    const auto u0 = PlateKinematics::from_vector(v);
    const auto e = strain_from_kinematics(u0, g);
    const auto S = stress_from_kinematics(u0, g, tc, LoadValues{});
    const auto back = strain_from_stress(S, kGeneric, h, LoadValues{}, 0.0);
    worst = std::max(worst, (back.to_vector() - e.to_vector()).norm() / e.to_vector().norm());
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(StrainFromStress, InvertsStiffnessWithLoads) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 100; ++s) {
    const auto p = random_admissible_material(rng);
    const double h = 0.05 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto tc = technical_constants(p, h);
    const Vector20 ev = random20(rng);
    const Vector20 lv = random20(rng);
    const LoadValues l{lv[0], lv[1], lv[2], lv[3]};
    const auto S = stress_from_strain(PlateStrain::from_vector(ev), tc, l);
    const auto back = strain_from_stress(S, p, h, l, -l.p);
    EXPECT_LE((back.to_vector() - ev).norm() / ev.norm(), 1e-10);
  }
}

TEST(PlateEnergy, ZeroAndMembraneGroup) {
  EXPECT_EQ(plate_energy_density(PlateStress{}, kGeneric, 0.1, LoadValues{}, 0.0), 0.0);
  const MaterialParams p{1, 1, 1, 1, 1, 1, 1, {1, 1, 1}};
  PlateStress s;
  s.N(0, 0) = 1.0;
  EXPECT_NEAR(plate_energy_density(s, p, 1.0, LoadValues{}, 0.0), 0.2, 1e-15);
}

TEST(PlateEnergy, HalfWorkAtZeroLoads) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 100; ++s) {
    const auto p = random_admissible_material(rng);
    const auto tc = technical_constants(p, 0.2);
    const auto E = PlateStrain::from_vector(random20(rng));
    const auto S = stress_from_strain(E, tc, LoadValues{});
    const double half = 0.5 * internal_work_density(S, E);
    EXPECT_NEAR(plate_energy_density(S, p, 0.2, LoadValues{}, 0.0), half, 1e-10 * half);
  }
}

TEST(PlateEnergy, GradientIsCompliance) {
  std::mt19937_64 rng(5);
  const double h = 0.1;
  const Vector20 sv = random20(rng);
  const LoadValues l{0.3, -0.2, 0.1, 0.4};
  const Vector20 e = strain_from_stress(PlateStress::from_vector(sv), kGeneric, h, l, -l.p).to_vector();
  for (int i = 0; i < 20; ++i) {
    const double d = 1e-4;
    Vector20 a = sv, b = sv;
    a[i] += d;
    b[i] -= d;
    const double g = (plate_energy_density(PlateStress::from_vector(a), kGeneric, h, l, -l.p) -
                      plate_energy_density(PlateStress::from_vector(b), kGeneric, h, l, -l.p)) /
                     (2 * d);
    EXPECT_NEAR(g, e[i], 1e-6 * std::max(1.0, std::abs(e[i]))) << PlateStress::component_name(i);
  }
}

TEST(PlateEnergy, EqualsThicknessIntegralOf3DStressEnergy) {
  std::mt19937_64 rng(6);
  for (int s = 0; s < 50; ++s) {
    const auto p = random_admissible_material(rng);
    const double h = 0.05 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng);
    const auto S = PlateStress::from_vector(random20(rng));
    const double phi = plate_energy_density(S, p, h, LoadValues{}, 0.0);
    EXPECT_NEAR(phi, integrated_energy(S, p, h), 1e-11 * phi);
    EXPECT_GT(phi, 0.0);
  }
}

TEST(InternalWork, Products) {
  EXPECT_EQ(internal_work_density(PlateStress{}, PlateStrain::from_vector(Vector20::Ones())), 0.0);
  PlateStress s;
  s.M(0, 0) = 2.0;
  PlateStrain e;
  e.e(0, 0) = 3.0;
  EXPECT_DOUBLE_EQ(internal_work_density(s, e), 6.0);
}

TEST(ThicknessProfiles, BendingStressAtFace) {
  PlateStress s;
  s.M(0, 0) = 1.0;
  EXPECT_NEAR(thickness_profiles(s, LoadValues{}, 1.0, 1.0).sigma(0, 0), 6.0, 1e-14);
}

TEST(ThicknessProfiles, FaceConditions) {
  std::mt19937_64 rng(7);
  const auto S = PlateStress::from_vector(random20(rng));
  const double top = 0.7, bottom = -0.3, mtop = 0.2, mbottom = 0.9;
  const auto l = LoadValues::from_faces(top, bottom, mtop, mbottom);
  const auto up = thickness_profiles(S, l, 0.3, 1.0), down = thickness_profiles(S, l, 0.3, -1.0);
  EXPECT_NEAR(up.sigma(2, 2), top, 1e-15);
  EXPECT_NEAR(down.sigma(2, 2), bottom, 1e-15);
  EXPECT_NEAR(up.mu_c(2, 2), mtop, 1e-15);
  EXPECT_NEAR(down.mu_c(2, 2), mbottom, 1e-15);
  for (int b = 0; b < 2; ++b) {
    EXPECT_NEAR(up.sigma(2, b), 0.0, 1e-15);
    EXPECT_NEAR(down.sigma(2, b), 0.0, 1e-15);
    EXPECT_EQ(up.mu_c(2, b), 0.0);
  }
}

TEST(ThicknessProfiles, RejectsOutsideThickness) {
  EXPECT_THROW(thickness_profiles(PlateStress{}, LoadValues{}, 1.0, 1.01), DomainError);
}

TEST(ResultantsFromProfiles, RoundTrip) {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 100; ++s) {
    const auto S = PlateStress::from_vector(random20(rng));
    const Vector20 lv = random20(rng);
    const LoadValues l{lv[0], lv[1], lv[2], lv[3]};
    const auto back = resultants_from_profiles(
        [&](double z) { return thickness_profiles(S, l, 0.2, z); }, 0.2);
    EXPECT_LE((back.to_vector() - S.to_vector()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ResultantsFromProfiles, ZeroAndConstantMembrane) {
  EXPECT_EQ(resultants_from_profiles([](double) { return Stress3D{}; }, 0.5).to_vector().norm(),
            0.0);
  const double c = 3.0, h = 0.5;
  const auto r = resultants_from_profiles(
      [&](double) {
        Stress3D t;
        t.sigma(0, 0) = c;
        return t;
      },
      h);
  EXPECT_NEAR(r.N(0, 0), h * c, 1e-15);
  EXPECT_NEAR(r.M(0, 0), 0.0, 1e-15);
}

TEST(GaussLegendre8, IntegratesDegree15) {
  const auto& g = gauss_legendre_8();
  double s = 0.0, w = 0.0;
  for (int q = 0; q < 8; ++q) {
    s += g.weights[q] * std::pow(g.nodes[q], 14);
    w += g.weights[q];
  }
  EXPECT_NEAR(w, 2.0, 1e-14);
  EXPECT_NEAR(s, 2.0 / 15.0, 1e-14);
}
