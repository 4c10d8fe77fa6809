#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cosserat_plate/material.hpp"
#include "cosserat_plate/verify.hpp"

using namespace cosserat_plate;

namespace {

MaterialParams ones() { return {1, 1, 1, 1, 1, 1, 1, {1, 1, 1}}; }

}  // namespace

TEST(ValidateParameters, AllOnesIsAdmissible) {
  EXPECT_TRUE(validate_parameters(ones()).admissible());
}

TEST(ValidateParameters, ZeroAlphaNamesCondition) {
  MaterialParams p = ones();
  p.alpha = 0.0;
  const auto rep = validate_parameters(p);
  EXPECT_FALSE(rep.admissible());
  EXPECT_TRUE(rep.contains("α>0"));
}

TEST(ValidateParameters, NegativeMuListsBothConditions) {
  MaterialParams p = ones();
  p.mu = -1.0;
  const auto rep = validate_parameters(p);
  EXPECT_TRUE(rep.contains("μ>0"));
  EXPECT_TRUE(rep.contains("μ+α>0"));
}

TEST(ValidateParameters, NanFails) {
  MaterialParams p = ones();
  p.gamma = std::nan("");
  EXPECT_FALSE(validate_parameters(p).admissible());
}

TEST(ValidateParameters, RequireAdmissibleThrows) {
  MaterialParams p = ones();
  p.epsilon = -1.0;
  EXPECT_THROW(require_admissible(p), DomainError);
  EXPECT_NO_THROW(require_admissible(ones()));
}

TEST(TechnicalConstants, UnitLameValues) {
  MaterialParams p = ones();
  const auto tc = technical_constants(p, 1.0);
  EXPECT_NEAR(tc.nu, 0.25, 1e-15);
  EXPECT_NEAR(tc.E, 2.5, 1e-15);
  EXPECT_NEAR(tc.G, 1.0, 1e-15);
  EXPECT_NEAR(tc.D, 2.5 / (12.0 * (1.0 - 0.0625)), 1e-15);
}

TEST(TechnicalConstants, CouplingNumberAtAlphaEqualMu) {
  const auto tc = technical_constants(ones(), 1.0);
  EXPECT_NEAR(tc.N, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(tc.N, 0.70711, 1e-5);
}

TEST(TechnicalConstants, PolarRatioWithZeroBeta) {
  MaterialParams p = ones();
  p.beta = 0.0;
  EXPECT_DOUBLE_EQ(technical_constants(p, 1.0).Psi_polar, 1.0);
}

TEST(TechnicalConstants, LengthsAndShearFactors) {
  MaterialParams p = ones();
  p.mu = 2.0;
  p.gamma = 0.5;
  p.epsilon = 1.5;
  const auto tc = technical_constants(p, 0.2);
  EXPECT_NEAR(tc.l_t, std::sqrt(0.25), 1e-15);
  EXPECT_NEAR(tc.l_b, 0.5 * std::sqrt(1.0), 1e-15);
  EXPECT_DOUBLE_EQ(tc.kappa1_sq, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(tc.kappa2_sq, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(tc.h, 0.2);
  const auto mindlin = technical_constants(p, 0.2, ShearCorrection::kMindlin);
  EXPECT_NEAR(mindlin.kappa1_sq, M_PI * M_PI / 12.0, 1e-15);
}

TEST(TechnicalConstants, RejectsBadInput) {
  EXPECT_THROW(technical_constants(ones(), 0.0), DomainError);
  MaterialParams p = ones();
  p.alpha = 0.0;
  EXPECT_THROW(technical_constants(p, 1.0), DomainError);
}

TEST(ReciprocalConstants, SpecValues) {
  MaterialParams p = ones();
  EXPECT_DOUBLE_EQ(reciprocal_constants(p).mu_p, 0.25);
  p.lambda = 0.0;
  EXPECT_DOUBLE_EQ(reciprocal_constants(p).lambda_p, 0.0);
}

TEST(ReciprocalConstants, Formulas) {
  const MaterialParams p{1.3, 0.7, 0.4, 0.2, 0.9, 1.1, 1, {1, 1, 1}};
  const auto r = reciprocal_constants(p);
  EXPECT_NEAR(r.alpha_p, 1.0 / 1.6, 1e-15);
  EXPECT_NEAR(r.gamma_p, 1.0 / 3.6, 1e-15);
  EXPECT_NEAR(r.epsilon_p, 1.0 / 4.4, 1e-15);
  EXPECT_NEAR(r.lambda_p, -1.3 / (6 * 0.7 * (1.3 + 2 * 0.7 / 3)), 1e-15);
  EXPECT_NEAR(r.beta_p, -0.2 / (6 * 0.9 * (0.2 + 2 * 0.9 / 3)), 1e-15);
}

TEST(TechnicalConstants, RandomAdmissibleAreFinite) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_admissible_material(rng);
    const auto tc = technical_constants(p, 0.1);
    for (double v : {tc.E, tc.nu, tc.G, tc.D, tc.l_t, tc.l_b, tc.N, tc.Psi_polar})
      ASSERT_TRUE(std::isfinite(v));
    EXPECT_GE(tc.N, 0.0);
    EXPECT_LT(tc.N, 1.0);
    EXPECT_GT(tc.l_b, 0.0);
  }
}

TEST(MaterialFromTechnical, InvertsTechnicalConstants) {
  const auto p = material_from_technical(1.5, 2.0, 0.3, 0.05, 0.04, 0.8, 1.2, {1e-3, 2e-3, 3e-3});
  ASSERT_TRUE(validate_parameters(p).admissible());
  const auto tc = technical_constants(p, 0.1);
  EXPECT_NEAR(tc.N, 0.3, 1e-14);
  EXPECT_NEAR(tc.l_t, 0.05, 1e-14);
  EXPECT_NEAR(tc.l_b, 0.04, 1e-14);
  EXPECT_NEAR(tc.Psi_polar, 0.8, 1e-14);
}
