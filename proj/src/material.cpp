#include "cosserat_plate/material.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cosserat_plate {

bool ValidationReport::contains(const std::string& condition) const {
  return std::find(violations.begin(), violations.end(), condition) != violations.end();
}

ValidationReport validate_parameters(const MaterialParams& p) {
  ValidationReport report;
  auto check = [&](bool ok, const char* name) {
    // written as !(x > 0) so NaN is reported
    if (!ok) report.violations.emplace_back(name);
  };
  check(p.mu > 0.0, "μ>0");
  check(3.0 * p.lambda + 2.0 * p.mu > 0.0, "3λ+2μ>0");
  check(p.gamma > 0.0, "γ>0");
  check(3.0 * p.beta + 2.0 * p.gamma > 0.0, "3β+2γ>0");
  check(p.alpha > 0.0, "α>0");
  check(p.mu + p.alpha > 0.0, "μ+α>0");
  check(p.epsilon > 0.0, "ε>0");
  check(p.gamma + p.epsilon > 0.0, "γ+ε>0");
  check(p.rho > 0.0, "ρ>0");
  check(p.J[0] > 0.0, "J₁>0");
  check(p.J[1] > 0.0, "J₂>0");
  check(p.J[2] > 0.0, "J₃>0");
  return report;
}

void require_admissible(const MaterialParams& p) {
  const ValidationReport report = validate_parameters(p);
  if (report.admissible()) return;
  std::string msg = "inadmissible material parameters:";
  for (const auto& v : report.violations) msg += " " + v;
  throw DomainError(msg);
}

TechnicalConstants technical_constants(const MaterialParams& p, double h, ShearCorrection shear) {
  require_admissible(p);
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");

  TechnicalConstants tc;
  tc.h = h;
  tc.E = p.mu * (3.0 * p.lambda + 2.0 * p.mu) / (p.lambda + p.mu);
  tc.nu = p.lambda / (2.0 * (p.lambda + p.mu));
  tc.G = tc.E / (2.0 * (1.0 + tc.nu));
  tc.D = tc.E * h * h * h / (12.0 * (1.0 - tc.nu * tc.nu));
  tc.l_t = std::sqrt(p.gamma / p.mu);
  tc.l_b = 0.5 * std::sqrt((p.gamma + p.epsilon) / p.mu);
  tc.N = std::sqrt(p.alpha / (p.mu + p.alpha));
  tc.Psi_polar = 2.0 * p.gamma / (p.beta + 2.0 * p.gamma);
  tc.kappa1_sq = shear == ShearCorrection::kMindlin ? std::numbers::pi * std::numbers::pi / 12.0
                                                    : 5.0 / 6.0;
  tc.kappa2_sq = 5.0 / 3.0;
  return tc;
}

ReciprocalParams reciprocal_constants(const MaterialParams& p) {
  require_admissible(p);
  ReciprocalParams r;
  r.mu_p = 1.0 / (4.0 * p.mu);
  r.alpha_p = 1.0 / (4.0 * p.alpha);
  r.gamma_p = 1.0 / (4.0 * p.gamma);
  r.epsilon_p = 1.0 / (4.0 * p.epsilon);
  r.lambda_p = -p.lambda / (6.0 * p.mu * (p.lambda + 2.0 * p.mu / 3.0));
  r.beta_p = -p.beta / (6.0 * p.gamma * (p.beta + 2.0 * p.gamma / 3.0));
  return r;
}

MaterialParams material_from_technical(double lambda, double mu, double N, double l_t,
                                       double l_b, double Psi, double rho,
                                       const std::array<double, 3>& J) {
  if (!(N >= 0.0 && N < 1.0)) throw DomainError("coupling number must lie in [0, 1)");
  if (!(Psi > 0.0)) throw DomainError("polar ratio must be positive");
  MaterialParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.alpha = mu * N * N / (1.0 - N * N);
  p.gamma = mu * l_t * l_t;
  p.epsilon = 4.0 * mu * l_b * l_b - p.gamma;
  p.beta = 2.0 * p.gamma * (1.0 / Psi - 1.0);
  p.rho = rho;
  p.J = J;
  return p;
}

}  // namespace cosserat_plate
