#include "cosserat_plate/cosserat3d.hpp"

namespace cosserat_plate {

namespace {

// a*X + b*X^T + c*tr(X)*1
Eigen::Matrix3d isotropic_map(const Eigen::Matrix3d& x, double a, double b, double c) {
  return a * x + b * x.transpose() + c * x.trace() * Eigen::Matrix3d::Identity();
}

// (a/2) X_ij X_ij + (b/2) X_ij X_ji + (c/2) X_kk X_nn
double isotropic_quadratic(const Eigen::Matrix3d& x, double a, double b, double c) {
  const double tr = x.trace();
  return 0.5 * a * x.cwiseProduct(x).sum() + 0.5 * b * x.cwiseProduct(x.transpose()).sum() +
         0.5 * c * tr * tr;
}

}  // namespace

Stress3D stress_from_strain_3d(const Strain3D& s, const MaterialParams& p) {
  Stress3D out;
  out.sigma = isotropic_map(s.gamma, p.mu + p.alpha, p.mu - p.alpha, p.lambda);
  out.mu_c = isotropic_map(s.chi, p.gamma + p.epsilon, p.gamma - p.epsilon, p.beta);
  return out;
}

Strain3D strain_from_stress_3d(const Stress3D& t, const ReciprocalParams& r) {
  Strain3D out;
  out.gamma = isotropic_map(t.sigma, r.mu_p + r.alpha_p, r.mu_p - r.alpha_p, r.lambda_p);
  out.chi = isotropic_map(t.mu_c, r.gamma_p + r.epsilon_p, r.gamma_p - r.epsilon_p, r.beta_p);
  return out;
}

double strain_energy_3d(const Strain3D& s, const MaterialParams& p) {
  return isotropic_quadratic(s.gamma, p.mu + p.alpha, p.mu - p.alpha, p.lambda) +
         isotropic_quadratic(s.chi, p.gamma + p.epsilon, p.gamma - p.epsilon, p.beta);
}

double stress_energy_3d(const Stress3D& t, const ReciprocalParams& r) {
  return isotropic_quadratic(t.sigma, r.mu_p + r.alpha_p, r.mu_p - r.alpha_p, r.lambda_p) +
         isotropic_quadratic(t.mu_c, r.gamma_p + r.epsilon_p, r.gamma_p - r.epsilon_p, r.beta_p);
}

EnergyDensities3D energy_densities_3d(const Strain3D& s, const MaterialParams& p) {
  const Stress3D t = stress_from_strain_3d(s, p);
  EnergyDensities3D e;
  e.W = strain_energy_3d(s, p);
  e.Phi = stress_energy_3d(t, reciprocal_constants(p));
  e.internal_work = t.sigma.cwiseProduct(s.gamma).sum() + t.mu_c.cwiseProduct(s.chi).sum();
  return e;
}

}  // namespace cosserat_plate
