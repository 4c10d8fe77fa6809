#include "cosserat_plate/plate_fields.hpp"

#include <array>

namespace cosserat_plate {

namespace {

void put(Vector20& v, int& k, const Eigen::Matrix2d& m) {
  v[k++] = m(0, 0);
  v[k++] = m(0, 1);
  v[k++] = m(1, 0);
  v[k++] = m(1, 1);
}

void put(Vector20& v, int& k, const Eigen::Vector2d& x) {
  v[k++] = x[0];
  v[k++] = x[1];
}

void take(const Vector20& v, int& k, Eigen::Matrix2d& m) {
  m(0, 0) = v[k++];
  m(0, 1) = v[k++];
  m(1, 0) = v[k++];
  m(1, 1) = v[k++];
}

void take(const Vector20& v, int& k, Eigen::Vector2d& x) {
  x[0] = v[k++];
  x[1] = v[k++];
}

}  // namespace

Vector9 PlateKinematics::to_vector() const {
  Vector9 v;
  v << Psi1, Psi2, W, Omega3, Omega1_0, Omega2_0, U1, U2, Omega3_0;
  return v;
}

PlateKinematics PlateKinematics::from_vector(const Vector9& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

std::string_view PlateKinematics::field_name(int index) {
  static constexpr std::array<std::string_view, kNumKinematicFields> kNames = {
      "Psi1", "Psi2", "W", "Omega3", "Omega1_0", "Omega2_0", "U1", "U2", "Omega3_0"};
  return kNames.at(static_cast<std::size_t>(index));
}

Vector20 PlateStrain::to_vector() const {
  Vector20 v;
  int k = 0;
  put(v, k, e);
  put(v, k, omega);
  put(v, k, omega_s);
  put(v, k, tau0);
  put(v, k, tau3);
  put(v, k, upsilon);
  put(v, k, tau3_0);
  return v;
}

PlateStrain PlateStrain::from_vector(const Vector20& v) {
  PlateStrain s;
  int k = 0;
  take(v, k, s.e);
  take(v, k, s.omega);
  take(v, k, s.omega_s);
  take(v, k, s.tau0);
  take(v, k, s.tau3);
  take(v, k, s.upsilon);
  take(v, k, s.tau3_0);
  return s;
}

Vector20 PlateStress::to_vector() const {
  Vector20 v;
  int k = 0;
  put(v, k, M);
  put(v, k, Q);
  put(v, k, Q_s);
  put(v, k, R);
  put(v, k, S_s);
  put(v, k, N);
  put(v, k, M_s);
  return v;
}

PlateStress PlateStress::from_vector(const Vector20& v) {
  PlateStress s;
  int k = 0;
  take(v, k, s.M);
  take(v, k, s.Q);
  take(v, k, s.Q_s);
  take(v, k, s.R);
  take(v, k, s.S_s);
  take(v, k, s.N);
  take(v, k, s.M_s);
  return s;
}

std::string_view PlateStress::component_name(int index) {
  static constexpr std::array<std::string_view, kNumResultants> kNames = {
      "M11", "M12", "M21", "M22", "Q1",  "Q2",  "Q1_s", "Q2_s", "R11", "R12",
      "R21", "R22", "S1_s", "S2_s", "N11", "N12", "N21",  "N22",  "M1_s", "M2_s"};
  return kNames.at(static_cast<std::size_t>(index));
}

LoadValues LoadValues::from_faces(double sigma_top, double sigma_bottom, double mu_top,
                                  double mu_bottom) {
  LoadValues l;
  l.p = sigma_top - sigma_bottom;
  l.sigma0 = 0.5 * (sigma_top + sigma_bottom);
  l.v = 0.5 * (mu_top - mu_bottom);
  l.t = 0.5 * (mu_top + mu_bottom);
  return l;
}

Eigen::Matrix<double, 6, 1> InertiaSet::flexural_mass() const {
  Eigen::Matrix<double, 6, 1> m;
  m << I_o, I_o, rho_o, J3_s, I_o1, I_o2;
  return m;
}

Eigen::Vector3d InertiaSet::extensional_mass() const { return {rho_o, rho_o, I_o3}; }

InertiaSet inertia_constants(const MaterialParams& p, double h, double k4_star) {
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");
  InertiaSet in;
  in.I_o = p.rho * h * h * h / 12.0;
  in.rho_o = p.rho * h;
  in.I_o1 = kK3Star * p.J[0] * h;
  in.I_o2 = kK3Star * p.J[1] * h;
  in.J3_s = k4_star * p.J[2] * h * h * h;
  in.I_o3 = p.J[2] * h;
  return in;
}

WeightedMicrorotation weighted_from_microrotation(double theta1_0, double theta2_0,
                                                  double theta3_0, double theta3, double h) {
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");
  return {kK1Star * theta1_0, kK1Star * theta2_0, kK2Star / h * theta3, theta3_0};
}

double kinetic_density(const PlateKinematics& a, const PlateKinematics& u, const InertiaSet& in) {
  return in.I_o * (a.Psi1 * u.Psi1 + a.Psi2 * u.Psi2) + in.rho_o * a.W * u.W +
         in.I_o1 * a.Omega1_0 * u.Omega1_0 + in.I_o2 * a.Omega2_0 * u.Omega2_0 +
         in.J3_s * a.Omega3 * u.Omega3 + in.rho_o * (a.U1 * u.U1 + a.U2 * u.U2) +
         in.I_o3 * a.Omega3_0 * u.Omega3_0;
}

double kinetic_energy_density(const PlateKinematics& velocity, const InertiaSet& inertia) {
  return 0.5 * kinetic_density(velocity, velocity, inertia);
}

}  // namespace cosserat_plate
