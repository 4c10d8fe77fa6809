#include "cosserat_plate/plate_constitutive.hpp"

#include <cmath>
#include <numbers>

namespace cosserat_plate {

namespace {

// e_{3ab} restricted to the plane: e(0,1) = 1, e(1,0) = -1.
constexpr double levi(int a, int b) { return a == b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

constexpr int other(int a) { return 1 - a; }

double component(const PlateKinematics& u, int field) { return u.to_vector()[field]; }

double derivative(const KinematicsGradient& g, int axis, int field) {
  return axis == 0 ? g.d1.to_vector()[field] : g.d2.to_vector()[field];
}

enum Field { kPsi1, kPsi2, kW, kOmega3, kOmega1_0, kOmega2_0, kU1, kU2, kOmega3_0 };

}  // namespace

PlateStrain strain_from_kinematics(const PlateKinematics& u, const KinematicsGradient& grad) {
  const int psi[2] = {kPsi1, kPsi2};
  const int om0[2] = {kOmega1_0, kOmega2_0};
  const int disp[2] = {kU1, kU2};

  PlateStrain s;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      s.e(a, b) = derivative(grad, a, psi[b]) - levi(a, b) * u.Omega3;
      s.tau0(a, b) = derivative(grad, a, om0[b]);
      s.upsilon(a, b) = derivative(grad, a, disp[b]) - levi(a, b) * u.Omega3_0;
    }
    double rot = 0.0;
    for (int b = 0; b < 2; ++b) rot += levi(a, b) * component(u, om0[b]);
    s.omega[a] = component(u, psi[a]) - rot;
    s.omega_s[a] = derivative(grad, a, kW) + rot;
    s.tau3[a] = derivative(grad, a, kOmega3);
    s.tau3_0[a] = derivative(grad, a, kOmega3_0);
  }
  return s;
}

PlateStress stress_from_strain(const PlateStrain& e, const TechnicalConstants& tc,
                               const LoadValues& loads) {
  const double h = tc.h;
  const double n2 = tc.N * tc.N;
  const double skew = 1.0 - 2.0 * n2;
  const double lt2 = tc.l_t * tc.l_t;
  const double lb2 = tc.l_b * tc.l_b;
  const double psi = tc.Psi_polar;

  const double c_twist = tc.D * (1.0 - tc.nu) / (2.0 * (1.0 - n2));
  const double c_shear = tc.kappa1_sq * tc.G * h / (1.0 - n2);
  const double c_membrane = tc.E * h / (1.0 - tc.nu * tc.nu);
  const double c_inplane_shear = tc.G * h / (1.0 - n2);
  const double c_couple = tc.kappa2_sq * tc.G * h;
  const double c_torsion = tc.G * lt2 * (4.0 * lb2 - lt2) / lb2;

  PlateStress s;
  for (int a = 0; a < 2; ++a) {
    const int o = other(a);
    s.M(a, a) = tc.D * (e.e(a, a) + tc.nu * e.e(o, o)) +
                tc.nu * h * h * loads.p / (10.0 * (1.0 - tc.nu));
    s.M(a, o) = c_twist * (e.e(a, o) + skew * e.e(o, a));

    s.Q[a] = c_shear * (e.omega[a] + skew * e.omega_s[a]);
    s.Q_s[a] = c_shear * (e.omega_s[a] + skew * e.omega[a]);

    s.R(a, a) = c_couple * lt2 * ((2.0 - psi) * e.tau0(a, a) + (1.0 - psi) * e.tau0(o, o)) +
                0.5 * tc.kappa2_sq * h * (1.0 - psi) * loads.t;
    s.R(a, o) = c_couple * (2.0 * lb2 * e.tau0(a, o) + (lt2 - 2.0 * lb2) * e.tau0(o, a));

    s.S_s[a] = c_torsion * h * h * h / 12.0 * e.tau3[a];

    s.N(a, a) = c_membrane * (e.upsilon(a, a) + tc.nu * e.upsilon(o, o)) +
                h * tc.nu / (1.0 - tc.nu) * loads.sigma0;
    s.N(a, o) = c_inplane_shear * (e.upsilon(a, o) + skew * e.upsilon(o, a));

    s.M_s[a] = c_torsion * h * e.tau3_0[a];
  }
  return s;
}

PlateStress stress_from_kinematics(const PlateKinematics& u, const KinematicsGradient& grad,
                                   const TechnicalConstants& tc, const LoadValues& loads) {
  return stress_from_strain(strain_from_kinematics(u, grad), tc, loads);
}

PlateStress stress_from_kinematics_printed(const PlateKinematics& u,
                                           const KinematicsGradient& grad,
                                           const TechnicalConstants& tc,
                                           const LoadValues& loads) {
  const double h = tc.h;
  const double n2 = tc.N * tc.N;
  const double lt2 = tc.l_t * tc.l_t;
  const double lb2 = tc.l_b * tc.l_b;
  const double psi = tc.Psi_polar;
  const int psi_f[2] = {kPsi1, kPsi2};
  const int om0[2] = {kOmega1_0, kOmega2_0};
  const int disp[2] = {kU1, kU2};
  auto d = [&](int field, int axis) { return derivative(grad, axis, field); };
  // (-1)^k for the one-based index k = a + 1
  auto sign_pow = [](int one_based) { return one_based % 2 == 0 ? 1.0 : -1.0; };

  PlateStress s;
  for (int a = 0; a < 2; ++a) {
    const int o = other(a);
    const int a1 = a + 1;
    const int o1 = o + 1;
    s.M(a, a) = tc.D * (d(psi_f[a], a) + tc.nu * d(psi_f[o], o)) +
                tc.nu * h * h / (10.0 * (1.0 - tc.nu)) * loads.p;
    s.M(o, a) = tc.D / 2.0 * (1.0 + tc.nu) / (1.0 - n2) *
                (d(psi_f[o], a) + d(psi_f[a], o) +
                 2.0 * n2 * sign_pow(a1 + 1) * (u.Omega3 - d(psi_f[o], a)));
    s.R(o, a) = tc.kappa2_sq * tc.G * h *
                ((lt2 - 2.0 * lb2) * d(om0[o], a) + 2.0 * lb2 * d(om0[a], o));
    s.R(a, a) = tc.kappa2_sq * tc.G * h * lt2 *
                    (d(om0[a], a) + (1.0 - psi) * (d(om0[a], a) + d(om0[o], o))) +
                2.0 * tc.G * lt2 * (1.0 - psi) / psi * loads.t;
    const double c_shear = tc.kappa1_sq * tc.G * h / (1.0 - n2);
    const double w_a = d(kW, a);
    const double psi_a = component(u, psi_f[a]);
    const double om_o = component(u, om0[o]);
    s.Q[a] = c_shear * (w_a + psi_a - 2.0 * n2 * (w_a + sign_pow(o1) * om_o));
    s.Q_s[a] = c_shear * (w_a + psi_a - 2.0 * n2 * (psi_a + sign_pow(a1) * om_o));
    s.S_s[a] = tc.G * lt2 * (4.0 * lb2 - lt2) * h * h * h / (12.0 * lb2) * d(kOmega3, a);
    s.N(a, a) = tc.E * h / (1.0 - tc.nu * tc.nu) * (d(disp[a], a) + tc.nu * d(disp[o], o)) +
                h * tc.nu / (1.0 - tc.nu) * loads.sigma0;
    s.N(o, a) = tc.G * h / (1.0 - n2) *
                (d(disp[o], a) + d(disp[a], o) -
                 2.0 * n2 * (d(disp[o], a) + sign_pow(a1) * u.Omega3_0));
    s.M_s[a] = tc.G * lt2 * (4.0 * lb2 - lt2) * h / lb2 * d(kOmega3_0, a);
  }
  return s;
}

PlateStrain strain_from_stress(const PlateStress& s, const MaterialParams& mp, double h,
                               const LoadValues& loads, double div_qs) {
  require_admissible(mp);
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");
  const double lam = mp.lambda, mu = mp.mu, al = mp.alpha;
  const double be = mp.beta, ga = mp.gamma, ep = mp.epsilon;
  const double h3 = h * h * h;
  const double dil = mu * (3.0 * lam + 2.0 * mu);
  const double cpl = ga * (3.0 * be + 2.0 * ga);

  PlateStrain e;
  for (int a = 0; a < 2; ++a) {
    const int o = other(a);
    e.e(a, a) = 12.0 * (lam + mu) / (h3 * dil) * s.M(a, a) - 6.0 * lam / (h3 * dil) * s.M(o, o) +
                3.0 * lam / (5.0 * h * dil) * div_qs;
    e.e(a, o) = 3.0 * (al + mu) / (h3 * al * mu) * s.M(a, o) +
                3.0 * (al - mu) / (h3 * al * mu) * s.M(o, a);

    e.omega[a] = 3.0 * (al + mu) / (10.0 * h * al * mu) * s.Q[a] +
                 3.0 * (al - mu) / (10.0 * h * al * mu) * s.Q_s[a];
    e.omega_s[a] = 3.0 * (al - mu) / (10.0 * h * al * mu) * s.Q[a] +
                   3.0 * (al + mu) / (10.0 * h * al * mu) * s.Q_s[a];

    e.tau0(a, a) = 6.0 * (be + ga) / (5.0 * h * cpl) * s.R(a, a) -
                   3.0 * be / (5.0 * h * cpl) * s.R(o, o) - be / (2.0 * cpl) * loads.t;
    e.tau0(a, o) = 3.0 * (ga + ep) / (10.0 * h * ga * ep) * s.R(a, o) +
                   3.0 * (ep - ga) / (10.0 * h * ga * ep) * s.R(o, a);

    e.tau3[a] = 3.0 * (ga + ep) / (h3 * ga * ep) * s.S_s[a];

    e.upsilon(a, a) = (lam + mu) / (h * dil) * s.N(a, a) - lam / (2.0 * h * dil) * s.N(o, o) -
                      lam / (2.0 * dil) * loads.sigma0;
    e.upsilon(a, o) = (al + mu) / (4.0 * h * al * mu) * s.N(a, o) +
                      (al - mu) / (4.0 * h * al * mu) * s.N(o, a);

    e.tau3_0[a] = (ga + ep) / (4.0 * h * ga * ep) * s.M_s[a];
  }
  return e;
}

double plate_energy_density(const PlateStress& s, const MaterialParams& mp, double h,
                            const LoadValues& loads, double div_qs) {
  const double lam = mp.lambda, mu = mp.mu, al = mp.alpha;
  const double be = mp.beta, ga = mp.gamma, ep = mp.epsilon;
  const double h2 = h * h;
  const double dil = mu * (3.0 * lam + 2.0 * mu);
  const double cpl = ga * (3.0 * be + 2.0 * ga);
  const auto& M = s.M;
  const auto& N = s.N;
  const auto& R = s.R;
  const double n_tr = N(0, 0) + N(1, 1);
  const double m_tr = M(0, 0) + M(1, 1);
  const double r_tr = R(0, 0) + R(1, 1);
  const double sigma0 = loads.sigma0;

  double phi = 0.0;
  phi += (lam + mu) / (2.0 * h * dil) *
         (N(0, 0) * N(0, 0) + N(1, 1) * N(1, 1) +
          12.0 / h2 * (M(0, 0) * M(0, 0) + M(1, 1) * M(1, 1)));
  phi -= lam / (2.0 * h * dil) * (N(0, 0) * N(1, 1) + 12.0 / h2 * M(0, 0) * M(1, 1));
  phi += (al + mu) / (8.0 * h * al * mu) *
         (N(0, 1) * N(0, 1) + N(1, 0) * N(1, 0) +
          12.0 / h2 * (M(0, 1) * M(0, 1) + M(1, 0) * M(1, 0)) +
          6.0 / 5.0 * (s.Q.squaredNorm() + s.Q_s.squaredNorm()));
  phi += 3.0 * (al - mu) / (10.0 * h * al * mu) *
         (s.Q.dot(s.Q_s) + 5.0 / 6.0 * N(0, 1) * N(1, 0) + 10.0 / h2 * M(0, 1) * M(1, 0));
  phi += 3.0 * lam / (5.0 * h * dil) * div_qs * m_tr;
  phi += 3.0 / (5.0 * h * cpl) *
         ((be + ga) * (R(0, 0) * R(0, 0) + R(1, 1) * R(1, 1)) - be * R(0, 0) * R(1, 1));
  phi += 3.0 / (10.0 * h) * (1.0 / ga - 1.0 / ep) * R(0, 1) * R(1, 0);
  phi += 17.0 * h * (lam + mu) / (280.0 * dil) * div_qs * div_qs;
  phi -= lam / (2.0 * dil) * n_tr * sigma0;
  phi += h * (lam + mu) / (2.0 * dil) * sigma0 * sigma0;
  phi += (ga + ep) / (h * ga * ep) *
         (s.M_s.squaredNorm() / 8.0 + 3.0 / (2.0 * h2) * s.S_s.squaredNorm() +
          3.0 / 20.0 * (R(0, 1) * R(0, 1) + R(1, 0) * R(1, 0)));
  phi -= be / (2.0 * cpl) * r_tr * loads.t;
  phi += h * (be + ga) / (2.0 * cpl) * loads.t * loads.t;
  phi += h * (be + ga) / (6.0 * cpl) * loads.v * loads.v;
  return phi;
}

double internal_work_density(const PlateStress& s, const PlateStrain& e) {
  return s.to_vector().dot(e.to_vector());
}

Stress3D thickness_profiles(const PlateStress& s, const LoadValues& loads, double h,
                            double zeta3) {
  if (!(std::abs(zeta3) <= 1.0)) throw DomainError("zeta3 must lie in [-1, 1]");
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");
  const double z = zeta3;
  const double bubble = 1.0 - z * z;
  Stress3D out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const double n = s.N(a, b) / h;
      const double m = 12.0 * s.M(a, b) / (h * h * h);
      out.sigma(a, b) = n + 0.5 * h * z * m;
      out.mu_c(a, b) = bubble * 3.0 * s.R(a, b) / (2.0 * h);
    }
    out.sigma(2, a) = 3.0 * s.Q[a] / (2.0 * h) * bubble;
    out.sigma(a, 2) = 3.0 * s.Q_s[a] / (2.0 * h) * bubble;
    out.mu_c(a, 2) = z * 6.0 * s.S_s[a] / (h * h) + s.M_s[a] / h;
    out.mu_c(2, a) = 0.0;
  }
  out.sigma(2, 2) = -0.75 * (z * z * z / 3.0 - z) * loads.p + loads.sigma0;
  out.mu_c(2, 2) = z * loads.v + loads.t;
  return out;
}

const GaussRule& gauss_legendre_8() {
  static const GaussRule rule = [] {
    GaussRule r{};
    constexpr int n = 8;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

PlateStress resultants_from_profiles(const ProfileEvaluator& profile, double h) {
  const GaussRule& g = gauss_legendre_8();
  const double half = 0.5 * h;
  PlateStress s;
  for (int q = 0; q < 8; ++q) {
    const double z = g.nodes[q];
    const double w = g.weights[q];
    const Stress3D t = profile(z);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        s.M(a, b) += w * half * half * z * t.sigma(a, b);
        s.N(a, b) += w * half * t.sigma(a, b);
        s.R(a, b) += w * half * t.mu_c(a, b);
      }
      s.Q[a] += w * half * t.sigma(2, a);
      s.Q_s[a] += w * half * t.sigma(a, 2);
      s.S_s[a] += w * half * half * z * t.mu_c(a, 2);
      s.M_s[a] += w * half * t.mu_c(a, 2);
    }
  }
  return s;
}

}  // namespace cosserat_plate
