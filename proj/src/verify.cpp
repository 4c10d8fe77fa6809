#include "cosserat_plate/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Sparse>

#include "cosserat_plate/cosserat3d.hpp"
#include "cosserat_plate/dispersion.hpp"
#include "cosserat_plate/operators.hpp"
#include "cosserat_plate/plate_constitutive.hpp"
#include "cosserat_plate/polynomial.hpp"

namespace cosserat_plate {

namespace {

using Clock = std::chrono::steady_clock;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::pow(10.0, uniform(rng, std::log10(lo), std::log10(hi)));
}

Eigen::Matrix3d random_matrix(std::mt19937_64& rng) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 9; ++i) m.data()[i] = uniform(rng, -1.0, 1.0);
  return m;
}

template <int R>
Eigen::Matrix<double, R, 1> random_vector(std::mt19937_64& rng) {
  Eigen::Matrix<double, R, 1> v;
  for (int i = 0; i < R; ++i) v[i] = uniform(rng, -1.0, 1.0);
  return v;
}

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

// Runs body and stamps the elapsed time.
template <class F>
CheckResult timed(F&& body) {
  const auto t0 = Clock::now();
  CheckResult r = body();
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

const MaterialParams kGenericMaterial{1.5, 1.0, 0.2, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};

}  // namespace

MaterialParams random_admissible_material(std::mt19937_64& rng) {
  for (;;) {
    const double mu = log_uniform(rng, 0.3, 3.0);
    const double nu = uniform(rng, -0.5, 0.45);
    const double lambda = 2.0 * mu * nu / (1.0 - 2.0 * nu);
    const double N = uniform(rng, 0.1, 0.9);
    const double l_t = log_uniform(rng, 1e-3, 1e-1);
    const double l_b = l_t * uniform(rng, 0.55, 3.0);
    const double Psi = uniform(rng, 0.2, 1.3);
    const double rho = log_uniform(rng, 0.3, 3.0);
    const std::array<double, 3> J{log_uniform(rng, 1e-4, 1e-2), log_uniform(rng, 1e-4, 1e-2),
                                  log_uniform(rng, 1e-4, 1e-2)};
    MaterialParams p = material_from_technical(lambda, mu, N, l_t, l_b, Psi, rho, J);
    if (validate_parameters(p).admissible()) return p;
  }
}

CheckResult check_constitutive_round_trip(std::uint64_t seed, int samples) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const MaterialParams p = random_admissible_material(rng);
      const ReciprocalParams r = reciprocal_constants(p);
      Strain3D e{random_matrix(rng), random_matrix(rng)};
      const Strain3D back = strain_from_stress_3d(stress_from_strain_3d(e, p), r);
      const double scale = std::max(e.gamma.cwiseAbs().maxCoeff(), e.chi.cwiseAbs().maxCoeff());
      const double err = std::max((back.gamma - e.gamma).cwiseAbs().maxCoeff(),
                                  (back.chi - e.chi).cwiseAbs().maxCoeff());
      worst = std::max(worst, err / scale);
    }
    CheckResult c{"3D constitutive round trip", worst <= 1e-12, worst, 1e-12, "", 0.0};
    c.detail = std::to_string(samples) + " samples, max relative error";
    return c;
  });
}

CheckResult check_energy_positivity(std::uint64_t seed, int samples) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    double min3d = std::numeric_limits<double>::infinity();
    double min_plate = min3d;
    for (int s = 0; s < samples; ++s) {
      const MaterialParams p = random_admissible_material(rng);
      Strain3D e{random_matrix(rng), random_matrix(rng)};
      const double n3 = e.gamma.squaredNorm() + e.chi.squaredNorm();
      min3d = std::min(min3d, strain_energy_3d(e, p) / n3);
      const double h = uniform(rng, 0.05, 0.5);
      const PlateStress S = PlateStress::from_vector(random_vector<kNumResultants>(rng));
      const double phi = plate_energy_density(S, p, h, LoadValues{}, 0.0);
      min_plate = std::min(min_plate, phi / S.to_vector().squaredNorm());
    }
    const double worst = std::min(min3d, min_plate);
    CheckResult c{"energy positivity", worst > 0.0, worst, 0.0, "", 0.0};
    c.detail = format("min W/|strain|^2 = %.3e, min Phi/|S|^2 = %.3e", min3d, min_plate);
    return c;
  });
}

CheckResult check_plate_quadratic_form(std::uint64_t seed, int samples) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const MaterialParams p = random_admissible_material(rng);
      const double h = uniform(rng, 0.05, 0.5);
      const TechnicalConstants tc = technical_constants(p, h);
      const PlateStrain E = PlateStrain::from_vector(random_vector<kNumResultants>(rng));
      const PlateStress S = stress_from_strain(E, tc, LoadValues{});
      const double half_work = 0.5 * internal_work_density(S, E);
      const double phi = plate_energy_density(S, p, h, LoadValues{}, 0.0);
      worst = std::max(worst, std::abs(phi - half_work) / std::abs(half_work));
    }
    CheckResult c{"plate quadratic form", worst <= 1e-10, worst, 1e-10, "", 0.0};
    c.detail = std::to_string(samples) + " samples, max |Phi - S.E/2| / |S.E/2|";
    return c;
  });
}

CheckResult check_thickness_round_trip(std::uint64_t seed, int samples) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    double worst_trip = 0.0, worst_face = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double h = uniform(rng, 0.05, 0.5);
      const PlateStress S = PlateStress::from_vector(random_vector<kNumResultants>(rng));
      const double top = uniform(rng, -1, 1), bottom = uniform(rng, -1, 1);
      const double mtop = uniform(rng, -1, 1), mbottom = uniform(rng, -1, 1);
      const LoadValues l = LoadValues::from_faces(top, bottom, mtop, mbottom);
      const PlateStress back =
          resultants_from_profiles([&](double z) { return thickness_profiles(S, l, h, z); }, h);
      worst_trip = std::max(worst_trip, (back.to_vector() - S.to_vector()).cwiseAbs().maxCoeff() /
                                            S.to_vector().cwiseAbs().maxCoeff());
      const Stress3D up = thickness_profiles(S, l, h, 1.0);
      const Stress3D down = thickness_profiles(S, l, h, -1.0);
      double face = std::max({std::abs(up.sigma(2, 2) - top), std::abs(down.sigma(2, 2) - bottom),
                              std::abs(up.mu_c(2, 2) - mtop), std::abs(down.mu_c(2, 2) - mbottom)});
      for (int b = 0; b < 2; ++b)
        face = std::max({face, std::abs(up.sigma(2, b)), std::abs(down.sigma(2, b)),
                         std::abs(up.mu_c(2, b)), std::abs(down.mu_c(2, b))});
      worst_face = std::max(worst_face, face);
    }
    const double worst = std::max(worst_trip, worst_face);
    CheckResult c{"thickness round trip", worst <= 1e-12, worst, 1e-12, "", 0.0};
    c.detail = format("round trip %.2e, face conditions %.2e", worst_trip, worst_face);
    return c;
  });
}

CheckResult check_operator_oracle(std::uint64_t seed) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::size_t diffs = 0;
    for (int s = 0; s < 8; ++s) {
      const MaterialParams p = s == 0 ? kGenericMaterial : random_admissible_material(rng);
      const double h = s == 0 ? 0.1 : uniform(rng, 0.05, 0.5);
      const TechnicalConstants tc = technical_constants(p, h);
      const InertiaSet in = inertia_constants(p, h);
      const auto f = operator_residual_oracle(build_flexural(tc, in, h), seed + s);
      const auto e = operator_residual_oracle(build_extensional(tc, in, h), seed + s);
      worst = std::max({worst, f.relative(), e.relative()});
      if (s == 0)
        for (const auto& d : coefficient_diff(tc))
          if (d.abs_diff > 1e-12 * std::max(1.0, std::abs(d.oracle_value))) ++diffs;
    }
    CheckResult c{"operator oracle", worst <= 1e-10, worst, 1e-10, "", 0.0};
    c.detail = "8 materials x 2 subsystems; " + std::to_string(diffs) +
               " printed coefficient entries differ (see coefficient_diff.csv)";
    return c;
  });
}

ModelConfig classical_clamped_config(int n, int threads) {
  ModelConfig c;
  // nu = 0.3 with mu = 1; alpha = 1e-16 gives N = 1e-8.
  c.material = {1.5, 1.0, 1e-16, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};
  c.h = 0.1;
  c.nx = c.ny = n;
  c.threads = threads;
  c.loads = [](double, double, double) { return LoadValues{1.0, 0.0, 0.0, 0.0}; };
  return c;
}

double mindlin_fd_center_deflection(double D, double nu, double kGh, double a, double p, int n) {
  // Unknowns (w, psi_x, psi_y) at interior nodes; clamped edges w = psi = 0.
  const int m = n - 2;
  const double d = a / (n - 1);
  auto id = [m](int i, int j, int f) { return 3 * ((j - 1) * m + (i - 1)) + f; };
  std::vector<Eigen::Triplet<double>> trip;
  auto add = [&](int row, int i, int j, int f, double v) {
    if (i < 1 || j < 1 || i > m || j > m) return;
    trip.emplace_back(row, id(i, j, f), v);
  };
  const double d2 = 1.0 / (d * d), dc = 1.0 / (4.0 * d * d), d1 = 1.0 / (2.0 * d);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(3 * m * m);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= m; ++i) {
      // kGh (lap w + div psi) = -p
      int r = id(i, j, 0);
      add(r, i, j, 0, -4.0 * kGh * d2);
      for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) add(r, i + di, j + dj, 0, kGh * d2);
      add(r, i + 1, j, 1, kGh * d1);
      add(r, i - 1, j, 1, -kGh * d1);
      add(r, i, j + 1, 2, kGh * d1);
      add(r, i, j - 1, 2, -kGh * d1);
      rhs[r] = -p;
      // D (psi_a,aa + (1-nu)/2 psi_a,bb + (1+nu)/2 psi_b,ab) - kGh (psi_a + w,a) = 0
      for (int f = 1; f <= 2; ++f) {
        r = id(i, j, f);
        const int g = 3 - f;
        const auto [ai, aj] = f == 1 ? std::pair{1, 0} : std::pair{0, 1};
        const auto [bi, bj] = f == 1 ? std::pair{0, 1} : std::pair{1, 0};
        add(r, i, j, f, -2.0 * D * d2 - 2.0 * D * (1.0 - nu) / 2.0 * d2 - kGh);
        add(r, i + ai, j + aj, f, D * d2);
        add(r, i - ai, j - aj, f, D * d2);
        add(r, i + bi, j + bj, f, D * (1.0 - nu) / 2.0 * d2);
        add(r, i - bi, j - bj, f, D * (1.0 - nu) / 2.0 * d2);
        const double cx = D * (1.0 + nu) / 2.0 * dc;
        add(r, i + 1, j + 1, g, cx);
        add(r, i - 1, j - 1, g, cx);
        add(r, i + 1, j - 1, g, -cx);
        add(r, i - 1, j + 1, g, -cx);
        add(r, i + ai, j + aj, 0, -kGh * d1);
        add(r, i - ai, j - aj, 0, kGh * d1);
      }
    }
  Eigen::SparseMatrix<double> A(3 * m * m, 3 * m * m);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
  if (lu.info() != Eigen::Success) throw SolverError("Mindlin oracle factorization failed");
  const Eigen::VectorXd x = lu.solve(rhs);
  return x[id(n / 2, n / 2, 0)];
}

CheckResult check_classical_limit(int threads) {
  return timed([&] {
    const int n = 65;
    const DiscreteModel m = assemble(classical_clamped_config(n, threads));
    const StaticSolution sol = static_solve(m);
    const double w = sol.H[9 * m.node(n / 2, n / 2) + 2];
    const double kGh = m.tc.kappa1_sq * m.tc.G * m.config.h;
    const double w_ref = mindlin_fd_center_deflection(m.tc.D, m.tc.nu, kGh, 1.0, 1.0, n);
    const double dev_static = std::abs(w - w_ref) / std::abs(w_ref);

    // Each classical branch must appear among the flexural branches.
    double dev_disp = 0.0;
    for (double k : {0.5, 2.0, 10.0, 40.0, 150.0}) {
      const BranchSet b = branches(m.flexural.L, m.flexural.mass, k, 0.0);
      for (double ref :
           mindlin_branches(m.tc.D, m.tc.nu, kGh, m.inertia.I_o, m.inertia.rho_o, k)) {
        double best = std::numeric_limits<double>::infinity();
        for (double om : b.omega) best = std::min(best, std::abs(om - ref) / ref);
        dev_disp = std::max(dev_disp, best);
      }
    }
    CheckResult c{"classical limit", dev_static <= 5e-3 && dev_disp <= 1e-8,
                  std::max(dev_static / 5e-3, dev_disp / 1e-8), 1.0, "", 0.0};
    c.detail = format("W D/(p a^4) = %.6e vs Mindlin FD %.6e (rel %.2e)",
                      w * m.tc.D, w_ref * m.tc.D, dev_static);
    c.detail += format("; dispersion rel %.2e", dev_disp);
    return c;
  });
}

CheckResult check_convergence(std::uint64_t seed, int threads) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    std::array<Poly2, 9> P;
    for (auto& p : P) p = Poly2::random(3, rng);
    auto diff = [](const std::array<Poly2, 9>& q, int axis) {
      std::array<Poly2, 9> d;
      for (int f = 0; f < 9; ++f) d[f] = q[f].derivative(axis);
      return d;
    };
    auto eval = [](const std::array<Poly2, 9>& q, double x, double y) {
      Vector9 v;
      for (int f = 0; f < 9; ++f) v[f] = q[f](x, y);
      return v;
    };
    const auto P1 = diff(P, 0), P2 = diff(P, 1);
    const auto P11 = diff(P1, 0), P12 = diff(P1, 1), P22 = diff(P2, 1);
    std::vector<double> errors;
    for (int n : {17, 33, 65}) {
      ModelConfig c;
      c.material = kGenericMaterial;
      c.h = 0.1;
      c.nx = c.ny = n;
      c.threads = threads;
      const DiscreteModel base = assemble(c);
      const SymbolTables L = base.L9;
      const BoundaryTables T = base.T9;
      c.source = [=](double x, double y, double) {
        const Vector9 r = L.zeroth * eval(P, x, y) + L.first[0] * eval(P1, x, y) +
                          L.first[1] * eval(P2, x, y) + L.second[0][0] * eval(P11, x, y) +
                          (L.second[0][1] + L.second[1][0]) * eval(P12, x, y) +
                          L.second[1][1] * eval(P22, x, y);
        return Vector9(-r);
      };
      const NodalFunction exact = [=](double x, double y, double) { return eval(P, x, y); };
      auto traction = [=](double n1, double n2) {
        return NodalFunction([=](double x, double y, double) {
          return Vector9((n1 * T.zeroth[0] + n2 * T.zeroth[1]) * eval(P, x, y) +
                         (n1 * T.first[0][0] + n2 * T.first[1][0]) * eval(P1, x, y) +
                         (n1 * T.first[0][1] + n2 * T.first[1][1]) * eval(P2, x, y));
        });
      };
      c.edges[kLeft] = {EdgeKind::kDisplacement, exact};
      c.edges[kBottom] = {EdgeKind::kDisplacement, exact};
      c.edges[kRight] = {EdgeKind::kTraction, traction(1, 0)};
      c.edges[kTop] = {EdgeKind::kTraction, traction(0, 1)};
      const DiscreteModel m = assemble(c);
      const StaticSolution sol = static_solve(m);
      double err = 0.0;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          err = std::max(err, (sol.H.segment<9>(9 * m.node(i, j)) - eval(P, m.x(i), m.y(j)))
                                  .cwiseAbs()
                                  .maxCoeff());
      errors.push_back(err);
    }
    const double order = std::log2(errors[0] / errors[2]) / 2.0;
    CheckResult c{"manufactured-solution convergence", order >= 1.9, order, 1.9, "", 0.0};
    c.detail = format("max errors %.3e / %.3e / %.3e", errors[0], errors[1], errors[2]);
    c.detail += format("; pairwise orders %.3f, %.3f", std::log2(errors[0] / errors[1]),
                       std::log2(errors[1] / errors[2]));
    return c;
  });
}

CheckResult check_energy_conservation(int threads) {
  return timed([&] {
    ModelConfig cfg;
    cfg.material = kGenericMaterial;
    cfg.h = 0.1;
    cfg.nx = cfg.ny = 17;
    cfg.threads = threads;
    const DiscreteModel m = assemble(cfg);
    const double dt = 0.5 * stable_dt(m);
    const NodalFunction V0 = [](double x, double y, double) {
      Vector9 v = Vector9::Zero();
      v[2] = std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y);
      return v;
    };
    const int steps = 10000;
    double drift[2];
    for (int q = 0; q < 2; ++q) {
      const double d = q == 0 ? dt : dt / 4.0;
      const SimulationResult r =
          simulate(m, initial_state(m, nullptr, V0, d), steps * dt, d, 0);
      drift[q] = r.energy.max_relative_drift();
    }
    const double ratio = drift[0] / drift[1];
    CheckResult c{"energy conservation", drift[0] < 1e-3 && ratio >= 10.0, drift[0], 1e-3, "",
                  0.0};
    c.detail = format("dt = %.4e (half the stability limit), drift %.3e, quarter-dt drift %.3e",
                      dt, drift[0], drift[1]);
    c.detail += format(", ratio %.1f", ratio);
    return c;
  });
}

CheckResult check_hpr_stationarity(std::uint64_t seed, int threads) {
  return timed([&] {
    const int n = 65;
    const DiscreteModel m = assemble(classical_clamped_config(n, threads));
    const StaticSolution sol = static_solve(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mode(1, 4);
    auto smooth = [&](const Vector9& amp, int kx, int ky) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(m.num_dofs());
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          v.segment<9>(9 * m.node(i, j)) = amp * std::sin(kx * std::numbers::pi * m.x(i)) *
                                           std::sin(ky * std::numbers::pi * m.y(j));
      return v;
    };
    auto random_amp = [&] {
      Vector9 amp;
      for (int f = 0; f < 9; ++f) amp[f] = uniform(rng, -1.0, 1.0);
      return amp;
    };
    // Non-equilibrium state: four random sine modes with unit-range amplitudes.
    Eigen::VectorXd R = Eigen::VectorXd::Zero(m.num_dofs());
    for (int q = 0; q < 4; ++q) R += smooth(random_amp(), mode(rng), mode(rng));

    const double eps = 1e-2;
    double worst = 0.0, worst_random = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const Vector9 amp = random_amp();
      const int kx = mode(rng), ky = mode(rng);
      Eigen::VectorXd d = smooth(amp, kx, ky);
      d /= d.norm();
      const double d_eq =
          (hpr_functional(m, sol.H + eps * d) - hpr_functional(m, sol.H - eps * d)) / (2 * eps);
      const double d_rand =
          (hpr_functional(m, R + eps * d) - hpr_functional(m, R - eps * d)) / (2 * eps);
      worst = std::max(worst, std::abs(d_eq));
      worst_random = std::max(worst_random, std::abs(d_rand));
    }
    const double ratio = worst_random / 1e-6;
    CheckResult c{"HPR stationarity", worst <= 1e-6 && ratio >= 1e3, worst, 1e-6, "", 0.0};
    c.detail = format("max |dTheta| at solution %.2e; max |dTheta| at random state %.2e (%.1e x tolerance)",
                      worst, worst_random, ratio);
    c.detail += format(", %.1e x the value at the solution", worst_random / worst);
    return c;
  });
}

namespace {

// Smallest eigenvalue of M^{-1/2} A(k) M^{-1/2} relative to max(1, largest).
double min_relative_eigenvalue(const SymbolTables& L, const Eigen::VectorXd& mass, double k1,
                               double k2) {
  const Eigen::VectorXd s = mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXcd A = s.asDiagonal() * L.wave_stiffness(k1, k2) * s.asDiagonal();
  A = 0.5 * (A + A.adjoint()).eval();
  const Eigen::VectorXd lam = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(A, Eigen::EigenvaluesOnly).eigenvalues();
  return lam.minCoeff() / std::max(1.0, lam.cwiseAbs().maxCoeff());
}

}  // namespace

CheckResult check_dispersion_sanity(std::uint64_t seed, int samples) {
  return timed([&] {
    std::mt19937_64 rng(seed);
    const int per_material = 100;
    const int materials = std::max(1, samples / per_material);
    double lowest = std::numeric_limits<double>::infinity();
    for (int s = 0; s < materials; ++s) {
      const MaterialParams p = random_admissible_material(rng);
      const double h = uniform(rng, 0.05, 0.5);
      const TechnicalConstants tc = technical_constants(p, h);
      const InertiaSet in = inertia_constants(p, h);
      const FlexuralOperator f = build_flexural(tc, in, h);
      const ExtensionalOperator e = build_extensional(tc, in, h);
      for (int k = 0; k < per_material; ++k) {
        const double mag = k == 0 ? 0.0 : log_uniform(rng, 1e-2, 1e3) / h;
        const double th = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        const double k1 = mag * std::cos(th), k2 = mag * std::sin(th);
        lowest = std::min({lowest, min_relative_eigenvalue(f.L, f.mass, k1, k2),
                           min_relative_eigenvalue(e.L, e.mass, k1, k2)});
      }
    }
    CheckResult c{"dispersion non-negativity", lowest >= -1e-10, lowest, -1e-10, "", 0.0};
    c.detail = std::to_string(materials * per_material) +
               " (material, wavevector) samples; min relative omega^2";
    return c;
  });
}

CheckResult check_zero_mode_count(double N) {
  return timed([&] {
    const double h = 0.1;
    TechnicalConstants tc = technical_constants(kGenericMaterial, h);
    tc.N = N;
    const InertiaSet in = inertia_constants(kGenericMaterial, h);
    const CutoffResult cut = cutoff_frequencies(build_flexural(tc, in, h), build_extensional(tc, in, h));
    std::string fields;
    for (const auto& f : cut.flexural_zero_fields) fields += (fields.empty() ? "" : " ") + f;
    CheckResult c{"flexural zero modes at N = " + format("%g", N), cut.flexural_zero_modes == 1,
                  static_cast<double>(cut.flexural_zero_modes), 1.0, "", 0.0};
    c.detail = "zero modes: " + fields;
    return c;
  });
}

std::vector<CheckResult> run_all(const VerifyOptions& opt,
                                 const std::function<void(const CheckResult&)>& on_result) {
  std::vector<std::function<CheckResult()>> suites{
      [&] { return check_constitutive_round_trip(opt.seed); },
      [&] { return check_energy_positivity(opt.seed); },
      [&] { return check_plate_quadratic_form(opt.seed); },
      [&] { return check_thickness_round_trip(opt.seed); },
      [&] { return check_operator_oracle(opt.seed); },
      [&] { return check_classical_limit(opt.threads); },
      [&] { return check_convergence(opt.seed, opt.threads); },
      [&] { return check_energy_conservation(opt.threads); },
      [&] { return check_hpr_stationarity(opt.seed, opt.threads); },
      [&] { return check_dispersion_sanity(opt.seed); },
      [&] { return check_zero_mode_count(0.0); },
      [&] { return check_zero_mode_count(0.3); },
  };
  std::vector<CheckResult> out;
  for (const auto& run : suites) {
    out.push_back(run());
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace cosserat_plate
