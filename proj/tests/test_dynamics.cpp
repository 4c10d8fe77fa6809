#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cosserat_plate/dynamics.hpp"
#include "cosserat_plate/verify.hpp"
#include "support/mindlin_fd.hpp"

using namespace cosserat_plate;

namespace {

constexpr double kPi = std::numbers::pi;

const MaterialParams kGeneric{1.5, 1.0, 0.2, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};

ModelConfig clamped(int n, const MaterialParams& mat = kGeneric) {
  ModelConfig c;
  c.material = mat;
  c.h = 0.1;
  c.nx = c.ny = n;
  return c;
}

ModelConfig with_free_edges(ModelConfig c) {
  for (auto& e : c.edges) e.kind = EdgeKind::kTraction;
  return c;
}

Vector9 zero9(double, double, double) { return Vector9::Zero(); }

NodalFunction bubble_w(double amp) {
  return [amp](double x, double y, double) {
    Vector9 v = Vector9::Zero();
    v[2] = amp * std::sin(kPi * x) * std::sin(kPi * y);
    return v;
  };
}

mindlin_oracle::Plate classical_plate(double lambda, double mu, double rho, double h) {
  const double nu = lambda / (2.0 * (lambda + mu));
  const double E = 2.0 * mu * (1.0 + nu);
  return {E * h * h * h / (12.0 * (1.0 - nu * nu)), nu, 5.0 / 6.0 * mu * h, rho * h * h * h / 12.0,
          rho * h};
}

}  // namespace

TEST(Grid, FiveByFiveClampedHasEightyOneUnknowns) {
  const DiscreteModel m = assemble(clamped(5));
  EXPECT_EQ(m.num_unknowns(), 81);
  EXPECT_EQ(m.num_dofs(), 225);
}

TEST(Grid, TooSmallGridIsRejected) {
  try {
    assemble(clamped(3));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("nx,ny >= 5"), std::string::npos);
  }
}

TEST(Grid, MixedEdgesAreAccepted) {
  ModelConfig c = clamped(9);
  c.edges[kRight].kind = EdgeKind::kTraction;
  c.edges[kTop].kind = EdgeKind::kTraction;
  const DiscreteModel m = assemble(c);
  EXPECT_EQ(m.num_unknowns(), 9 * (8 * 8));
  EXPECT_FALSE(m.traction_dofs.empty());
  EXPECT_TRUE(m.has_displacement_edge());
}

TEST(StableDt, ScalesLinearlyWithSpacing) {
  const double dt17 = stable_dt(assemble(clamped(17)));
  const double dt33 = stable_dt(assemble(clamped(33)));
  const double ratio = dt17 / dt33;
  EXPECT_GT(ratio, 1.7);
  EXPECT_LT(ratio, 2.3);
}

TEST(StableDt, FiniteForZeroAndModerateCoupling) {
  ModelConfig c0 = clamped(13);
  TechnicalConstants tc = technical_constants(kGeneric, c0.h);
  tc.N = 0.0;
  c0.constants = tc;
  ModelConfig c5 = clamped(13);
  TechnicalConstants tc5 = technical_constants(kGeneric, c5.h);
  tc5.N = 0.5;
  c5.constants = tc5;
  const double d0 = stable_dt(assemble(c0)), d5 = stable_dt(assemble(c5));
  EXPECT_TRUE(std::isfinite(d0) && d0 > 0.0);
  EXPECT_TRUE(std::isfinite(d5) && d5 > 0.0);
}

TEST(StableDt, IndependentOfLoad) {
  ModelConfig c = clamped(13);
  const double d = stable_dt(assemble(c));
  c.loads = [](double, double, double) { return LoadValues{1e3, 5.0, 0.0, 2.0}; };
  EXPECT_DOUBLE_EQ(stable_dt(assemble(c)), d);
}

TEST(Leapfrog, ZeroStateStaysZero) {
  const DiscreteModel m = assemble(clamped(9));
  const double dt = 0.5 * stable_dt(m);
  DiscreteState s = initial_state(m, zero9, zero9, dt);
  for (int k = 0; k < 50; ++k) s = step(s, m, dt);
  EXPECT_EQ(s.H.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_FALSE(s.stability_warning);
}

TEST(Leapfrog, RigidTranslationIsUnchangedWithFreeEdges) {
  const DiscreteModel m = assemble(with_free_edges(clamped(9)));
  const double dt = 0.5 * stable_dt(m);
  auto shift = [](double, double, double) {
    Vector9 v = Vector9::Zero();
    v[6] = 0.25;
    return v;
  };
  DiscreteState s = initial_state(m, shift, zero9, dt);
  for (int k = 0; k < 100; ++k) s = step(s, m, dt);
  for (int n = 0; n < m.num_nodes(); ++n) {
    EXPECT_NEAR(s.H[9 * n + 6], 0.25, 1e-12);
    EXPECT_NEAR(s.H.segment<9>(9 * n).norm(), 0.25, 1e-12);
  }
}

TEST(Leapfrog, StabilityWarningAboveLimit) {
  const DiscreteModel m = assemble(clamped(9));
  const double dt = 1.5 * stable_dt(m);
  DiscreteState s = initial_state(m, zero9, zero9, dt);
  s = step(s, m, dt);
  EXPECT_TRUE(s.stability_warning);
}

TEST(Energy, FreeVibrationOfClampedPlateIsConserved) {
  const DiscreteModel m = assemble(clamped(13));
  const double dt = 0.5 * stable_dt(m);
  const SimulationResult r = simulate(m, initial_state(m, zero9, bubble_w(1.0), dt), 2000 * dt, dt);
  EXPECT_LT(r.energy.max_relative_drift(), 1e-3);
  EXPECT_GT(r.energy.samples.front().kinetic, 0.0);
}

TEST(Energy, ForcedDriftIsSecondOrderInDt) {
  ModelConfig c = clamped(11);
  c.loads = [](double x, double y, double t) {
    return LoadValues{std::sin(kPi * x) * std::sin(kPi * y) * std::sin(3.0 * t), 0.0, 0.0, 0.0};
  };
  const DiscreteModel m = assemble(c);
  const double dt = 0.5 * stable_dt(m);
  const double T = 400 * dt;
  const double d1 = simulate(m, initial_state(m, zero9, zero9, dt), T, dt).energy.max_relative_drift();
  const double d2 =
      simulate(m, initial_state(m, zero9, zero9, dt / 2), T, dt / 2).energy.max_relative_drift();
  EXPECT_GT(d1 / d2, 3.0);
}

TEST(Energy, DiscreteStrainEnergyIsPositive) {
  const DiscreteModel m = assemble(clamped(11));
  Eigen::VectorXd H = Eigen::VectorXd::Zero(m.num_dofs());
  for (int j = 1; j < m.ny - 1; ++j)
    for (int i = 1; i < m.nx - 1; ++i)
      H.segment<9>(9 * m.node(i, j)).setConstant(std::sin(0.3 * i + 0.7 * j));
  EXPECT_GT(discrete_strain_energy(m, H), 0.0);
}

TEST(Static, ZeroLoadsGiveZeroSolution) {
  const StaticSolution s = static_solve(assemble(clamped(9)));
  EXPECT_EQ(s.H.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Static, AllTractionEdgesReportNullSpace) {
  const DiscreteModel m = assemble(with_free_edges(clamped(9)));
  try {
    static_solve(m);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_NE(std::string(e.what()).find("null space"), std::string::npos);
  }
}

TEST(Static, CenterDeflectionMatchesClassicalMindlin) {
  // nu = 0.3, alpha tiny: classical limit.
  const MaterialParams mat{1.5, 1.0, 1e-16, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};
  ModelConfig c = clamped(33, mat);
  c.loads = [](double, double, double) { return LoadValues{1.0, 0.0, 0.0, 0.0}; };
  const DiscreteModel m = assemble(c);
  const double w = static_solve(m).H[9 * m.node(16, 16) + 2];

  const mindlin_oracle::ClampedSquare ref(classical_plate(1.5, 1.0, 1.0, 0.1), 1.0, 33);
  const double w_ref = ref.solve_static(1.0)[ref.index(16, 16, 0)];
  EXPECT_LT(std::abs(w - w_ref) / std::abs(w_ref), 5e-3);
  // Thin clamped plate: w_c ~ 0.00126 p a^4 / D plus a shear correction.
  const double D = classical_plate(1.5, 1.0, 1.0, 0.1).D;
  EXPECT_NEAR(w * D, 0.00126, 0.0002);
}

TEST(Static, DisplacementDataIsImposed) {
  ModelConfig c = clamped(9);
  c.edges[kLeft].data = [](double, double y, double) {
    Vector9 v = Vector9::Zero();
    v[2] = 0.01 * std::sin(kPi * y);
    return v;
  };
  const DiscreteModel m = assemble(c);
  const StaticSolution s = static_solve(m);
  for (int j = 0; j < m.ny; ++j)
    EXPECT_DOUBLE_EQ(s.H[9 * m.node(0, j) + 2], 0.01 * std::sin(kPi * m.y(j)));
  EXPECT_LT(s.residual, 1e-9 * s.rhs_norm);
}

TEST(Leapfrog, DisplacementRowsFollowDataExactly) {
  ModelConfig c = clamped(9);
  c.edges[kLeft].data = [](double, double y, double t) {
    Vector9 v = Vector9::Zero();
    v[2] = 0.01 * std::sin(kPi * y) * std::sin(2.0 * t);
    v[6] = 0.003 * t;
    return v;
  };
  c.edges[kRight].kind = EdgeKind::kTraction;
  const DiscreteModel m = assemble(c);
  const double dt = 0.5 * stable_dt(m);
  DiscreteState s = initial_state(m, zero9, zero9, dt);
  for (int k = 0; k < 37; ++k) s = step(s, m, dt);
  for (int j = 1; j < m.ny - 1; ++j) {
    EXPECT_DOUBLE_EQ(s.H[9 * m.node(0, j) + 2], 0.01 * std::sin(kPi * m.y(j)) * std::sin(2.0 * s.time));
    EXPECT_DOUBLE_EQ(s.H[9 * m.node(0, j) + 6], 0.003 * s.time);
  }
}

TEST(Leapfrog, ZeroCouplingTrajectoryMatchesMindlin) {
  const MaterialParams mat{1.5, 1.0, 0.2, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}};
  const int n = 17;
  ModelConfig c = clamped(n, mat);
  TechnicalConstants tc = technical_constants(mat, c.h);
  tc.N = 0.0;
  c.constants = tc;
  const DiscreteModel m = assemble(c);
  const double dt = 0.5 * stable_dt(m);
  const int steps = 300;
  DiscreteState s = initial_state(m, bubble_w(1e-2), zero9, dt);
  for (int k = 0; k < steps; ++k) s = step(s, m, dt);

  // Independent Mindlin leapfrog: x1 = x0 + dt v0 + dt^2/2 a0, then central steps.
  const mindlin_oracle::ClampedSquare ref(classical_plate(1.5, 1.0, 1.0, 0.1), 1.0, n);
  const double d = ref.spacing();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ref.size());
  for (int j = 1; j < n - 1; ++j)
    for (int i = 1; i < n - 1; ++i) x[ref.index(i, j, 0)] = 1e-2 * std::sin(kPi * i * d) * std::sin(kPi * j * d);
  Eigen::VectorXd inv_mass(ref.size());
  for (int k = 0; k < ref.size(); ++k) inv_mass[k] = 1.0 / ref.mass(k);
  Eigen::VectorXd v = -0.5 * dt * ref.matrix() * x;
  v = v.cwiseProduct(inv_mass);
  for (int k = 0; k < steps; ++k) {
    v += dt * (ref.matrix() * x).cwiseProduct(inv_mass);
    x += dt * v;
  }

  double err = 0.0, scale = 0.0;
  for (int j = 1; j < n - 1; ++j)
    for (int i = 1; i < n - 1; ++i) {
      const int node = m.node(i, j);
      const double mine[3] = {s.H[9 * node + 2], s.H[9 * node + 0], s.H[9 * node + 1]};
      for (int f = 0; f < 3; ++f) {
        err = std::max(err, std::abs(mine[f] - x[ref.index(i, j, f)]));
        scale = std::max(scale, std::abs(x[ref.index(i, j, f)]));
      }
    }
  EXPECT_LT(err / scale, 1e-6);
}

TEST(Convergence, ManufacturedSolutionIsSecondOrder) {
  const CheckResult r = check_convergence(1, 1);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_GE(r.value, 1.9);
}

TEST(Hpr, StationaryAtDiscreteSolution) {
  ModelConfig c = clamped(17);
  c.loads = [](double, double, double) { return LoadValues{1.0, 0.0, 0.0, 0.0}; };
  const DiscreteModel m = assemble(c);
  const Eigen::VectorXd H = static_solve(m).H;
  const double t0 = hpr_functional(m, H);
  Eigen::VectorXd dH = Eigen::VectorXd::Zero(m.num_dofs());
  for (int dof : m.interior_dofs) dH[dof] = std::sin(0.37 * dof);
  dH /= dH.norm();
  const double eps = 1e-4;
  const double deriv = (hpr_functional(m, H + eps * dH) - hpr_functional(m, H - eps * dH)) / (2 * eps);
  EXPECT_LT(std::abs(deriv), 1e-8 * std::max(1.0, std::abs(t0)));

  const double away = (hpr_functional(m, 2 * H + eps * dH) - hpr_functional(m, 2 * H - eps * dH)) / (2 * eps);
  EXPECT_GT(std::abs(away), 1e3 * std::abs(deriv));
}
