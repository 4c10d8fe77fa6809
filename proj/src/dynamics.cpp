#include "cosserat_plate/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "cosserat_plate/plate_constitutive.hpp"
#include "stencil.hpp"

namespace cosserat_plate {

namespace {

// y = A x for a row-major sparse matrix, rows split over worker threads.
Eigen::VectorXd multiply(const DiscreteModel::RowSparse& A, const Eigen::VectorXd& x,
                         int threads) {
  Eigen::VectorXd y(A.rows());
  auto work = [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      double s = 0.0;
      for (DiscreteModel::RowSparse::InnerIterator it(A, r); it; ++it) s += it.value() * x[it.col()];
      y[r] = s;
    }
  };
  const int rows = static_cast<int>(A.rows());
  if (threads <= 1 || rows < 4096) {
    work(0, rows);
    return y;
  }
  std::vector<std::thread> pool;
  const int chunk = (rows + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int r0 = t * chunk, r1 = std::min(rows, r0 + chunk);
    if (r0 < r1) pool.emplace_back(work, r0, r1);
  }
  for (auto& th : pool) th.join();
  return y;
}

double interior_mass(const DiscreteModel& m, std::size_t k) {
  return m.mass[m.interior_dofs[k] % 9];
}

// Homogeneous semi-discrete operator on interior dofs: x -> M^-1 (-(L H)) with
// zero displacement data and traction dofs eliminated.
Eigen::VectorXd apply_reduced(const DiscreteModel& m, const Eigen::VectorXd& x) {
  Eigen::VectorXd H = Eigen::VectorXd::Zero(m.num_dofs());
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) H[m.interior_dofs[k]] = x[k];
  if (!m.traction_dofs.empty()) {
    const Eigen::VectorXd ht = m.boundary_solver->solve(Eigen::VectorXd(-(m.B_t * H)));
    for (std::size_t k = 0; k < m.traction_dofs.size(); ++k) H[m.traction_dofs[k]] = ht[k];
  }
  Eigen::VectorXd y = -multiply(m.L_i, H, m.config.threads);
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) y[k] /= interior_mass(m, k);
  return y;
}

}  // namespace

Eigen::VectorXd interior_force(const DiscreteModel& m, const Eigen::VectorXd& H, double t) {
  return multiply(m.L_i, H, m.config.threads) - m.interior_F(t);
}

double discrete_strain_energy(const DiscreteModel& m, const Eigen::VectorXd& H) {
  const Eigen::VectorXd LH = multiply(m.L_i, H, m.config.threads);
  double e = 0.0;
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) e -= 0.5 * H[m.interior_dofs[k]] * LH[k];
  return e * m.cell_area();
}

DiscreteState initial_state(const DiscreteModel& m, const NodalFunction& H0,
                            const NodalFunction& V0, double dt) {
  DiscreteState s;
  s.H = Eigen::VectorXd::Zero(m.num_dofs());
  s.V = Eigen::VectorXd::Zero(m.num_dofs());
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const int n = m.node(i, j);
      if (H0) s.H.segment<9>(9 * n) = H0(m.x(i), m.y(j), 0.0);
      if (V0) s.V.segment<9>(9 * n) = V0(m.x(i), m.y(j), 0.0);
    }
  m.apply_displacement_data(s.H, 0.0);
  m.solve_traction_dofs(s.H, 0.0);
  const Eigen::VectorXd f = interior_force(m, s.H, 0.0);
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k)
    s.V[m.interior_dofs[k]] -= 0.5 * dt * f[k] / interior_mass(m, k);
  return s;
}

double stable_dt(const DiscreteModel& m, int iterations) {
  const std::size_t n = m.interior_dofs.size();
  if (n == 0) throw SolverError("model has no interior unknowns");
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = u(rng);
  auto mnorm = [&](const Eigen::VectorXd& v) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += interior_mass(m, k) * v[k] * v[k];
    return std::sqrt(s);
  };
  x /= mnorm(x);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd y = apply_reduced(m, x);
    const double ny = mnorm(y);
    if (!(ny > 0.0)) break;
    lambda = std::max(lambda, ny);
    x = y / ny;
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw SolverError("could not estimate the largest frequency");
  const double dt = 0.9 * 2.0 / std::sqrt(lambda);
  m.cached_stable_dt = dt;
  return dt;
}

DiscreteState step(const DiscreteState& s, const DiscreteModel& m, double dt) {
  if (m.cached_stable_dt == 0.0) stable_dt(m);
  DiscreteState next = s;
  next.stability_warning = s.stability_warning || dt > m.cached_stable_dt * (1.0 + 1e-12);
  const Eigen::VectorXd F = m.interior_F(s.time);
  const Eigen::VectorXd LH = multiply(m.L_i, s.H, m.config.threads);
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) {
    const int d = m.interior_dofs[k];
    next.V[d] = s.V[d] + dt * (LH[k] - F[k]) / interior_mass(m, k);
    next.H[d] = s.H[d] + dt * next.V[d];
  }
  next.time = s.time + dt;
  m.apply_displacement_data(next.H, next.time);
  m.solve_traction_dofs(next.H, next.time);
  for (int d : m.displacement_dofs) next.V[d] = (next.H[d] - s.H[d]) / dt;
  for (int d : m.traction_dofs) next.V[d] = (next.H[d] - s.H[d]) / dt;
  return next;
}

double EnergyLog::max_relative_drift() const {
  if (samples.empty()) return 0.0;
  const double e0 = samples.front().total();
  double scale = std::abs(e0);
  for (const auto& s : samples) scale = std::max(scale, std::abs(s.external_work));
  if (scale == 0.0) return 0.0;
  double drift = 0.0;
  for (const auto& s : samples) drift = std::max(drift, std::abs(s.total() - e0));
  return drift / scale;
}

SimulationResult simulate(const DiscreteModel& m, DiscreteState s, double t_final, double dt,
                          int cadence) {
  if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  SimulationResult r;
  r.dt = dt;
  r.steps = static_cast<int>(std::ceil(t_final / dt - 1e-9));
  double work = 0.0, prev_power = 0.0;
  double reference = -1.0;
  auto record = [&](const DiscreteState& st, int n, const Eigen::VectorXd& F,
                    const Eigen::VectorXd& LH) {
    EnergySample e;
    e.t = st.time;
    const double dA = m.cell_area();
    double power = 0.0;
    for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) {
      const int d = m.interior_dofs[k];
      const double mk = interior_mass(m, k);
      const double vnew = st.V[d] + dt * (LH[k] - F[k]) / mk;
      const double vc = 0.5 * (st.V[d] + vnew);
      e.kinetic += 0.5 * mk * vc * vc * dA;
      e.strain -= 0.5 * st.H[d] * LH[k] * dA;
      power -= F[k] * vc * dA;
    }
    if (n > 0) work += 0.5 * dt * (prev_power + power);
    prev_power = power;
    e.external_work = work;
    r.energy.samples.push_back(e);
    const double level = e.kinetic + e.strain;
    if (reference < 0.0) reference = level;
    const double budget = 10.0 * (reference + std::abs(work)) + 1e-300;
    if (!std::isfinite(level) || level > budget)
      throw SolverError("instability: energy grew more than tenfold without input work at t=" +
                        std::to_string(st.time) + " (dt may exceed the stable bound)");
  };
  for (int n = 0; n < r.steps; ++n) {
    if (cadence > 0 && n % cadence == 0) r.snapshots.push_back(s);
    const Eigen::VectorXd F = m.interior_F(s.time);
    const Eigen::VectorXd LH = multiply(m.L_i, s.H, m.config.threads);
    record(s, n, F, LH);
    s = step(s, m, dt);
  }
  const Eigen::VectorXd F = m.interior_F(s.time);
  const Eigen::VectorXd LH = multiply(m.L_i, s.H, m.config.threads);
  record(s, r.steps, F, LH);
  if (cadence > 0) r.snapshots.push_back(s);
  r.final_state = s;
  return r;
}

StaticSolution static_solve(const DiscreteModel& m, double t) {
  if (!m.has_displacement_edge())
    throw SolverError(
        "static problem is singular: with no displacement edge the rigid-body null space "
        "(W translation, plate rotations Psi_a = e3ab Omega_b^0 with linear W, in-plane "
        "translations U1/U2 and rotation with Omega3^0) is unconstrained");
  const int ni = static_cast<int>(m.interior_dofs.size());
  const int nt = static_cast<int>(m.traction_dofs.size());
  const int nu = ni + nt;
  std::vector<int> col_of(m.num_dofs(), -1);
  for (int k = 0; k < ni; ++k) col_of[m.interior_dofs[k]] = k;
  for (int k = 0; k < nt; ++k) col_of[m.traction_dofs[k]] = ni + k;

  Eigen::VectorXd Hd = Eigen::VectorXd::Zero(m.num_dofs());
  m.apply_displacement_data(Hd, t);

  std::vector<Eigen::Triplet<double>> trip;
  auto take = [&](const DiscreteModel::RowSparse& A, int row_offset) {
    for (int r = 0; r < A.outerSize(); ++r)
      for (DiscreteModel::RowSparse::InnerIterator it(A, r); it; ++it)
        if (col_of[it.col()] >= 0) trip.emplace_back(row_offset + r, col_of[it.col()], it.value());
  };
  take(m.L_i, 0);
  take(m.B_t, ni);
  Eigen::SparseMatrix<double> A(nu, nu);
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::VectorXd rhs(nu);
  rhs.head(ni) = m.interior_F(t) - m.L_i * Hd;
  if (nt > 0) rhs.tail(nt) = m.traction_F(t) - m.B_t * Hd;

  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw SolverError("static system factorization failed");
  Eigen::VectorXd u = lu.solve(rhs);
  for (int pass = 0; pass < 2; ++pass) u += lu.solve(Eigen::VectorXd(rhs - A * u));

  StaticSolution sol;
  sol.rhs_norm = rhs.size() ? rhs.cwiseAbs().maxCoeff() : 0.0;
  sol.residual = rhs.size() ? (A * u - rhs).cwiseAbs().maxCoeff() : 0.0;
  if (!std::isfinite(sol.residual) || sol.residual > 1e-9 * std::max(sol.rhs_norm, 1e-300))
    if (sol.rhs_norm > 0.0)
      throw SolverError("static solve residual " + std::to_string(sol.residual) +
                        " exceeds 1e-9 of the right-hand side");
  sol.H = Hd;
  for (int k = 0; k < ni; ++k) sol.H[m.interior_dofs[k]] = u[k];
  for (int k = 0; k < nt; ++k) sol.H[m.traction_dofs[k]] = u[ni + k];
  return sol;
}

PlateStrain nodal_strain(const DiscreteModel& m, const Eigen::VectorXd& H, int i, int j) {
  Vector9 d1 = Vector9::Zero(), d2 = Vector9::Zero();
  for (const auto& [o, w] : detail::first_derivative(i, m.nx, m.dx))
    d1 += w * H.segment<9>(9 * m.node(i + o, j));
  for (const auto& [o, w] : detail::first_derivative(j, m.ny, m.dy))
    d2 += w * H.segment<9>(9 * m.node(i, j + o));
  const PlateKinematics u = PlateKinematics::from_vector(H.segment<9>(9 * m.node(i, j)));
  return strain_from_kinematics(
      u, KinematicsGradient{PlateKinematics::from_vector(d1), PlateKinematics::from_vector(d2)});
}

namespace {

LoadValues loads_at(const DiscreteModel& m, int i, int j, double t) {
  return m.config.loads ? m.config.loads(m.x(i), m.y(j), t) : LoadValues{};
}

double trapezoid_weight(const DiscreteModel& m, int i, int j) {
  const double wx = (i == 0 || i == m.nx - 1) ? 0.5 : 1.0;
  const double wy = (j == 0 || j == m.ny - 1) ? 0.5 : 1.0;
  return wx * wy * m.cell_area();
}

// Terms of the functional that do not involve the resultants: work of face
// loads and body sources, plus prescribed tractions on traction edges.
double load_terms(const DiscreteModel& m, const Eigen::VectorXd& H, int i, int j, double t) {
  const int n = m.node(i, j);
  const LoadValues l = loads_at(m, i, j, t);
  const PlateKinematics u = PlateKinematics::from_vector(H.segment<9>(9 * n));
  double s = trapezoid_weight(m, i, j) * (l.p * u.W + l.v * u.Omega3_0);
  if (m.config.source)
    s += trapezoid_weight(m, i, j) * m.config.source(m.x(i), m.y(j), t).dot(H.segment<9>(9 * n));
  if (m.node_kind[n] == NodeKind::kTraction) {
    const int edge = i == 0 ? kLeft : i == m.nx - 1 ? kRight : j == 0 ? kBottom : kTop;
    const auto& data = m.config.edges[edge].data;
    if (data) {
      const bool vertical = edge == kLeft || edge == kRight;
      const int along = vertical ? j : i;
      const int count = vertical ? m.ny : m.nx;
      const double ds = (vertical ? m.dy : m.dx) * ((along == 0 || along == count - 1) ? 0.5 : 1.0);
      s += ds * data(m.x(i), m.y(j), t).dot(H.segment<9>(9 * n));
    }
  }
  return s;
}

}  // namespace

Eigen::VectorXd nodal_stress(const DiscreteModel& m, const Eigen::VectorXd& H, double t) {
  Eigen::VectorXd out(kNumResultants * m.num_nodes());
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      out.segment<kNumResultants>(kNumResultants * m.node(i, j)) =
          stress_from_strain(nodal_strain(m, H, i, j), m.tc, loads_at(m, i, j, t)).to_vector();
  return out;
}

double hpr_functional(const DiscreteModel& m, const Eigen::VectorXd& H, double t) {
  // On the stiffness relation S = C E + P l the integrand reduces to
  //   -E.C E / 2 - P l . E + p W + v Omega3_0 + (b . P l / 2 + Phi(0)),
  // with b = dPhi/dS(0). The derivative pairings use the quadrature induced by
  // the interior stencils, so the discrete equations are its stationarity conditions.
  const MaterialParams& mp = m.config.material;
  const double h = m.config.h;
  const Eigen::VectorXd LH = multiply(m.L_i, H, m.config.threads);
  const Eigen::VectorXd F = m.interior_F(t);
  double theta = 0.0;
  for (std::size_t k = 0; k < m.interior_dofs.size(); ++k) {
    const double v = H[m.interior_dofs[k]];
    theta += (0.5 * v * LH[k] - v * F[k]) * m.cell_area();
  }
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const LoadValues l = loads_at(m, i, j, t);
      const Vector20 Pl = stress_from_strain(PlateStrain{}, m.tc, l).to_vector();
      const Vector20 b = strain_from_stress(PlateStress{}, mp, h, l, -l.p).to_vector();
      const double phi0 = plate_energy_density(PlateStress{}, mp, h, l, -l.p);
      theta += trapezoid_weight(m, i, j) * (0.5 * b.dot(Pl) + phi0);
    }
  return theta;
}

double hpr_functional_nodal(const DiscreteModel& m, const Eigen::VectorXd& H, double t) {
  const MaterialParams& mp = m.config.material;
  const double h = m.config.h;
  double theta = 0.0;
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const LoadValues l = loads_at(m, i, j, t);
      const PlateStrain e = nodal_strain(m, H, i, j);
      const Vector20 S = stress_from_strain(e, m.tc, l).to_vector();
      const Vector20 E = e.to_vector();
      // Phi is quadratic with dPhi/dS = E on the stiffness relation, so
      // Phi(S) = S.E/2 + S.dPhi/dS(0)/2 + Phi(0), free of compliance cancellation.
      const Vector20 b = strain_from_stress(PlateStress{}, mp, h, l, -l.p).to_vector();
      const double phi0 = plate_energy_density(PlateStress{}, mp, h, l, -l.p);
      const double phi = 0.5 * S.dot(E) + 0.5 * b.dot(S) + phi0;
      theta += trapezoid_weight(m, i, j) * (phi - S.dot(E));
      theta += load_terms(m, H, i, j, t);
    }
  return theta;
}

double hpr_functional(const DiscreteModel& m, const Eigen::VectorXd& H,
                      const Eigen::VectorXd& stress, double t) {
  const MaterialParams& mp = m.config.material;
  const double h = m.config.h;
  double theta = 0.0;
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const LoadValues l = loads_at(m, i, j, t);
      const Vector20 S = stress.segment<kNumResultants>(kNumResultants * m.node(i, j));
      const Vector20 E = nodal_strain(m, H, i, j).to_vector();
      const double phi = plate_energy_density(PlateStress::from_vector(S), mp, h, l, -l.p);
      theta += trapezoid_weight(m, i, j) * (phi - S.dot(E));
      theta += load_terms(m, H, i, j, t);
    }
  return theta;
}

}  // namespace cosserat_plate
