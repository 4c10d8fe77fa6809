#pragma once

// Finite-difference discretization of the coupled flexural + extensional
// systems on a uniform rectangular grid, with explicit leapfrog time stepping,
// static solves and energy bookkeeping.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "cosserat_plate/material.hpp"
#include "cosserat_plate/operators.hpp"
#include "cosserat_plate/plate_fields.hpp"

namespace cosserat_plate {

/// Invalid model configuration (grid size, geometry, material).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Solver or integrator failure.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-node 9-vector in PlateKinematics order, as a function of (x1, x2, t).
using NodalFunction = std::function<Vector9(double, double, double)>;

enum class EdgeKind { kDisplacement, kTraction };
enum Edge { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };

/// Displacement edges prescribe all nine fields; traction edges prescribe
/// (Pi_o1, Pi_o2, Pi_o3, M*_o3, M_o1, M_o2, Sigma_o1, Sigma_o2, Upsilon_o3).
/// Empty data means zero.
struct EdgeCondition {
  EdgeKind kind = EdgeKind::kDisplacement;
  NodalFunction data;
};

struct ModelConfig {
  MaterialParams material;
  double a = 1.0;
  double b = 1.0;
  double h = 0.1;
  int nx = 17;
  int ny = 17;
  ShearCorrection shear = ShearCorrection::kReissner;
  double k4_star = kK4Star;
  /// Replaces the constants derived from `material` (e.g. an exact N = 0 build).
  std::optional<TechnicalConstants> constants;
  LoadFunction loads;  // empty: unloaded
  /// Extra body force per unit area added to the balance rows (manufactured solutions).
  NodalFunction source;
  std::array<EdgeCondition, 4> edges;
  int threads = 1;
};

enum class NodeKind { kInterior, kDisplacement, kTraction };

struct DiscreteModel {
  ModelConfig config;
  TechnicalConstants tc;
  InertiaSet inertia;
  FlexuralOperator flexural;
  ExtensionalOperator extensional;
  TractionOperator traction;
  SymbolTables L9;      // block-diagonal 9x9 interior operator
  LoadTables loads9;    // 9-row load tables
  BoundaryTables T9;    // block-diagonal 9x9 boundary operator
  Vector9 mass;

  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  std::vector<NodeKind> node_kind;
  std::vector<Eigen::Vector2d> node_normal;  // outward normal for traction nodes
  std::vector<int> interior_dofs, traction_dofs, displacement_dofs;
  std::vector<int> traction_nodes, displacement_nodes;

  using RowSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  RowSparse L_i;  // interior rows over all dofs
  RowSparse B_t;  // traction rows over all dofs
  Eigen::SparseMatrix<double> B_tt;
  std::shared_ptr<Eigen::SparseLU<Eigen::SparseMatrix<double>>> boundary_solver;
  mutable double cached_stable_dt = 0.0;  // filled by stable_dt

  int num_nodes() const { return nx * ny; }
  int num_dofs() const { return 9 * nx * ny; }
  int node(int i, int j) const { return j * nx + i; }
  double x(int i) const { return i * dx; }
  double y(int j) const { return j * dy; }
  double cell_area() const { return dx * dy; }
  /// Number of unknowns (all dofs not fixed by displacement edges).
  int num_unknowns() const {
    return static_cast<int>(interior_dofs.size() + traction_dofs.size());
  }
  bool has_displacement_edge() const;

  /// Right-hand side pieces at time t: interior load vector F (rows of L_i)
  /// and traction data F* (rows of B_t); source enters F with a minus sign.
  Eigen::VectorXd interior_F(double t) const;
  Eigen::VectorXd traction_F(double t) const;
  /// Nodal values with displacement data written into the constrained dofs.
  void apply_displacement_data(Eigen::VectorXd& H, double t) const;
  /// Solves the traction rows for the traction dofs given the others.
  void solve_traction_dofs(Eigen::VectorXd& H, double t) const;
};

DiscreteModel assemble(const ModelConfig& config);

struct DiscreteState {
  Eigen::VectorXd H;          // nodal values, 9 per node
  Eigen::VectorXd V;          // velocity: half-step value V^{n-1/2} at interior dofs
  double time = 0.0;
  bool stability_warning = false;

  PlateKinematics at(int node) const;
};

/// Initial state from nodal displacement and velocity fields.
DiscreteState initial_state(const DiscreteModel& m, const NodalFunction& H0,
                            const NodalFunction& V0, double dt);

double stable_dt(const DiscreteModel& m, int iterations = 400);

/// Semi-discrete force M * acceleration at interior dofs: L H - F.
Eigen::VectorXd interior_force(const DiscreteModel& m, const Eigen::VectorXd& H, double t);

DiscreteState step(const DiscreteState& s, const DiscreteModel& m, double dt);

struct EnergySample {
  double t = 0.0;
  double kinetic = 0.0;
  double strain = 0.0;
  double external_work = 0.0;
  double total() const { return kinetic + strain - external_work; }
};

struct EnergyLog {
  std::vector<EnergySample> samples;
  double max_relative_drift() const;
};

struct SimulationResult {
  std::vector<DiscreteState> snapshots;
  EnergyLog energy;
  DiscreteState final_state;
  double dt = 0.0;
  int steps = 0;
};

/// Runs leapfrog to t_final; snapshots every `cadence` steps (0: none).
/// Throws SolverError when the total energy grows more than tenfold without input work.
SimulationResult simulate(const DiscreteModel& m, DiscreteState s, double t_final, double dt,
                          int cadence = 0);

/// Discrete strain energy 1/2 H_i . (-(L H)_i) dA over interior dofs.
double discrete_strain_energy(const DiscreteModel& m, const Eigen::VectorXd& H);

struct StaticSolution {
  Eigen::VectorXd H;
  double residual = 0.0;  // infinity norm of the assembled residual
  double rhs_norm = 0.0;  // infinity norm of the assembled right-hand side
};

/// Solves L H = F in the interior with the edge conditions at time t.
StaticSolution static_solve(const DiscreteModel& m, double t = 0.0);

/// Plate strain at a node from central (interior) / one-sided (edge) differences.
PlateStrain nodal_strain(const DiscreteModel& m, const Eigen::VectorXd& H, int i, int j);

/// Discrete HPR functional for a state whose resultants follow the stiffness
/// relation. Strain-stress pairings use the quadrature induced by the interior
/// stencils; admissible variations move interior dofs only.
double hpr_functional(const DiscreteModel& m, const Eigen::VectorXd& H, double t = 0.0);

/// Same state, but every pairing evaluated pointwise from nodal strains
/// (central / one-sided differences, trapezoidal rule). Consistent to O(dx^2).
double hpr_functional_nodal(const DiscreteModel& m, const Eigen::VectorXd& H, double t = 0.0);

/// Same with independently supplied nodal resultants (20 per node, PlateStress order).
double hpr_functional(const DiscreteModel& m, const Eigen::VectorXd& H,
                      const Eigen::VectorXd& stress, double t = 0.0);

/// Nodal resultants from the nodal strains (20 per node).
Eigen::VectorXd nodal_stress(const DiscreteModel& m, const Eigen::VectorXd& H, double t = 0.0);

}  // namespace cosserat_plate
