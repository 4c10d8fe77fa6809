#pragma once

// Constant-coefficient differential operators of the flexural and extensional
// plate systems, stored as coefficient tables of the derivative symbol
//   L(d) = sum_ab A_ab d_a d_b + sum_a B_a d_a + C.
// Sign convention: L H - F = M H_tt, where F collects the load terms.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cosserat_plate/material.hpp"
#include "cosserat_plate/plate_fields.hpp"

namespace cosserat_plate {

/// Second-order constant-coefficient operator in two variables.
struct SymbolTables {
  std::array<std::array<Eigen::MatrixXd, 2>, 2> second;  // A_ab
  std::array<Eigen::MatrixXd, 2> first;                  // B_a
  Eigen::MatrixXd zeroth;                                // C

  int size() const { return static_cast<int>(zeroth.rows()); }
  /// Real derivative symbol: d_a replaced by xi_a.
  Eigen::MatrixXd evaluate(double xi1, double xi2) const;
  /// Plane-wave stiffness A(k) = -L(i k), Hermitian and positive semidefinite.
  Eigen::MatrixXcd wave_stiffness(double k1, double k2) const;
};

/// Load terms of a governing system: F = -(sum_a G_a d_a loads + V loads),
/// with loads ordered (p, sigma0, v, t).
struct LoadTables {
  std::array<Eigen::Matrix<double, Eigen::Dynamic, 4>, 2> gradient;
  Eigen::Matrix<double, Eigen::Dynamic, 4> value;

  Eigen::VectorXd F(const LoadValues& loads, const LoadValues& d1_loads,
                    const LoadValues& d2_loads) const;
};

struct FlexuralOperator {
  TechnicalConstants tc;
  std::array<double, 14> k{};  // k1..k14 as listed with the governing system
  SymbolTables L;              // rows: Psi1, Psi2, W, Omega3, Omega1_0, Omega2_0 balances
  LoadTables loads;
  Eigen::Matrix<double, 6, 1> mass;

  Eigen::MatrixXd symbol(double xi1, double xi2) const { return L.evaluate(xi1, xi2); }
  Eigen::VectorXd F(const LoadValues& l, const LoadValues& d1, const LoadValues& d2) const {
    return loads.F(l, d1, d2);
  }
};

struct ExtensionalOperator {
  TechnicalConstants tc;
  std::array<double, 5> kappa{};  // kappa1..kappa5 (normalized form)
  SymbolTables L;                 // rows: U1, U2, Omega3_0 balances
  LoadTables loads;
  Eigen::Vector3d mass;

  Eigen::MatrixXd symbol(double xi1, double xi2) const { return L.evaluate(xi1, xi2); }
  Eigen::VectorXd F(const LoadValues& l, const LoadValues& d1, const LoadValues& d2) const {
    return loads.F(l, d1, d2);
  }
};

/// Boundary traction of one subsystem on an edge with outward normal n:
///   T(d; n) H = sum_a n_a (sum_b first[a][b] d_b H + zeroth[a] H),
/// and the condition T H = F*, F* = prescribed - sum_a n_a load[a] loads.
struct BoundaryTables {
  std::array<std::array<Eigen::MatrixXd, 2>, 2> first;
  std::array<Eigen::MatrixXd, 2> zeroth;
  std::array<Eigen::Matrix<double, Eigen::Dynamic, 4>, 2> load;

  int size() const { return static_cast<int>(zeroth[0].rows()); }
  Eigen::MatrixXd evaluate(double xi1, double xi2, double n1, double n2) const;
  Eigen::VectorXd F_star(double n1, double n2, const LoadValues& loads,
                         const Eigen::VectorXd& prescribed) const;
};

/// Flexural rows are (M_a1 n_a, M_a2 n_a, Q*_a n_a, S*_a n_a, R_a1 n_a, R_a2 n_a) and
/// prescribed data (Pi_o1, Pi_o2, Pi_o3, M*_o3, M_o1, M_o2); extensional rows are
/// (N_a1 n_a, N_a2 n_a, M*_a n_a) with data (Sigma_o1, Sigma_o2, Upsilon_o3).
struct TractionOperator {
  TechnicalConstants tc;
  BoundaryTables flexural;
  BoundaryTables extensional;
};

FlexuralOperator build_flexural(const TechnicalConstants& tc, const InertiaSet& inertia,
                                double h);
ExtensionalOperator build_extensional(const TechnicalConstants& tc, const InertiaSet& inertia,
                                      double h);
TractionOperator build_traction(const TechnicalConstants& tc, double h);

/// Coefficient table k1..k14 exactly as printed with the flexural system.
std::array<double, 14> printed_k(const TechnicalConstants& tc);
/// Coefficients kappa1..kappa5 exactly as printed with the extensional system.
std::array<double, 5> printed_kappa(const TechnicalConstants& tc);

/// Printed (normalized) symbols and flexural boundary operator.
Eigen::MatrixXd printed_flexural_symbol(const TechnicalConstants& tc, double xi1, double xi2);
Eigen::MatrixXd printed_extensional_symbol(const TechnicalConstants& tc, double xi1, double xi2);
Eigen::MatrixXd printed_flexural_traction(const TechnicalConstants& tc, double xi1, double xi2,
                                          double n1, double n2);

/// Row scaling that maps the physical operators onto the printed normalization.
double flexural_normalization(const TechnicalConstants& tc);
double extensional_normalization(const TechnicalConstants& tc);

struct OracleResult {
  double residual = 0.0;  // max-norm of the mismatch
  double scale = 0.0;     // max-norm of the balance-law terms
  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

/// Applies the operator tables to random polynomial fields (degree <= `degree`,
/// derivatives exact) and compares against the balance laws evaluated on the
/// resultants of stress_from_kinematics.
OracleResult operator_residual_oracle(const FlexuralOperator& op, std::uint64_t seed,
                                      int degree = 3, int samples = 16);
OracleResult operator_residual_oracle(const ExtensionalOperator& op, std::uint64_t seed,
                                      int degree = 3, int samples = 16);

struct CoefficientDiff {
  std::string entry;
  std::string paper_value_expr;
  double paper_value = 0.0;
  double oracle_value = 0.0;
  double abs_diff = 0.0;
};

/// Monomial-by-monomial comparison of the printed operators with the shipped
/// ones (normalized the same way).
std::vector<CoefficientDiff> coefficient_diff(const TechnicalConstants& tc);
std::string coefficient_diff_csv(const std::vector<CoefficientDiff>& rows);

}  // namespace cosserat_plate
