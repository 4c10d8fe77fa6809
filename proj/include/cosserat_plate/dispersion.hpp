#pragma once

// Plane-wave analysis H = h exp(i(k.x - w t)) of the homogeneous systems:
// A(k) h = w^2 M h with A(k) = -L(i k).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cosserat_plate/operators.hpp"

namespace cosserat_plate {

struct BranchSet {
  std::vector<double> omega;  // ascending, >= 0
  Eigen::MatrixXcd modes;     // columns: mass-normalized mode shapes (optional)
};

/// Branches of one subsystem at wavevector (k1, k2). Eigenvalues below
/// -1e-10 (relative to the largest) raise DomainError ("non-conservative symbol").
BranchSet branches(const SymbolTables& L, const Eigen::VectorXd& mass, double k1, double k2,
                   bool with_modes = false);

struct DispersionSample {
  std::string direction;
  Eigen::Vector2d xi;
  std::vector<double> flexural;     // 6 branches
  std::vector<double> extensional;  // 3 branches
  Eigen::MatrixXcd flexural_modes;
  Eigen::MatrixXcd extensional_modes;
};

struct DispersionResult {
  std::vector<DispersionSample> samples;
};

struct WaveDirection {
  std::string name;
  Eigen::Vector2d unit;
};

/// Axes and diagonal.
std::vector<WaveDirection> default_directions();

/// Wavenumber magnitudes: `n_log` log-spaced in [k_min, k_split) followed by
/// `n_lin` linearly spaced in [k_split, k_max]; always starts with 0.
std::vector<double> wavenumber_samples(double k_min, double k_split, double k_max, int n_log,
                                       int n_lin);

DispersionResult dispersion_curves(const FlexuralOperator& flexural,
                                   const ExtensionalOperator& extensional,
                                   const std::vector<WaveDirection>& directions,
                                   const std::vector<double>& magnitudes, bool with_modes = false);

struct CutoffResult {
  std::vector<double> flexural;
  std::vector<double> extensional;
  int flexural_zero_modes = 0;
  int extensional_zero_modes = 0;
  std::vector<std::string> flexural_zero_fields;    // dominant field of each zero mode
  std::vector<std::string> extensional_zero_fields;
};

/// Frequencies at k = 0. A mode counts as zero when w^2 <= zero_tol * max(1, largest w^2).
CutoffResult cutoff_frequencies(const FlexuralOperator& flexural,
                                const ExtensionalOperator& extensional, double zero_tol = 1e-10);

/// CSV rows (direction, |xi|, branch, omega, subsystem).
std::string dispersion_csv(const DispersionResult& r);

/// Classical Mindlin plate branches (shear-horizontal, then the coupled pair)
/// for shear stiffness kGh, bending stiffness D, rotary inertia I and mass rho h.
std::vector<double> mindlin_branches(double D, double nu, double kGh, double I, double rho_h,
                                     double k);

}  // namespace cosserat_plate
