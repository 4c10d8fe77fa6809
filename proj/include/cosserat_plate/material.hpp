#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosserat_plate {

/// Raised when an operation receives inadmissible material data or geometry.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The six Cosserat moduli together with mass density and microinertia (SI units).
struct MaterialParams {
  double lambda = 0.0;   // [Pa]
  double mu = 0.0;       // [Pa]
  double alpha = 0.0;    // [Pa]
  double beta = 0.0;     // [N]
  double gamma = 0.0;    // [N]
  double epsilon = 0.0;  // [N]
  double rho = 0.0;      // [kg/m^3]
  std::array<double, 3> J{0.0, 0.0, 0.0};  // [kg/m]
};

/// List of violated admissibility conditions. Empty means admissible.
struct ValidationReport {
  std::vector<std::string> violations;

  bool admissible() const { return violations.empty(); }
  bool contains(const std::string& condition) const;
};

/// Checks positive definiteness of the strain energy plus positivity of the inertia.
/// Never throws; NaN entries fail every comparison they take part in.
ValidationReport validate_parameters(const MaterialParams& p);

/// Shear correction convention for kappa1^2.
enum class ShearCorrection {
  kReissner,  // kappa1^2 = 5/6
  kMindlin,   // kappa1^2 = pi^2/12
};

/// Engineering constants for a plate of thickness h.
struct TechnicalConstants {
  double E = 0.0;          // Young's modulus [Pa]
  double nu = 0.0;         // Poisson ratio
  double G = 0.0;          // shear modulus [Pa]
  double D = 0.0;          // flexural rigidity [N m]
  double l_t = 0.0;        // characteristic length for torsion [m]
  double l_b = 0.0;        // characteristic length for bending [m]
  double N = 0.0;          // coupling number
  double Psi_polar = 0.0;  // polar ratio 2 gamma / (beta + 2 gamma)
  double kappa1_sq = 5.0 / 6.0;
  double kappa2_sq = 5.0 / 3.0;
  double h = 0.0;          // thickness the constants were built for [m]
};

/// Reciprocal (compliance) moduli of the inverted 3D constitutive law.
struct ReciprocalParams {
  double mu_p = 0.0;
  double alpha_p = 0.0;
  double gamma_p = 0.0;
  double epsilon_p = 0.0;
  double lambda_p = 0.0;
  double beta_p = 0.0;
};

TechnicalConstants technical_constants(const MaterialParams& p, double h,
                                       ShearCorrection shear = ShearCorrection::kReissner);

ReciprocalParams reciprocal_constants(const MaterialParams& p);

/// Throws DomainError listing all violations when p is not admissible.
void require_admissible(const MaterialParams& p);

/// Inverse of technical_constants for the micropolar part: moduli with the
/// given lambda, mu, coupling number N, lengths l_t, l_b and polar ratio Psi.
MaterialParams material_from_technical(double lambda, double mu, double N, double l_t,
                                       double l_b, double Psi, double rho,
                                       const std::array<double, 3>& J);

}  // namespace cosserat_plate
