#pragma once

// Plate-level constitutive algebra: strain-displacement relation, stiffness
// and compliance forms, energy and work densities, and the polynomial
// through-thickness stress profiles that link plate resultants to 3D fields.

#include <array>
#include <functional>

#include "cosserat_plate/cosserat3d.hpp"
#include "cosserat_plate/material.hpp"
#include "cosserat_plate/plate_fields.hpp"

namespace cosserat_plate {

/// Plate strain from the kinematic fields and their first derivatives.
///
/// The microrotation terms carry the signs that make the relation the exact
/// adjoint of the flexural and extensional balance laws:
///   e_ab = Psi_b,a - e3ab Omega3,  omega_a = Psi_a - e3ab Omega_b^0,
///   omega*_a = W,a + e3ab Omega_b^0,  upsilon_ab = U_b,a - e3ab Omega3^0.
PlateStrain strain_from_kinematics(const PlateKinematics& u, const KinematicsGradient& grad);

/// Stiffness form: resultants from plate strain plus the load-coupled terms.
PlateStress stress_from_strain(const PlateStrain& e, const TechnicalConstants& tc,
                               const LoadValues& loads);

/// Resultants from kinematics (strain_from_kinematics followed by stress_from_strain).
/// Jointly linear in (u, grad, loads).
PlateStress stress_from_kinematics(const PlateKinematics& u, const KinematicsGradient& grad,
                                   const TechnicalConstants& tc, const LoadValues& loads);

/// Literal-coefficient stiffness relations, including
/// the strain relation with +e3ab signs. Used only by the coefficient diff report.
PlateStress stress_from_kinematics_printed(const PlateKinematics& u,
                                           const KinematicsGradient& grad,
                                           const TechnicalConstants& tc, const LoadValues& loads);

/// Compliance form E = dPhi/dS. `div_qs` supplies Q*_b,b where the bending
/// strains need it.
PlateStrain strain_from_stress(const PlateStress& s, const MaterialParams& mp, double h,
                               const LoadValues& loads, double div_qs);

/// Plate stress energy density Phi(S), including load coupling and pure load terms.
double plate_energy_density(const PlateStress& s, const MaterialParams& mp, double h,
                            const LoadValues& loads, double div_qs);

/// S . E
double internal_work_density(const PlateStress& s, const PlateStrain& e);

/// Reconstructs pointwise 3D stress and couple stress at scaled coordinate
/// zeta3 = 2 x3 / h in [-1, 1].
Stress3D thickness_profiles(const PlateStress& s, const LoadValues& loads, double h,
                            double zeta3);

using ProfileEvaluator = std::function<Stress3D(double zeta3)>;

/// Weighted thickness integrals defining the resultants, by 8-point Gauss-Legendre.
PlateStress resultants_from_profiles(const ProfileEvaluator& profile, double h);

/// 8-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::array<double, 8> nodes;
  std::array<double, 8> weights;
};
const GaussRule& gauss_legendre_8();

}  // namespace cosserat_plate
