#pragma once

// Pointwise 3D micropolar constitutive maps. Tensors are stored so that entry
// (j, i) holds the component sigma_ji; no symmetry is assumed anywhere.

#include <Eigen/Dense>

#include "cosserat_plate/material.hpp"

namespace cosserat_plate {

struct Strain3D {
  Eigen::Matrix3d gamma = Eigen::Matrix3d::Zero();  // micropolar strain
  Eigen::Matrix3d chi = Eigen::Matrix3d::Zero();    // torsion [1/m]
};

struct Stress3D {
  Eigen::Matrix3d sigma = Eigen::Matrix3d::Zero();  // stress [Pa]
  Eigen::Matrix3d mu_c = Eigen::Matrix3d::Zero();   // couple stress [Pa m]
};

struct EnergyDensities3D {
  double W = 0.0;              // strain energy density
  double Phi = 0.0;            // complementary (stress) energy density
  double internal_work = 0.0;  // sigma:gamma + mu:chi
};

Stress3D stress_from_strain_3d(const Strain3D& s, const MaterialParams& p);

Strain3D strain_from_stress_3d(const Stress3D& t, const ReciprocalParams& r);

/// Strain energy W(gamma, chi) in the Nowacki form.
double strain_energy_3d(const Strain3D& s, const MaterialParams& p);

/// Stress energy Phi(sigma, mu) written with the reciprocal moduli.
double stress_energy_3d(const Stress3D& t, const ReciprocalParams& r);

EnergyDensities3D energy_densities_3d(const Strain3D& s, const MaterialParams& p);

}  // namespace cosserat_plate
