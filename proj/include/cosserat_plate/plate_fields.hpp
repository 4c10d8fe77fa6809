#pragma once

#include <functional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cosserat_plate/material.hpp"

namespace cosserat_plate {

inline constexpr int kNumKinematicFields = 9;
inline constexpr int kNumFlexuralFields = 6;
inline constexpr int kNumExtensionalFields = 3;
inline constexpr int kNumResultants = 20;

using Vector9 = Eigen::Matrix<double, kNumKinematicFields, 1>;
using Vector20 = Eigen::Matrix<double, kNumResultants, 1>;

/// Mid-plane kinematic fields. The flexural block is (Psi1, Psi2, W, Omega3,
/// Omega1_0, Omega2_0); the extensional block is (U1, U2, Omega3_0).
struct PlateKinematics {
  double Psi1 = 0.0;
  double Psi2 = 0.0;
  double W = 0.0;
  double Omega3 = 0.0;
  double Omega1_0 = 0.0;
  double Omega2_0 = 0.0;
  double U1 = 0.0;
  double U2 = 0.0;
  double Omega3_0 = 0.0;

  Vector9 to_vector() const;
  static PlateKinematics from_vector(const Vector9& v);
  static std::string_view field_name(int index);
};

/// First spatial derivatives d/dx1 and d/dx2 of every kinematic field.
struct KinematicsGradient {
  PlateKinematics d1;
  PlateKinematics d2;
};

/// Plate strain set. Matrix entries (a, b) hold the component with indices (a+1, b+1).
struct PlateStrain {
  Eigen::Matrix2d e = Eigen::Matrix2d::Zero();
  Eigen::Vector2d omega = Eigen::Vector2d::Zero();
  Eigen::Vector2d omega_s = Eigen::Vector2d::Zero();
  Eigen::Matrix2d tau0 = Eigen::Matrix2d::Zero();
  Eigen::Vector2d tau3 = Eigen::Vector2d::Zero();
  Eigen::Matrix2d upsilon = Eigen::Matrix2d::Zero();
  Eigen::Vector2d tau3_0 = Eigen::Vector2d::Zero();

  /// Packed as [e, omega, omega_s, tau0, tau3, upsilon, tau3_0], row-major matrices.
  Vector20 to_vector() const;
  static PlateStrain from_vector(const Vector20& v);
};

/// Plate stress resultants, packed in the order work-conjugate to PlateStrain:
/// [M, Q, Q_s, R, S_s, N, M_s].
struct PlateStress {
  Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
  Eigen::Vector2d Q = Eigen::Vector2d::Zero();
  Eigen::Vector2d Q_s = Eigen::Vector2d::Zero();
  Eigen::Matrix2d R = Eigen::Matrix2d::Zero();
  Eigen::Vector2d S_s = Eigen::Vector2d::Zero();
  Eigen::Matrix2d N = Eigen::Matrix2d::Zero();
  Eigen::Vector2d M_s = Eigen::Vector2d::Zero();

  Vector20 to_vector() const;
  static PlateStress from_vector(const Vector20& v);
  static std::string_view component_name(int index);
};

/// Face loads at one point: net pressure p, mean normal stress sigma0,
/// net twisting couple v and mean twisting couple t.
struct LoadValues {
  double p = 0.0;
  double sigma0 = 0.0;
  double v = 0.0;
  double t = 0.0;

  /// Builds the load set from top/bottom face data.
  static LoadValues from_faces(double sigma_top, double sigma_bottom, double mu_top,
                               double mu_bottom);

  Eigen::Vector4d to_vector() const { return {p, sigma0, v, t}; }
  static LoadValues from_vector(const Eigen::Vector4d& x) { return {x[0], x[1], x[2], x[3]}; }
};

/// Loads as functions of (x1, x2, time).
using LoadFunction = std::function<LoadValues(double, double, double)>;

struct InertiaSet {
  double I_o = 0.0;    // rho h^3 / 12
  double rho_o = 0.0;  // rho h
  double I_o1 = 0.0;   // k3* J1 h
  double I_o2 = 0.0;   // k3* J2 h
  double J3_s = 0.0;   // k4* J3 h^3
  double I_o3 = 0.0;   // J3 h

  /// Diagonal mass of the flexural block (Psi1, Psi2, W, Omega3, Omega1_0, Omega2_0).
  Eigen::Matrix<double, 6, 1> flexural_mass() const;
  /// Diagonal mass of the extensional block (U1, U2, Omega3_0).
  Eigen::Vector3d extensional_mass() const;
};

inline constexpr double kK1Star = 4.0 / 5.0;
inline constexpr double kK2Star = 8.0 / 5.0;
inline constexpr double kK3Star = 5.0 / 6.0;
inline constexpr double kK4Star = 25.0 / 32.0;
/// Value of k4* obtained by integrating J3 phi3_dot^2 over the cubic phi3 profile.
inline constexpr double kK4StarProfile = 85.0 / 1008.0;

InertiaSet inertia_constants(const MaterialParams& p, double h, double k4_star = kK4Star);

struct WeightedMicrorotation {
  double Omega1_0 = 0.0;
  double Omega2_0 = 0.0;
  double Omega3 = 0.0;
  double Omega3_0 = 0.0;
};

/// Weighted averages of the microrotation amplitudes Theta_a^0, Theta_3, Theta_3^0.
WeightedMicrorotation weighted_from_microrotation(double theta1_0, double theta2_0,
                                                  double theta3_0, double theta3, double h);

/// Bilinear kinetic density K Uddot . U (acceleration times value).
double kinetic_density(const PlateKinematics& acceleration, const PlateKinematics& value,
                       const InertiaSet& inertia);

/// Quadratic kinetic energy density 1/2 Udot . K Udot.
double kinetic_energy_density(const PlateKinematics& velocity, const InertiaSet& inertia);

}  // namespace cosserat_plate
