#pragma once

// Seeded oracle suites. Each check returns a measured value and the
// tolerance it is compared against; run_all collects them in order.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cosserat_plate/dynamics.hpp"

namespace cosserat_plate {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured metric
  double tolerance = 0.0;  // bound the metric is compared against
  std::string detail;
  double seconds = 0.0;
};

/// Random admissible material drawn in technical-constant space
/// (nu, N, l_t, l_b, Psi) so that every sample passes validate_parameters.
MaterialParams random_admissible_material(std::mt19937_64& rng);

CheckResult check_constitutive_round_trip(std::uint64_t seed, int samples = 1000);
CheckResult check_energy_positivity(std::uint64_t seed, int samples = 1000);
CheckResult check_plate_quadratic_form(std::uint64_t seed, int samples = 100);
CheckResult check_thickness_round_trip(std::uint64_t seed, int samples = 100);
CheckResult check_operator_oracle(std::uint64_t seed);

/// Near-classical material used by the classical-limit and HPR checks:
/// nu = 0.3, N = 1e-8, h = 0.1 on the unit square, uniform p = 1, all edges clamped.
ModelConfig classical_clamped_config(int n, int threads = 1);

/// Center deflection of a clamped square Reissner-Mindlin plate under uniform
/// p by central finite differences on an n x n grid (w, psi unknowns only).
double mindlin_fd_center_deflection(double D, double nu, double kGh, double a, double p, int n);

CheckResult check_classical_limit(int threads = 1);
CheckResult check_convergence(std::uint64_t seed, int threads = 1);
CheckResult check_energy_conservation(int threads = 1);
CheckResult check_hpr_stationarity(std::uint64_t seed, int threads = 1);
CheckResult check_dispersion_sanity(std::uint64_t seed, int samples = 10000);
/// Flexural zero-mode count at k = 0 for coupling number N (expected 1).
CheckResult check_zero_mode_count(double N);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int threads = 1;
};

std::vector<CheckResult> run_all(const VerifyOptions& opt,
                                 const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace cosserat_plate
