#pragma once

// JSON run configuration: material file, geometry, grid, time controls,
// analytic load presets, edge conditions, dispersion and sweep settings.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosserat_plate/dispersion.hpp"
#include "cosserat_plate/dynamics.hpp"

namespace cosserat_plate {

/// Analytic scalar field f(x1, x2, t).
struct Preset {
  std::string type = "constant";  // constant | gaussian-pulse | sinusoidal
  double amplitude = 0.0;
  // gaussian-pulse
  double x0 = 0.5, y0 = 0.5, width = 0.1, t0 = 0.0, duration = 0.0;
  // sinusoidal: amplitude * sin(m pi x / a) sin(n pi y / b) cos(omega t + phase)
  int m = 1, n = 1;
  double omega = 0.0, phase = 0.0;

  double operator()(double x, double y, double t, double a, double b) const;
};

struct TimeControls {
  double t_final = 1.0;
  std::optional<double> dt;  // default: stable_dt
  int cadence = 0;           // snapshot every `cadence` steps; 0 = final only
};

struct DispersionControls {
  double k_min = 0.1, k_split = 10.0, k_max = 100.0;
  int n_log = 20, n_lin = 40;
  std::vector<std::string> directions{"x1", "x2", "diagonal"};
  bool modes = false;
};

struct SweepControls {
  std::vector<double> N{0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<double> l_t{0.05};
  std::vector<double> l_b{0.04};
  std::vector<double> Psi{1.0};
  std::vector<double> k{0.0, 1.0, 10.0, 100.0};
};

struct RunConfig {
  std::string material_path;  // empty when given inline
  MaterialParams material;
  double a = 1.0, b = 1.0, h = 0.1;
  int nx = 33, ny = 33;
  TimeControls time;
  std::map<std::string, Preset> loads;  // keys p, sigma0, v, t
  std::array<std::string, 4> bc{"clamped", "clamped", "clamped", "clamped"};
  std::map<std::string, Preset> initial_displacement;  // keys: field names
  std::map<std::string, Preset> initial_velocity;
  ShearCorrection shear = ShearCorrection::kReissner;
  double k4_star = kK4Star;
  int threads = 1;
  DispersionControls dispersion;
  SweepControls sweep;
  nlohmann::json source;  // parsed document (for echo / hashing)
};

/// Reads a material file with keys lambda, mu, alpha, beta, gamma, epsilon, rho, J.
MaterialParams parse_material(const nlohmann::json& j, const std::string& where = "material");
MaterialParams load_material_file(const std::filesystem::path& path);

/// Parses and validates a run config; relative material paths resolve
/// against the config file's directory. Throws ConfigError naming the field.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

/// Model configuration for the discretization.
ModelConfig to_model_config(const RunConfig& rc);

/// Nodal initial fields from the presets (time argument ignored).
NodalFunction initial_field(const RunConfig& rc, const std::map<std::string, Preset>& presets);

/// Short stable hash of the config document (hex).
std::string config_hash(const RunConfig& rc);

}  // namespace cosserat_plate
