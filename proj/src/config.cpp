#include "cosserat_plate/config.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace cosserat_plate {

using nlohmann::json;

namespace {

const std::array<const char*, 4> kEdgeNames{"left", "right", "bottom", "top"};
const std::array<const char*, 4> kLoadNames{"p", "sigma0", "v", "t"};

double number(const json& j, const std::string& key, const std::string& where, double fallback,
              bool required = false) {
  if (!j.contains(key)) {
    if (required) throw ConfigError(where + "." + key + ": missing required number");
    return fallback;
  }
  if (!j.at(key).is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

int integer(const json& j, const std::string& key, const std::string& where, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return j.at(key).get<int>();
}

const json& object(const json& j, const std::string& key, const std::string& where) {
  static const json empty = json::object();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_object()) throw ConfigError(where + "." + key + ": expected an object");
  return j.at(key);
}

std::vector<double> numbers(const json& j, const std::string& key, const std::string& where,
                            const std::vector<double>& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_array()) throw ConfigError(where + "." + key + ": expected an array");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Preset parse_preset(const json& j, const std::string& where) {
  Preset p;
  if (j.is_number()) {
    p.amplitude = j.get<double>();
    return p;
  }
  if (!j.is_object()) throw ConfigError(where + ": expected a number or preset object");
  if (j.contains("type")) {
    if (!j.at("type").is_string()) throw ConfigError(where + ".type: expected a string");
    p.type = j.at("type").get<std::string>();
  }
  if (p.type != "constant" && p.type != "gaussian-pulse" && p.type != "sinusoidal")
    throw ConfigError(where + ".type: unknown preset '" + p.type +
                      "' (constant | gaussian-pulse | sinusoidal)");
  p.amplitude = number(j, j.contains("value") ? "value" : "amplitude", where, 0.0);
  p.x0 = number(j, "x0", where, p.x0);
  p.y0 = number(j, "y0", where, p.y0);
  p.width = number(j, "width", where, p.width);
  p.t0 = number(j, "t0", where, p.t0);
  p.duration = number(j, "duration", where, p.duration);
  p.m = integer(j, "m", where, p.m);
  p.n = integer(j, "n", where, p.n);
  p.omega = number(j, "omega", where, p.omega);
  p.phase = number(j, "phase", where, p.phase);
  if (p.type == "gaussian-pulse" && !(p.width > 0.0))
    throw ConfigError(where + ".width: must be positive");
  if (p.duration < 0.0) throw ConfigError(where + ".duration: must be non-negative");
  return p;
}

std::map<std::string, Preset> parse_field_presets(const json& j, const std::string& where) {
  std::map<std::string, Preset> out;
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (int f = 0; f < kNumKinematicFields; ++f)
      if (PlateKinematics::field_name(f) == key) known = true;
    if (!known) throw ConfigError(where + "." + key + ": unknown kinematic field");
    out[key] = parse_preset(value, where + "." + key);
  }
  return out;
}

}  // namespace

double Preset::operator()(double x, double y, double t, double a, double b) const {
  using std::numbers::pi;
  if (type == "constant") return amplitude;
  if (type == "gaussian-pulse") {
    const double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
    double g = amplitude * std::exp(-r2 / (2.0 * width * width));
    if (duration > 0.0) g *= std::exp(-((t - t0) / duration) * ((t - t0) / duration));
    return g;
  }
  return amplitude * std::sin(m * pi * x / a) * std::sin(n * pi * y / b) *
         std::cos(omega * t + phase);
}

MaterialParams parse_material(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  MaterialParams p;
  p.lambda = number(j, "lambda", where, 0.0, true);
  p.mu = number(j, "mu", where, 0.0, true);
  p.alpha = number(j, "alpha", where, 0.0, true);
  p.beta = number(j, "beta", where, 0.0, true);
  p.gamma = number(j, "gamma", where, 0.0, true);
  p.epsilon = number(j, "epsilon", where, 0.0, true);
  p.rho = number(j, "rho", where, 0.0, true);
  if (!j.contains("J")) throw ConfigError(where + ".J: missing required array of 3 numbers");
  const auto J = numbers(j, "J", where, {});
  if (J.size() != 3) throw ConfigError(where + ".J: expected 3 numbers");
  p.J = {J[0], J[1], J[2]};
  return p;
}

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace

MaterialParams load_material_file(const std::filesystem::path& path) {
  return parse_material(read_json(path), path.string());
}

RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  RunConfig rc;
  rc.source = j;
  if (!j.contains("material")) throw ConfigError("material: missing (path or inline object)");
  if (j.at("material").is_string()) {
    std::filesystem::path mp = j.at("material").get<std::string>();
    if (mp.is_relative()) mp = base_dir / mp;
    rc.material_path = mp.string();
    rc.material = load_material_file(mp);
  } else {
    rc.material = parse_material(j.at("material"), "material");
  }

  const json& g = object(j, "geometry", "config");
  rc.a = number(g, "a", "geometry", rc.a);
  rc.b = number(g, "b", "geometry", rc.b);
  rc.h = number(g, "h", "geometry", rc.h);
  if (!(rc.a > 0.0) || !(rc.b > 0.0) || !(rc.h > 0.0))
    throw ConfigError("geometry: a, b, h must be positive");

  const json& grid = object(j, "grid", "config");
  rc.nx = integer(grid, "nx", "grid", rc.nx);
  rc.ny = integer(grid, "ny", "grid", rc.ny);
  if (rc.nx < 5 || rc.ny < 5) throw ConfigError("grid: nx,ny >= 5 required");

  const json& time = object(j, "time", "config");
  rc.time.t_final = number(time, "t_final", "time", rc.time.t_final);
  if (time.contains("dt") && !time.at("dt").is_null()) {
    rc.time.dt = number(time, "dt", "time", 0.0);
    if (!(*rc.time.dt > 0.0)) throw ConfigError("time.dt: must be positive");
  }
  rc.time.cadence = integer(time, "cadence", "time", rc.time.cadence);
  if (!(rc.time.t_final > 0.0)) throw ConfigError("time.t_final: must be positive");
  if (rc.time.cadence < 0) throw ConfigError("time.cadence: must be non-negative");

  const json& loads = object(j, "loads", "config");
  for (const auto& [key, value] : loads.items()) {
    bool known = false;
    for (const char* name : kLoadNames) known = known || key == name;
    if (!known) throw ConfigError("loads." + key + ": unknown load (p | sigma0 | v | t)");
    rc.loads[key] = parse_preset(value, "loads." + key);
  }

  const json& bc = object(j, "bc", "config");
  for (const auto& [key, value] : bc.items()) {
    int e = -1;
    for (int k = 0; k < 4; ++k)
      if (key == kEdgeNames[k]) e = k;
    if (e < 0) throw ConfigError("bc." + key + ": unknown edge (left | right | bottom | top)");
    if (!value.is_string()) throw ConfigError("bc." + key + ": expected a string");
    std::string kind = value.get<std::string>();
    if (kind == "displacement") kind = "clamped";
    if (kind == "traction") kind = "free";
    if (kind != "clamped" && kind != "free")
      throw ConfigError("bc." + key + ": unknown condition '" + kind +
                        "' (clamped | free | displacement | traction)");
    rc.bc[e] = kind;
  }

  const json& init = object(j, "initial", "config");
  rc.initial_displacement =
      parse_field_presets(object(init, "displacement", "initial"), "initial.displacement");
  rc.initial_velocity = parse_field_presets(object(init, "velocity", "initial"), "initial.velocity");

  const json& opt = object(j, "options", "config");
  if (opt.contains("shear")) {
    const std::string s = opt.at("shear").is_string() ? opt.at("shear").get<std::string>() : "";
    if (s == "reissner") rc.shear = ShearCorrection::kReissner;
    else if (s == "mindlin") rc.shear = ShearCorrection::kMindlin;
    else throw ConfigError("options.shear: expected \"reissner\" or \"mindlin\"");
  }
  rc.k4_star = number(opt, "k4_star", "options", rc.k4_star);
  rc.threads = integer(opt, "threads", "options", rc.threads);
  if (rc.threads < 1) throw ConfigError("options.threads: must be >= 1");

  const json& d = object(j, "dispersion", "config");
  rc.dispersion.k_min = number(d, "k_min", "dispersion", rc.dispersion.k_min);
  rc.dispersion.k_split = number(d, "k_split", "dispersion", rc.dispersion.k_split);
  rc.dispersion.k_max = number(d, "k_max", "dispersion", rc.dispersion.k_max);
  rc.dispersion.n_log = integer(d, "n_log", "dispersion", rc.dispersion.n_log);
  rc.dispersion.n_lin = integer(d, "n_lin", "dispersion", rc.dispersion.n_lin);
  if (d.contains("modes")) rc.dispersion.modes = d.at("modes").get<bool>();
  if (d.contains("directions")) {
    rc.dispersion.directions.clear();
    for (const auto& v : d.at("directions")) {
      const std::string name = v.get<std::string>();
      if (name != "x1" && name != "x2" && name != "diagonal")
        throw ConfigError("dispersion.directions: unknown direction '" + name + "'");
      rc.dispersion.directions.push_back(name);
    }
  }
  if (!(rc.dispersion.k_min > 0.0) || !(rc.dispersion.k_split >= rc.dispersion.k_min) ||
      !(rc.dispersion.k_max >= rc.dispersion.k_split))
    throw ConfigError("dispersion: need 0 < k_min <= k_split <= k_max");

  const json& s = object(j, "sweep", "config");
  rc.sweep.N = numbers(s, "N", "sweep", rc.sweep.N);
  rc.sweep.l_t = numbers(s, "l_t", "sweep", rc.sweep.l_t);
  rc.sweep.l_b = numbers(s, "l_b", "sweep", rc.sweep.l_b);
  rc.sweep.Psi = numbers(s, "Psi", "sweep", rc.sweep.Psi);
  rc.sweep.k = numbers(s, "k", "sweep", rc.sweep.k);
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_json(path), path.parent_path().empty() ? "." : path.parent_path());
}

ModelConfig to_model_config(const RunConfig& rc) {
  ModelConfig m;
  m.material = rc.material;
  m.a = rc.a;
  m.b = rc.b;
  m.h = rc.h;
  m.nx = rc.nx;
  m.ny = rc.ny;
  m.shear = rc.shear;
  m.k4_star = rc.k4_star;
  m.threads = rc.threads;
  if (!rc.loads.empty()) {
    const auto loads = rc.loads;
    const double a = rc.a, b = rc.b;
    m.loads = [loads, a, b](double x, double y, double t) {
      LoadValues l;
      auto get = [&](const char* k) {
        const auto it = loads.find(k);
        return it == loads.end() ? 0.0 : it->second(x, y, t, a, b);
      };
      l.p = get("p");
      l.sigma0 = get("sigma0");
      l.v = get("v");
      l.t = get("t");
      return l;
    };
  }
  for (int e = 0; e < 4; ++e)
    m.edges[e].kind = rc.bc[e] == "clamped" ? EdgeKind::kDisplacement : EdgeKind::kTraction;
  return m;
}

NodalFunction initial_field(const RunConfig& rc, const std::map<std::string, Preset>& presets) {
  if (presets.empty()) return nullptr;
  const double a = rc.a, b = rc.b;
  return [presets, a, b](double x, double y, double) {
    Vector9 v = Vector9::Zero();
    for (int f = 0; f < kNumKinematicFields; ++f) {
      const auto it = presets.find(std::string(PlateKinematics::field_name(f)));
      if (it != presets.end()) v[f] = it->second(x, y, 0.0, a, b);
    }
    return v;
  };
}

std::string config_hash(const RunConfig& rc) {
  // FNV-1a over the canonical dump (keys sorted by nlohmann::json).
  std::uint64_t hsh = 1469598103934665603ULL;
  for (unsigned char c : rc.source.dump()) {
    hsh ^= c;
    hsh *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << hsh;
  return os.str();
}

}  // namespace cosserat_plate
