#pragma once

// CSV / JSON writers. Every file starts with a header carrying the config
// hash and library version ("# ..." lines for CSV, a "meta" object for JSON).

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cosserat_plate/dynamics.hpp"

namespace cosserat_plate {

inline constexpr const char* kVersion = "0.1.0";

struct OutputHeader {
  std::string config_hash;
  std::string kind;  // snapshot | energy | dispersion | ...
};

void write_csv_header(std::ostream& os, const OutputHeader& h);

/// Columns x1, x2 followed by the nine kinematic fields; 17 significant digits.
void write_snapshot_csv(std::ostream& os, const DiscreteModel& m, const Eigen::VectorXd& H,
                        const OutputHeader& h, double time);

void write_energy_csv(std::ostream& os, const EnergyLog& log, const OutputHeader& h);

/// Adds {"meta": {config_hash, version, kind}} to the document.
nlohmann::json with_meta(nlohmann::json doc, const OutputHeader& h);

/// Writes text to dir/name, creating dir; throws SolverError on I/O failure.
void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text);

}  // namespace cosserat_plate
