#include "cosserat_plate/output.hpp"

#include <fstream>
#include <iomanip>
#include <limits>

namespace cosserat_plate {

void write_csv_header(std::ostream& os, const OutputHeader& h) {
  os << "# cosserat-plate " << kVersion << "\n";
  os << "# config_hash " << h.config_hash << "\n";
  os << "# kind " << h.kind << "\n";
}

void write_snapshot_csv(std::ostream& os, const DiscreteModel& m, const Eigen::VectorXd& H,
                        const OutputHeader& h, double time) {
  write_csv_header(os, h);
  os << "# time " << std::setprecision(17) << time << "\n";
  os << "x1,x2";
  for (int f = 0; f < kNumKinematicFields; ++f) os << ',' << PlateKinematics::field_name(f);
  os << "\n" << std::setprecision(17);
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const int n = m.node(i, j);
      os << m.x(i) << ',' << m.y(j);
      for (int f = 0; f < kNumKinematicFields; ++f) os << ',' << H[9 * n + f];
      os << "\n";
    }
}

void write_energy_csv(std::ostream& os, const EnergyLog& log, const OutputHeader& h) {
  write_csv_header(os, h);
  os << "t,kinetic,strain,external_work,total\n" << std::setprecision(17);
  for (const auto& s : log.samples)
    os << s.t << ',' << s.kinetic << ',' << s.strain << ',' << s.external_work << ','
       << s.total() << "\n";
}

nlohmann::json with_meta(nlohmann::json doc, const OutputHeader& h) {
  doc["meta"] = {{"config_hash", h.config_hash}, {"version", kVersion}, {"kind", h.kind}};
  return doc;
}

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw SolverError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw SolverError("cannot write " + (dir / name).string());
  out << text;
}

}  // namespace cosserat_plate
