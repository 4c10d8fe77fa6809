#include "cosserat_plate/cli.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cosserat_plate/config.hpp"
#include "cosserat_plate/dispersion.hpp"
#include "cosserat_plate/operators.hpp"
#include "cosserat_plate/output.hpp"
#include "cosserat_plate/verify.hpp"

namespace cosserat_plate {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  int threads = 0;  // 0: take the config value
  bool paper_literal = false;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;
};

RunConfig load(const Options& opt) {
  if (opt.config.empty()) throw ConfigError("--config: required for this subcommand");
  RunConfig rc = load_run_config(opt.config);
  if (opt.threads > 0) rc.threads = opt.threads;
  return rc;
}

std::string csv(const std::function<void(std::ostream&)>& body) {
  std::ostringstream os;
  body(os);
  return os.str();
}

void write_json(const Options& opt, const std::string& name, const json& doc) {
  write_file(opt.out_dir, name, doc.dump(2) + "\n");
}

json constants_json(const TechnicalConstants& tc) {
  return {{"E", tc.E},     {"nu", tc.nu},   {"G", tc.G},
          {"D", tc.D},     {"l_t", tc.l_t}, {"l_b", tc.l_b},
          {"N", tc.N},     {"Psi", tc.Psi_polar}, {"kappa1_sq", tc.kappa1_sq},
          {"kappa2_sq", tc.kappa2_sq}, {"h", tc.h}};
}

json inertia_json(const InertiaSet& in) {
  return {{"I_o", in.I_o},   {"rho_o", in.rho_o}, {"I_o1", in.I_o1},
          {"I_o2", in.I_o2}, {"J3_s", in.J3_s},   {"I_o3", in.I_o3}};
}

int cmd_validate(const Context& c) {
  const RunConfig rc = load(c.opt);
  const ValidationReport rep = validate_parameters(rc.material);
  if (rep.admissible()) {
    c.out << "material admissible\n";
    return 0;
  }
  c.out << "material not admissible; violated conditions:\n";
  for (const auto& v : rep.violations) c.out << "  " << v << "\n";
  return 2;
}

int cmd_constants(const Context& c) {
  const RunConfig rc = load(c.opt);
  require_admissible(rc.material);
  const TechnicalConstants tc = technical_constants(rc.material, rc.h, rc.shear);
  const InertiaSet in = inertia_constants(rc.material, rc.h, rc.k4_star);
  const auto k = printed_k(tc);
  const auto kappa = printed_kappa(tc);
  auto& o = c.out;
  o << std::setprecision(10);
  o << "technical constants (h = " << rc.h << ")\n";
  o << "  E = " << tc.E << "\n  nu = " << tc.nu << "\n  G = " << tc.G << "\n  D = " << tc.D
    << "\n  l_t = " << tc.l_t << "\n  l_b = " << tc.l_b << "\n  N = " << tc.N
    << "\n  Psi = " << tc.Psi_polar << "\n  kappa1^2 = " << tc.kappa1_sq
    << "\n  kappa2^2 = " << tc.kappa2_sq << "\n";
  o << "inertia\n  I_o = " << in.I_o << "\n  rho_o = " << in.rho_o << "\n  I_o1 = " << in.I_o1
    << "\n  I_o2 = " << in.I_o2 << "\n  J3* = " << in.J3_s << "\n  I_o3 = " << in.I_o3 << "\n";
  o << "k table\n";
  for (int i = 0; i < 14; ++i) o << "  k" << i + 1 << " = " << k[i] << "\n";
  o << "kappa table\n";
  for (int i = 0; i < 5; ++i) o << "  kappa" << i + 1 << " = " << kappa[i] << "\n";

  const std::string hash = config_hash(rc);
  json doc{{"constants", constants_json(tc)},
           {"inertia", inertia_json(in)},
           {"k", k},
           {"kappa", kappa}};
  write_json(c.opt, "constants.json", with_meta(doc, {hash, "constants"}));
  if (c.opt.paper_literal)
    write_file(c.opt.out_dir, "coefficient_diff.csv", csv([&](std::ostream& os) {
                 write_csv_header(os, {hash, "coefficient-diff"});
                 os << coefficient_diff_csv(coefficient_diff(tc));
               }));
  return 0;
}

json config_echo(const RunConfig& rc) { return rc.source; }

int cmd_static(const Context& c) {
  const RunConfig rc = load(c.opt);
  const DiscreteModel m = assemble(to_model_config(rc));
  const StaticSolution sol = static_solve(m);
  const std::string hash = config_hash(rc);
  write_file(c.opt.out_dir, "static.csv", csv([&](std::ostream& os) {
               write_snapshot_csv(os, m, sol.H, {hash, "snapshot"}, 0.0);
             }));
  const int mid = m.node(m.nx / 2, m.ny / 2);
  json center;
  for (int f = 0; f < kNumKinematicFields; ++f)
    center[std::string(PlateKinematics::field_name(f))] = sol.H[9 * mid + f];
  json doc{{"config", config_echo(rc)},
           {"residual", sol.residual},
           {"rhs_norm", sol.rhs_norm},
           {"unknowns", m.num_unknowns()},
           {"center", center}};
  write_json(c.opt, "summary.json", with_meta(doc, {hash, "static-summary"}));
  c.out << std::setprecision(10) << "static solve: " << m.num_unknowns()
        << " unknowns, residual " << sol.residual << ", center W " << sol.H[9 * mid + 2] << "\n";
  return 0;
}

int cmd_simulate(const Context& c) {
  const RunConfig rc = load(c.opt);
  const DiscreteModel m = assemble(to_model_config(rc));
  const double limit = stable_dt(m);
  const double dt = rc.time.dt.value_or(limit);
  if (dt > limit)
    c.err << "warning: dt " << dt << " exceeds the computed stability limit " << limit << "\n";
  const DiscreteState s0 = initial_state(m, initial_field(rc, rc.initial_displacement),
                                         initial_field(rc, rc.initial_velocity), dt);
  const SimulationResult r = simulate(m, s0, rc.time.t_final, dt, rc.time.cadence);
  const std::string hash = config_hash(rc);
  for (const auto& snap : r.snapshots) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(7) << std::setfill('0') << std::llround(snap.time / dt)
         << ".csv";
    write_file(c.opt.out_dir, name.str(), csv([&](std::ostream& os) {
                 write_snapshot_csv(os, m, snap.H, {hash, "snapshot"}, snap.time);
               }));
  }
  write_file(c.opt.out_dir, "final.csv", csv([&](std::ostream& os) {
               write_snapshot_csv(os, m, r.final_state.H, {hash, "snapshot"}, r.final_state.time);
             }));
  write_file(c.opt.out_dir, "energy.csv", csv([&](std::ostream& os) {
               write_energy_csv(os, r.energy, {hash, "energy"});
             }));
  const auto& last = r.energy.samples.back();
  json doc{{"config", config_echo(rc)},
           {"dt", dt},
           {"stable_dt", limit},
           {"steps", r.steps},
           {"snapshots", r.snapshots.size()},
           {"stability_warning", r.final_state.stability_warning},
           {"energy_drift", r.energy.max_relative_drift()},
           {"final_energy", {{"kinetic", last.kinetic}, {"strain", last.strain},
                             {"external_work", last.external_work}, {"total", last.total()}}}};
  write_json(c.opt, "summary.json", with_meta(doc, {hash, "simulate-summary"}));
  c.out << std::setprecision(6) << "simulate: " << r.steps << " steps, dt " << dt
        << ", relative energy drift " << r.energy.max_relative_drift() << "\n";
  return 0;
}

// Symbol tables recovered from a polynomial symbol P(xi) of degree two.
SymbolTables probe_symbol(const std::function<Eigen::MatrixXd(double, double)>& P) {
  SymbolTables t;
  t.zeroth = P(0, 0);
  for (int a = 0; a < 2; ++a) {
    const Eigen::MatrixXd plus = a == 0 ? P(1, 0) : P(0, 1);
    const Eigen::MatrixXd minus = a == 0 ? P(-1, 0) : P(0, -1);
    t.first[a] = 0.5 * (plus - minus);
    t.second[a][a] = 0.5 * (plus + minus) - t.zeroth;
  }
  const Eigen::MatrixXd cross =
      P(1, 1) - t.zeroth - t.first[0] - t.first[1] - t.second[0][0] - t.second[1][1];
  t.second[0][1] = t.second[1][0] = 0.5 * cross;
  return t;
}

// Squared frequencies of the (possibly non-Hermitian) literal symbols.
std::vector<std::complex<double>> literal_omega_sq(const SymbolTables& L, const Eigen::VectorXd& mass,
                                                   double k1, double k2) {
  const Eigen::VectorXd s = mass.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXcd A = s.asDiagonal() * L.wave_stiffness(k1, k2) * s.asDiagonal();
  const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(A, false).eigenvalues();
  std::vector<std::complex<double>> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](auto x, auto y) { return x.real() < y.real(); });
  return out;
}

std::vector<WaveDirection> pick_directions(const RunConfig& rc) {
  std::vector<WaveDirection> out;
  for (const auto& d : default_directions())
    for (const auto& name : rc.dispersion.directions)
      if (d.name == name) out.push_back(d);
  return out;
}

int cmd_dispersion(const Context& c) {
  const RunConfig rc = load(c.opt);
  require_admissible(rc.material);
  const TechnicalConstants tc = technical_constants(rc.material, rc.h, rc.shear);
  const InertiaSet in = inertia_constants(rc.material, rc.h, rc.k4_star);
  const FlexuralOperator f = build_flexural(tc, in, rc.h);
  const ExtensionalOperator e = build_extensional(tc, in, rc.h);
  const auto& d = rc.dispersion;
  const auto ks = wavenumber_samples(d.k_min, d.k_split, d.k_max, d.n_log, d.n_lin);
  const auto dirs = pick_directions(rc);
  const std::string hash = config_hash(rc);

  if (c.opt.paper_literal) {
    const double nf = flexural_normalization(tc), ne = extensional_normalization(tc);
    const SymbolTables Lf =
        probe_symbol([&](double x, double y) { return printed_flexural_symbol(tc, x, y); });
    const SymbolTables Le =
        probe_symbol([&](double x, double y) { return printed_extensional_symbol(tc, x, y); });
    const Eigen::VectorXd mf = f.mass * nf, me = e.mass * ne;
    write_file(c.opt.out_dir, "dispersion_literal.csv", csv([&](std::ostream& os) {
                 write_csv_header(os, {hash, "dispersion-literal"});
                 os << "direction,xi,branch,omega_sq_real,omega_sq_imag,subsystem\n"
                    << std::setprecision(17);
                 for (const auto& dir : dirs)
                   for (double k : ks) {
                     auto emit = [&](const std::vector<std::complex<double>>& w, const char* sub) {
                       for (std::size_t b = 0; b < w.size(); ++b)
                         os << dir.name << ',' << k << ',' << b << ',' << w[b].real() << ','
                            << w[b].imag() << ',' << sub << "\n";
                     };
                     emit(literal_omega_sq(Lf, mf, k * dir.unit[0], k * dir.unit[1]), "flexural");
                     emit(literal_omega_sq(Le, me, k * dir.unit[0], k * dir.unit[1]), "extensional");
                   }
               }));
  }

  DispersionResult r;
  try {
    r = dispersion_curves(f, e, dirs, ks, d.modes);
  } catch (const DomainError& ex) {
    throw SolverError(ex.what());
  }
  const CutoffResult cut = cutoff_frequencies(f, e);
  write_file(c.opt.out_dir, "dispersion.csv", csv([&](std::ostream& os) {
               write_csv_header(os, {hash, "dispersion"});
               os << dispersion_csv(r);
             }));
  json doc{{"config", config_echo(rc)},
           {"cutoff", {{"flexural", cut.flexural}, {"extensional", cut.extensional}}},
           {"zero_modes",
            {{"flexural", cut.flexural_zero_modes},
             {"extensional", cut.extensional_zero_modes},
             {"flexural_fields", cut.flexural_zero_fields},
             {"extensional_fields", cut.extensional_zero_fields}}},
           {"samples", r.samples.size()}};
  write_json(c.opt, "summary.json", with_meta(doc, {hash, "dispersion-summary"}));
  c.out << "dispersion: " << r.samples.size() << " wavevectors, " << cut.flexural_zero_modes
        << " flexural zero mode(s) at k = 0\n";
  return 0;
}

int cmd_verify(const Context& c) {
  VerifyOptions vo;
  vo.seed = c.opt.seed;
  vo.threads = std::max(1, c.opt.threads);
  std::ostringstream seed_hash;
  seed_hash << "seed-" << vo.seed;
  const std::string hash = seed_hash.str();
  int failures = 0;
  json checks = json::array();
  const auto results = run_all(vo, [&](const CheckResult& r) {
    c.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n" << std::flush;
    if (!r.passed) ++failures;
  });
  for (const auto& r : results)
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"value", r.value},
                      {"tolerance", r.tolerance}, {"detail", r.detail}});
  write_json(c.opt, "verify.json", with_meta({{"seed", vo.seed}, {"checks", checks}},
                                             {hash, "verify"}));
  const TechnicalConstants tc = technical_constants(
      MaterialParams{1.5, 1.0, 0.2, 1e-3, 2.5e-3, 3.9e-3, 1.0, {2e-3, 2e-3, 2e-3}}, 0.1);
  write_file(c.opt.out_dir, "coefficient_diff.csv", csv([&](std::ostream& os) {
               write_csv_header(os, {hash, "coefficient-diff"});
               os << coefficient_diff_csv(coefficient_diff(tc));
             }));
  c.out << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

int cmd_sweep(const Context& c) {
  const RunConfig rc = load(c.opt);
  require_admissible(rc.material);
  const TechnicalConstants base = technical_constants(rc.material, rc.h, rc.shear);
  const InertiaSet in = inertia_constants(rc.material, rc.h, rc.k4_star);
  const std::string hash = config_hash(rc);
  std::ostringstream os;
  write_csv_header(os, {hash, "sweep"});
  os << "N,l_t,l_b,Psi,k,subsystem,branch,omega\n" << std::setprecision(17);
  json rows = json::array();
  for (double N : rc.sweep.N)
    for (double lt : rc.sweep.l_t)
      for (double lb : rc.sweep.l_b)
        for (double psi : rc.sweep.Psi) {
          if (!(N >= 0.0 && N < 1.0) || !(lt > 0.0) || !(psi > 0.0 && psi < 1.5) ||
              !(2.0 * lb > lt)) {
            std::ostringstream where;
            where << "sweep (N=" << N << ", l_t=" << lt << ", l_b=" << lb << ", Psi=" << psi
                  << "): need 0 <= N < 1, l_t > 0, 2 l_b > l_t, 0 < Psi < 1.5";
            throw ConfigError(where.str());
          }
          TechnicalConstants tc = base;
          tc.N = N;
          tc.l_t = lt;
          tc.l_b = lb;
          tc.Psi_polar = psi;
          const FlexuralOperator f = build_flexural(tc, in, rc.h);
          const ExtensionalOperator e = build_extensional(tc, in, rc.h);
          for (double k : rc.sweep.k) {
            BranchSet bf, be;
            try {
              bf = branches(f.L, f.mass, k, 0.0);
              be = branches(e.L, e.mass, k, 0.0);
            } catch (const DomainError& ex) {
              throw SolverError(ex.what());
            }
            for (std::size_t b = 0; b < bf.omega.size(); ++b)
              os << N << ',' << lt << ',' << lb << ',' << psi << ',' << k << ",flexural," << b
                 << ',' << bf.omega[b] << "\n";
            for (std::size_t b = 0; b < be.omega.size(); ++b)
              os << N << ',' << lt << ',' << lb << ',' << psi << ',' << k << ",extensional," << b
                 << ',' << be.omega[b] << "\n";
          }
          const CutoffResult cut = cutoff_frequencies(f, e);
          rows.push_back({{"N", N}, {"l_t", lt}, {"l_b", lb}, {"Psi", psi},
                          {"cutoff_flexural", cut.flexural},
                          {"cutoff_extensional", cut.extensional},
                          {"flexural_zero_modes", cut.flexural_zero_modes}});
        }
  write_file(c.opt.out_dir, "sweep.csv", os.str());
  write_json(c.opt, "summary.json",
             with_meta({{"config", config_echo(rc)}, {"cases", rows}}, {hash, "sweep-summary"}));
  c.out << "sweep: " << rows.size() << " parameter sets\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cosserat plate statics, dynamics and dispersion"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config, "JSON run configuration");
  app.add_option("--out", opt.out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized verify suites")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker thread cap")->check(CLI::PositiveNumber);
  app.add_flag("--paper-literal-operators", opt.paper_literal,
               "also evaluate the printed coefficient tables (diff mode)");

  using Handler = int (*)(const Context&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"validate", "material admissibility report", cmd_validate},
      {"constants", "technical constants, inertia and coefficient tables", cmd_constants},
      {"static", "static solve and snapshot", cmd_static},
      {"simulate", "time integration with energy log", cmd_simulate},
      {"dispersion", "dispersion curves", cmd_dispersion},
      {"verify", "run all oracle suites", cmd_verify},
      {"sweep", "parameter sweep of branches and cutoffs", cmd_sweep},
  };
  for (const auto& [name, help, fn] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Context ctx{opt, out, err};
  try {
    for (const auto& [name, help, fn] : commands)
      if (app.got_subcommand(name)) return fn(ctx);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace cosserat_plate
