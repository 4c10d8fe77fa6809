#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "cosserat_plate/config.hpp"
#include "cosserat_plate/cosserat3d.hpp"
#include "cosserat_plate/dispersion.hpp"
#include "cosserat_plate/dynamics.hpp"
#include "cosserat_plate/plate_constitutive.hpp"
#include "cosserat_plate/verify.hpp"

namespace py = pybind11;
using namespace cosserat_plate;

namespace {

// Python dicts cross the boundary as JSON text (json.dumps on the Python side).
RunConfig config_from(const std::string& text, const std::string& base_dir) {
  return parse_run_config(nlohmann::json::parse(text), base_dir);
}

MaterialParams material_from(const std::string& text) {
  return parse_material(nlohmann::json::parse(text));
}

py::dict constants_dict(const TechnicalConstants& tc) {
  py::dict d;
  d["E"] = tc.E;
  d["nu"] = tc.nu;
  d["G"] = tc.G;
  d["D"] = tc.D;
  d["l_t"] = tc.l_t;
  d["l_b"] = tc.l_b;
  d["N"] = tc.N;
  d["Psi"] = tc.Psi_polar;
  d["kappa1_sq"] = tc.kappa1_sq;
  d["kappa2_sq"] = tc.kappa2_sq;
  d["h"] = tc.h;
  return d;
}

ShearCorrection shear_from(const std::string& s) {
  if (s == "reissner") return ShearCorrection::kReissner;
  if (s == "mindlin") return ShearCorrection::kMindlin;
  throw ConfigError("shear: expected 'reissner' or 'mindlin', got '" + s + "'");
}

// Nodal values reshaped to (ny, nx, 9), row-major.
py::array_t<double> grid_array(const DiscreteModel& m, const Eigen::VectorXd& H) {
  py::array_t<double> a({m.ny, m.nx, 9});
  auto r = a.mutable_unchecked<3>();
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      for (int f = 0; f < 9; ++f) r(j, i, f) = H[9 * m.node(i, j) + f];
  return a;
}

py::dict grid_coords(const DiscreteModel& m) {
  Eigen::VectorXd x(m.nx), y(m.ny);
  for (int i = 0; i < m.nx; ++i) x[i] = m.x(i);
  for (int j = 0; j < m.ny; ++j) y[j] = m.y(j);
  py::dict d;
  d["x"] = x;
  d["y"] = y;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Micropolar thin-plate statics, dynamics and dispersion";

  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<SolverError>(mod, "SolverError", PyExc_RuntimeError);

  mod.attr("K4_STAR") = kK4Star;
  mod.attr("K4_STAR_PROFILE") = kK4StarProfile;
  {
    py::list names;
    for (int f = 0; f < 9; ++f) names.append(std::string(PlateKinematics::field_name(f)));
    mod.attr("FIELD_NAMES") = names;
  }

  mod.def("validate_material", [](const std::string& material) {
    return validate_parameters(material_from(material)).violations;
  });

  mod.def(
      "technical_constants",
      [](const std::string& material, double h, const std::string& shear) {
        return constants_dict(technical_constants(material_from(material), h, shear_from(shear)));
      },
      py::arg("material"), py::arg("h"), py::arg("shear") = "reissner");

  mod.def("stress_3d", [](const std::string& material, const Eigen::Matrix3d& gamma,
                          const Eigen::Matrix3d& chi) {
    const Stress3D t = stress_from_strain_3d({gamma, chi}, material_from(material));
    return py::make_tuple(t.sigma, t.mu_c);
  });

  mod.def("strain_3d", [](const std::string& material, const Eigen::Matrix3d& sigma,
                          const Eigen::Matrix3d& mu_c) {
    const Strain3D s = strain_from_stress_3d({sigma, mu_c}, reciprocal_constants(material_from(material)));
    return py::make_tuple(s.gamma, s.chi);
  });

  mod.def(
      "plate_stress",
      [](const std::string& material, double h, const Vector20& strain, const Eigen::Vector4d& loads) {
        const MaterialParams p = material_from(material);
        require_admissible(p);
        return stress_from_strain(PlateStrain::from_vector(strain), technical_constants(p, h),
                                  LoadValues::from_vector(loads))
            .to_vector();
      },
      py::arg("material"), py::arg("h"), py::arg("strain"), py::arg("loads"));

  mod.def(
      "plate_strain",
      [](const std::string& material, double h, const Vector20& stress, const Eigen::Vector4d& loads,
         double div_qs) {
        return strain_from_stress(PlateStress::from_vector(stress), material_from(material), h,
                                  LoadValues::from_vector(loads), div_qs)
            .to_vector();
      },
      py::arg("material"), py::arg("h"), py::arg("stress"), py::arg("loads"), py::arg("div_qs"));

  mod.def(
      "plate_energy",
      [](const std::string& material, double h, const Vector20& stress, const Eigen::Vector4d& loads,
         double div_qs) {
        return plate_energy_density(PlateStress::from_vector(stress), material_from(material), h,
                                    LoadValues::from_vector(loads), div_qs);
      },
      py::arg("material"), py::arg("h"), py::arg("stress"), py::arg("loads"), py::arg("div_qs"));

  mod.def(
      "branches",
      [](const std::string& config, const std::string& base_dir, double k1, double k2) {
        const RunConfig rc = config_from(config, base_dir);
        require_admissible(rc.material);
        const TechnicalConstants tc = technical_constants(rc.material, rc.h, rc.shear);
        const InertiaSet in = inertia_constants(rc.material, rc.h, rc.k4_star);
        const FlexuralOperator f = build_flexural(tc, in, rc.h);
        const ExtensionalOperator e = build_extensional(tc, in, rc.h);
        py::dict d;
        d["flexural"] = branches(f.L, f.mass, k1, k2).omega;
        d["extensional"] = branches(e.L, e.mass, k1, k2).omega;
        return d;
      },
      py::arg("config"), py::arg("base_dir"), py::arg("k1"), py::arg("k2"));

  mod.def(
      "cutoffs",
      [](const std::string& config, const std::string& base_dir) {
        const RunConfig rc = config_from(config, base_dir);
        require_admissible(rc.material);
        const TechnicalConstants tc = technical_constants(rc.material, rc.h, rc.shear);
        const InertiaSet in = inertia_constants(rc.material, rc.h, rc.k4_star);
        const CutoffResult c =
            cutoff_frequencies(build_flexural(tc, in, rc.h), build_extensional(tc, in, rc.h));
        py::dict d;
        d["flexural"] = c.flexural;
        d["extensional"] = c.extensional;
        d["flexural_zero_fields"] = c.flexural_zero_fields;
        d["extensional_zero_fields"] = c.extensional_zero_fields;
        return d;
      },
      py::arg("config"), py::arg("base_dir"));

  mod.def(
      "static_solve",
      [](const std::string& config, const std::string& base_dir) {
        const RunConfig rc = config_from(config, base_dir);
        StaticSolution sol;
        DiscreteModel m;
        {
          py::gil_scoped_release release;
          m = assemble(to_model_config(rc));
          sol = static_solve(m);
        }
        py::dict d = grid_coords(m);
        d["fields"] = grid_array(m, sol.H);
        d["residual"] = sol.residual;
        return d;
      },
      py::arg("config"), py::arg("base_dir"));

  mod.def(
      "simulate",
      [](const std::string& config, const std::string& base_dir) {
        const RunConfig rc = config_from(config, base_dir);
        DiscreteModel m;
        SimulationResult r;
        double limit = 0.0, dt = 0.0;
        {
          py::gil_scoped_release release;
          m = assemble(to_model_config(rc));
          limit = stable_dt(m);
          dt = rc.time.dt.value_or(limit);
          const DiscreteState s0 = initial_state(m, initial_field(rc, rc.initial_displacement),
                                                 initial_field(rc, rc.initial_velocity), dt);
          r = simulate(m, s0, rc.time.t_final, dt, rc.time.cadence);
        }
        Eigen::MatrixXd energy(r.energy.samples.size(), 5);
        for (std::size_t k = 0; k < r.energy.samples.size(); ++k) {
          const auto& e = r.energy.samples[k];
          energy.row(k) << e.t, e.kinetic, e.strain, e.external_work, e.total();
        }
        py::list snapshots;
        for (const auto& s : r.snapshots) snapshots.append(py::make_tuple(s.time, grid_array(m, s.H)));
        py::dict d = grid_coords(m);
        d["fields"] = grid_array(m, r.final_state.H);
        d["time"] = r.final_state.time;
        d["dt"] = dt;
        d["stable_dt"] = limit;
        d["steps"] = r.steps;
        d["energy"] = energy;
        d["energy_drift"] = r.energy.max_relative_drift();
        d["snapshots"] = snapshots;
        return d;
      },
      py::arg("config"), py::arg("base_dir"));

  mod.def(
      "verify",
      [](std::uint64_t seed, int threads) {
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_all({seed, threads});
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["value"] = r.value;
          d["tolerance"] = r.tolerance;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("threads") = 1);
}
