// knotqubit: curvature-induced double-well qubit toolkit.
//
// Subcommands: geometry, spectrum, split, transmission, dynamics.
// Global flags: --units, --out-dir, --config.  Exit codes: 0 success,
// 64 invalid parameters, 65 malformed input data, 70 computation failure.

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotqubit/dynamics.hpp"
#include "knotqubit/geometry.hpp"
#include "knotqubit/io.hpp"
#include "knotqubit/potential.hpp"
#include "knotqubit/scattering.hpp"
#include "knotqubit/spectrum.hpp"
#include "knotqubit/tunneling.hpp"
#include "knotqubit/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace knotqubit;

namespace {

constexpr int kExitValidation = 64;
constexpr int kExitData = 65;
constexpr int kExitCompute = 70;

struct GlobalOpts {
  std::string units = "natural";
  std::string out_dir = ".";
  std::string config_path;
  json config;  // whole config file, keyed by subcommand

  PhysParams params() const {
    return units == "physical" ? PhysParams::physical_electron() : PhysParams::natural();
  }

  json section(const std::string& name) const {
    if (config.contains(name)) return config.at(name);
    return json::object();
  }
};

// Config-file values fill in options the command line left untouched.
template <typename T>
void layer(const CLI::Option* opt, const json& section, const std::string& key, T& value) {
  if (opt->count() == 0 && section.contains(key)) value = section.at(key).get<T>();
}

fs::path prepare_out_dir(const GlobalOpts& global) {
  fs::path dir(global.out_dir);
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& dir, const std::string& subcommand,
                    const GlobalOpts& global, const json& parameters,
                    const std::vector<std::string>& outputs) {
  json manifest;
  manifest["tool"] = "knotqubit";
  manifest["version"] = kVersion;
  manifest["subcommand"] = subcommand;
  manifest["units"] = global.units;
  manifest["parameters"] = parameters;
  manifest["outputs"] = outputs;
  if (!global.config_path.empty()) manifest["config_file"] = global.config_path;
  std::ofstream out(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

// Model flags shared by the quantum subcommands.
struct ModelOpts {
  double rho0 = 0.5;
  double d = 0.01;
  double kappa = 0.0;  // 0 means: derive from rho0
  double D = 0.0;      // 0 means: derive from rho0
  double l = 0.0;      // 0 means: no hard walls
  bool paper_defaults = false;

  CLI::Option* rho0_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* kappa_opt = nullptr;
  CLI::Option* D_opt = nullptr;
  CLI::Option* l_opt = nullptr;

  void add_to(CLI::App* cmd) {
    rho0_opt = cmd->add_option("--rho0", rho0, "Thread radius rho0 (knot model)");
    d_opt = cmd->add_option("--d", d, "Barrier width d");
    kappa_opt = cmd->add_option("--kappa", kappa, "Plateau curvature (overrides rho0)");
    D_opt = cmd->add_option("--D", D, "Well width (overrides rho0)");
    l_opt = cmd->add_option("--l", l, "Hard-wall distance l (omit for open ends)");
    cmd->add_flag("--paper-defaults", paper_defaults,
                  "Use D = 5/2, rho0 = 1/2, kappa = 1, d = 1e-2");
  }

  void apply_config(const json& section) {
    layer(rho0_opt, section, "rho0", rho0);
    layer(d_opt, section, "d", d);
    layer(kappa_opt, section, "kappa", kappa);
    layer(D_opt, section, "D", D);
    layer(l_opt, section, "l", l);
  }

  DoubleWellModel build(const PhysParams& params) const {
    std::optional<double> wall = l > 0.0 ? std::optional<double>(l) : std::nullopt;
    if (paper_defaults) return DoubleWellModel::knot(0.5, 0.01, params, wall);
    if (kappa > 0.0 || D > 0.0) {
      if (!(kappa > 0.0) || !(D > 0.0))
        throw std::invalid_argument("--kappa and --D must be given together");
      return DoubleWellModel::custom(kappa, D, d, params, wall);
    }
    return DoubleWellModel::knot(rho0, d, params, wall);
  }

  json describe(const DoubleWellModel& m) const {
    json j;
    j["rho0"] = m.rho0;
    j["kappa"] = m.kappa;
    j["D"] = m.D;
    j["d"] = m.d;
    j["U0"] = m.U0;
    j["C"] = m.C;
    if (m.l) j["l"] = *m.l;
    return j;
  }
};

// Default open-boundary solver domain [-(d/2 + D + 30/q1), +same], with q1
// from the analytic ground root.  The node count is raised if needed so the
// shortest potential feature keeps at least 8 nodes.
Grid default_grid(const DoubleWellModel& model, const PotentialProfile& pot,
                  std::size_t n, const PhysParams& params) {
  Grid grid{0.0, 1.0, 16};
  if (pot.boundary == BoundaryKind::HardWall) {
    grid = Grid::for_potential(pot, n);
  } else {
    const auto states = solve_single_well(model, params);
    const double q1 = states.empty() ? model.k0() : std::max(states.front().q, 1e-3);
    grid = Grid::for_potential(pot, n, 30.0 / q1);
  }
  const double span = pot.breakpoints.back() - pot.breakpoints.front();
  double feature = span;
  for (std::size_t i = 1; i < pot.breakpoints.size(); ++i) {
    const double gap = pot.breakpoints[i] - pot.breakpoints[i - 1];
    if (gap > 1e-7 * span) feature = std::min(feature, gap);
  }
  const auto needed =
      std::size_t(std::ceil((grid.s_max - grid.s_min) / (feature / 8.0))) + 1;
  grid.n = std::max(grid.n, needed);
  return grid;
}

int cmd_geometry(const GlobalOpts& global, const std::string& curve_file,
                 bool closed, std::size_t resample, const std::string& segments_file,
                 const std::string& profile_name, const std::string& json_name) {
  const auto dir = prepare_out_dir(global);
  CurvatureProfile profile;
  json parameters;
  if (!curve_file.empty()) {
    const auto curve = io::read_curve_csv(curve_file, closed);
    const auto uniform = reparametrize_arclength(curve, resample);
    profile = curvature_profile(uniform);
    parameters = {{"curve", curve_file}, {"closed", closed}, {"resample", resample}};
  } else if (!segments_file.empty()) {
    profile = compose_segments(io::read_segments_csv(segments_file));
    parameters = {{"segments", segments_file}};
  } else {
    throw std::invalid_argument("geometry: need --curve or --segments");
  }

  io::write_profile_csv(dir / profile_name, profile);

  json summary;
  summary["total_curvature"] = total_curvature(profile);
  summary["state_count_estimate"] = state_count_estimate(profile, global.params());
  summary["length"] = profile.closed ? profile.period : profile.s.back() - profile.s.front();
  summary["closed"] = profile.closed;
  summary["samples"] = profile.s.size();
  std::ofstream out(dir / json_name);
  out << summary.dump(2) << '\n';

  write_manifest(dir, "geometry", global, parameters, {profile_name, json_name});
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int cmd_spectrum(const GlobalOpts& global, const ModelOpts& model_opts,
                 const std::string& method, std::size_t grid_n, std::size_t n_states,
                 const std::string& potential_json, bool write_wavefunctions) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();
  json parameters;
  parameters["method"] = method;
  parameters["grid_n"] = grid_n;
  parameters["n_states"] = n_states;

  std::vector<BoundState> states;
  std::vector<std::string> outputs;
  Grid grid{0.0, 1.0, 16};
  bool have_grid = false;

  if (!potential_json.empty()) {
    const auto pot = io::read_potential_json(potential_json);
    grid = Grid::for_potential(pot, grid_n, pot.boundary == BoundaryKind::Open ? 10.0 : 0.0);
    have_grid = true;
    states = numeric_spectrum(pot, grid, n_states, params);
    parameters["potential"] = potential_json;
  } else {
    const auto model = model_opts.build(params);
    parameters["model"] = model_opts.describe(model);

    json model_info = model_opts.describe(model);
    model_info["k0"] = model.k0();
    model_info["critical_field"] = critical_field(model, params);
    model_info["critical_field_bound"] = critical_field_bound(model, params);
    model_info["dipole_moment"] = dipole_moment(model, params);
    model_info["max_temperature"] = max_temperature(model, params);
    std::ofstream minfo(dir / "model.json");
    minfo << model_info.dump(2) << '\n';
    outputs.push_back("model.json");

    if (method == "analytic" || method == "both") {
      const auto analytic =
          model.l ? solve_hard_wall(model, params) : solve_single_well(model, params);
      io::write_spectrum_json(dir / "spectrum_analytic.json", analytic);
      outputs.push_back("spectrum_analytic.json");
      if (method == "analytic") states = analytic;
    }
    if (method == "numeric" || method == "both") {
      const auto pot = double_well_potential(model);
      grid = default_grid(model, pot, grid_n, params);
      have_grid = true;
      states = numeric_spectrum(pot, grid, n_states, params);
    }
  }

  if (method != "analytic" || !potential_json.empty()) {
    io::write_spectrum_json(dir / "spectrum.json", states);
    outputs.push_back("spectrum.json");
  }
  if (write_wavefunctions && have_grid) {
    int index = 0;
    for (const auto& st : states) {
      if (!st.has_psi()) continue;
      const std::string name = "psi_" + std::to_string(index++) + ".csv";
      io::write_wavefunction_csv(dir / name, grid, st.psi);
      outputs.push_back(name);
    }
  }

  write_manifest(dir, "spectrum", global, parameters, outputs);
  std::cout << io::spectrum_to_json(states) << '\n';
  return 0;
}

int cmd_split(const GlobalOpts& global, const ModelOpts& model_opts,
              const std::string& method, std::size_t grid_n, bool diagnostics) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();
  const auto model = model_opts.build(params);

  json parameters;
  parameters["model"] = model_opts.describe(model);
  parameters["method"] = method;
  parameters["grid_n"] = grid_n;

  std::vector<std::string> outputs;
  json report;
  if (method == "wkb" || method == "both") {
    const auto roots = solve_single_well(model, params);
    const auto wkb = wkb_split(model, roots.front().k, params);
    io::write_split_json(dir / "split_wkb.json", wkb);
    outputs.push_back("split_wkb.json");
    report["wkb"] = json::parse(io::split_to_json(wkb));
    if (diagnostics) {
      report["wkb"]["exponent_k1_d"] = roots.front().k * model.d;
      report["wkb"]["exponent_q1_d"] = wkb_barrier_exponent_q(model, roots.front().k, params);
    }
  }
  if (method == "numeric" || method == "both") {
    const auto pot = double_well_potential(model);
    const auto grid = default_grid(model, pot, grid_n, params);
    const auto numeric = numeric_split(pot, grid, params);
    io::write_split_json(dir / "split_numeric.json", numeric);
    outputs.push_back("split_numeric.json");
    report["numeric"] = json::parse(io::split_to_json(numeric));
  }

  write_manifest(dir, "split", global, parameters, outputs);
  std::cout << report.dump(2) << '\n';
  return 0;
}

int cmd_transmission(const GlobalOpts& global, const ModelOpts& model_opts, double q_min,
                     double q_max, std::size_t n, double threshold) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();
  const auto model = model_opts.build(params);
  const auto pot = double_well_potential(model);
  if (pot.boundary != BoundaryKind::Open)
    throw std::invalid_argument("transmission: the scattering geometry has open ends");

  const auto sweep = transmission_sweep(q_min, q_max, n, pot, params);
  const auto resonances = find_resonances(
      sweep, threshold, [&](double q) { return transmission(q, pot, params).T; });

  io::write_sweep_csv(dir / "sweep.csv", sweep);
  io::write_resonances_json(dir / "resonances.json", resonances);

  json parameters;
  parameters["model"] = model_opts.describe(model);
  parameters["q_min"] = q_min;
  parameters["q_max"] = q_max;
  parameters["n"] = n;
  parameters["threshold"] = threshold;
  write_manifest(dir, "transmission", global, parameters, {"sweep.csv", "resonances.json"});

  std::cout << json(resonances).dump() << '\n';
  return 0;
}

int cmd_dynamics_tls(const GlobalOpts& global, double deltaE, double bias0, double amp,
                     const std::string& freq_spec, double phase, double t_end, double dt,
                     const std::string& initial) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();

  DriveSpec drive;
  drive.bias0 = bias0;
  drive.amp = amp;
  drive.phase = phase;
  if (freq_spec == "resonant") {
    drive.freq = deltaE / params.hbar;
  } else if (!freq_spec.empty()) {
    try {
      drive.freq = std::stod(freq_spec);
    } catch (const std::exception&) {
      throw std::invalid_argument("dynamics tls: --drive-freq must be a number or 'resonant'");
    }
  }

  TwoLevelState start = TwoLevelState::superposition();
  if (initial == "left") start = TwoLevelState::left();
  if (initial == "right") start = TwoLevelState::right();

  const auto trajectory = tls_evolve(deltaE, drive, start, t_end, dt, params);
  io::write_tls_csv(dir / "tls.csv", trajectory);

  json parameters = {{"deltaE", deltaE},   {"bias0", bias0}, {"amp", amp},
                     {"freq", drive.freq}, {"phase", phase}, {"t_end", t_end},
                     {"dt", dt},           {"initial", initial}};
  write_manifest(dir, "dynamics tls", global, parameters, {"tls.csv"});
  std::cout << "wrote tls.csv with " << trajectory.size() << " samples\n";
  return 0;
}

int cmd_dynamics_wavepacket(const GlobalOpts& global, const ModelOpts& model_opts,
                            std::size_t grid_n, double dt, std::size_t steps,
                            const std::string& initial) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();
  const auto model = model_opts.build(params);
  const auto pot = double_well_potential(model);
  const auto grid = default_grid(model, pot, grid_n, params);

  const auto states = numeric_spectrum(pot, grid, 2, params);
  if (states.size() < 2 || states[0].energy >= 0.0)
    throw std::domain_error("dynamics wavepacket: no doublet to superpose");

  std::vector<std::complex<double>> psi0(grid.n);
  if (initial == "ground") {
    for (std::size_t i = 0; i < grid.n; ++i) psi0[i] = states[0].psi[i];
  } else {  // localized doublet combination
    for (std::size_t i = 0; i < grid.n; ++i)
      psi0[i] = (states[0].psi[i] + states[1].psi[i]) / std::numbers::sqrt2;
  }

  const auto trajectory = cn_evolve(pot, psi0, grid, dt, steps, params);
  io::write_wavepacket_csv(dir / "wavepacket.csv", trajectory);

  json parameters;
  parameters["model"] = model_opts.describe(model);
  parameters["grid_n"] = grid_n;
  parameters["dt"] = dt;
  parameters["steps"] = steps;
  parameters["initial"] = initial;
  write_manifest(dir, "dynamics wavepacket", global, parameters, {"wavepacket.csv"});
  std::cout << "wrote wavepacket.csv with " << trajectory.size() << " samples\n";
  return 0;
}

int cmd_dynamics_prepare(const GlobalOpts& global, const ModelOpts& model_opts,
                         double field) {
  const auto dir = prepare_out_dir(global);
  const auto params = global.params();
  const auto model = model_opts.build(params);
  const auto state = prepare_and_release(model, field, params);

  json result;
  result["aL"] = {state.aL.real(), state.aL.imag()};
  result["aR"] = {state.aR.real(), state.aR.imag()};
  result["critical_field"] = critical_field(model, params);
  std::ofstream out(dir / "prepare.json");
  out << result.dump(2) << '\n';

  json parameters;
  parameters["model"] = model_opts.describe(model);
  parameters["field"] = field;
  write_manifest(dir, "dynamics prepare", global, parameters, {"prepare.json"});
  std::cout << result.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature-induced double-well qubit toolkit"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 64 invalid parameters, 65 malformed input, "
      "70 computation failure.\n"
      "Config file: JSON keyed by subcommand; command-line flags take "
      "precedence over config values, which take precedence over defaults.\n"
      "CSV columns: profile.csv (s,kappa), sweep.csv (q,T), psi_<n>.csv (s,psi),\n"
      "wavepacket.csv (t,P_L,P_R,norm), tls.csv (t,reP_aL,imP_aL,reP_aR,imP_aR).\n"
      "All numbers are written with round-trip (%.17g) precision; every run\n"
      "also writes manifest.json with the resolved parameters.");

  GlobalOpts global;
  app.add_option("--units", global.units, "Unit system")
      ->check(CLI::IsMember({"natural", "physical"}))
      ->capture_default_str();
  app.add_option("--out-dir", global.out_dir, "Output directory")->capture_default_str();
  app.add_option("--config", global.config_path, "JSON config file");

  // geometry
  auto* geometry = app.add_subcommand("geometry", "Curvature profiles from curves or segments");
  geometry->fallthrough();
  std::string curve_file, segments_file;
  bool closed = false;
  std::size_t resample = 2048;
  std::string profile_name = "profile.csv", geometry_json = "geometry.json";
  auto* curve_opt = geometry->add_option("--curve", curve_file, "Curve CSV (x,y,z)");
  auto* closed_opt = geometry->add_flag("--closed", closed, "Treat the curve as closed");
  auto* resample_opt =
      geometry->add_option("--resample", resample, "Arclength resampling count")
          ->check(CLI::Range(std::size_t(8), std::size_t(1) << 20));
  auto* segments_opt =
      geometry->add_option("--segments", segments_file, "Segment CSV (kind,length,radius)");
  geometry->add_option("--out-profile", profile_name, "Profile CSV name")
      ->capture_default_str();
  geometry->add_option("--out-json", geometry_json, "Summary JSON name")
      ->capture_default_str();
  curve_opt->excludes(segments_opt);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Bound states, analytic and numeric");
  spectrum->fallthrough();
  ModelOpts spectrum_model;
  spectrum_model.add_to(spectrum);
  std::string spectrum_method = "both";
  std::size_t spectrum_grid_n = 4001, n_states = 4;
  std::string potential_json;
  bool write_wavefunctions = false;
  auto* spectrum_method_opt =
      spectrum->add_option("--method", spectrum_method, "analytic | numeric | both")
          ->check(CLI::IsMember({"analytic", "numeric", "both"}))
          ->capture_default_str();
  auto* spectrum_grid_opt =
      spectrum->add_option("--grid-n", spectrum_grid_n, "Numeric grid nodes")
          ->capture_default_str();
  spectrum->add_option("--n-states", n_states, "Numeric states to compute")
      ->capture_default_str();
  spectrum->add_option("--potential-json", potential_json,
                       "Solve this potential instead of the knot model");
  spectrum->add_flag("--write-wavefunctions", write_wavefunctions,
                     "Also write psi_<n>.csv files");

  // split
  auto* split = app.add_subcommand("split", "Tunnel splitting, WKB and numeric");
  split->fallthrough();
  ModelOpts split_model;
  split_model.add_to(split);
  std::string split_method = "both";
  std::size_t split_grid_n = 4001;
  bool split_diagnostics = false;
  auto* split_method_opt =
      split->add_option("--method", split_method, "wkb | numeric | both")
          ->check(CLI::IsMember({"wkb", "numeric", "both"}))
          ->capture_default_str();
  auto* split_grid_opt = split->add_option("--grid-n", split_grid_n, "Numeric grid nodes")
                             ->capture_default_str();
  split->add_flag("--diagnostics", split_diagnostics,
                  "Report both barrier exponents (k1 d and q1 d)");

  // transmission
  auto* transmission_cmd =
      app.add_subcommand("transmission", "Transfer-matrix transparency sweep");
  transmission_cmd->fallthrough();
  ModelOpts transmission_model;
  transmission_model.add_to(transmission_cmd);
  double q_min = 0.001, q_max = 4.0, threshold = 0.999;
  std::size_t sweep_n = 4000;
  auto* qmin_opt = transmission_cmd->add_option("--qmin", q_min, "Lowest wave number")
                       ->capture_default_str();
  auto* qmax_opt = transmission_cmd->add_option("--qmax", q_max, "Highest wave number")
                       ->capture_default_str();
  auto* sweep_n_opt = transmission_cmd->add_option("--n", sweep_n, "Sweep points")
                          ->capture_default_str();
  auto* threshold_opt =
      transmission_cmd->add_option("--threshold", threshold, "Resonance threshold on T")
          ->capture_default_str();

  // dynamics
  auto* dynamics = app.add_subcommand("dynamics", "Qubit control simulations");
  dynamics->fallthrough();
  dynamics->require_subcommand(1);

  auto* tls = dynamics->add_subcommand("tls", "Two-level Rabi dynamics");
  tls->fallthrough();
  double tls_deltaE = 0.03, tls_bias0 = 0.0, tls_amp = 0.0, tls_phase = 0.0;
  double tls_t_end = 1000.0, tls_dt = 0.0;
  std::string tls_freq = "", tls_initial = "left";
  tls->add_option("--deltaE", tls_deltaE, "Tunnel splitting")->capture_default_str();
  tls->add_option("--bias0", tls_bias0, "Static bias energy")->capture_default_str();
  tls->add_option("--amp", tls_amp, "Drive amplitude (energy units)")
      ->capture_default_str();
  tls->add_option("--drive-freq", tls_freq, "Drive angular frequency or 'resonant'");
  tls->add_option("--phase", tls_phase, "Drive phase")->capture_default_str();
  tls->add_option("--t-end", tls_t_end, "Simulated time")->capture_default_str();
  tls->add_option("--dt", tls_dt, "Time step (default: 1/200 of the Rabi period)");
  tls->add_option("--initial", tls_initial, "left | right | superposition")
      ->check(CLI::IsMember({"left", "right", "superposition"}))
      ->capture_default_str();

  auto* wavepacket = dynamics->add_subcommand("wavepacket", "Crank-Nicolson evolution");
  wavepacket->fallthrough();
  ModelOpts wavepacket_model;
  wavepacket_model.add_to(wavepacket);
  std::size_t wp_grid_n = 3001, wp_steps = 10000;
  double wp_dt = 0.05;
  std::string wp_initial = "doublet";
  wavepacket->add_option("--grid-n", wp_grid_n, "Grid nodes")->capture_default_str();
  wavepacket->add_option("--dt", wp_dt, "Time step")->capture_default_str();
  wavepacket->add_option("--steps", wp_steps, "Step count")->capture_default_str();
  wavepacket->add_option("--initial", wp_initial, "doublet | ground")
      ->check(CLI::IsMember({"doublet", "ground"}))
      ->capture_default_str();

  auto* prepare = dynamics->add_subcommand("prepare", "Field-preparation initial state");
  prepare->fallthrough();
  ModelOpts prepare_model;
  prepare_model.add_to(prepare);
  double prepare_field = 0.0;
  prepare->add_option("--field", prepare_field, "Longitudinal field")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!global.config_path.empty()) {
      std::ifstream in(global.config_path);
      if (!in) throw io::ParseError(global.config_path + ":0: cannot open config file");
      try {
        in >> global.config;
      } catch (const json::exception& e) {
        throw io::ParseError(global.config_path + ":0: " + e.what());
      }
    }

    if (*geometry) {
      const auto section = global.section("geometry");
      layer(curve_opt, section, "curve", curve_file);
      layer(closed_opt, section, "closed", closed);
      layer(resample_opt, section, "resample", resample);
      layer(segments_opt, section, "segments", segments_file);
      return cmd_geometry(global, curve_file, closed, resample, segments_file,
                          profile_name, geometry_json);
    }
    if (*spectrum) {
      const auto section = global.section("spectrum");
      spectrum_model.apply_config(section);
      layer(spectrum_method_opt, section, "method", spectrum_method);
      layer(spectrum_grid_opt, section, "grid_n", spectrum_grid_n);
      return cmd_spectrum(global, spectrum_model, spectrum_method, spectrum_grid_n,
                          n_states, potential_json, write_wavefunctions);
    }
    if (*split) {
      const auto section = global.section("split");
      split_model.apply_config(section);
      layer(split_method_opt, section, "method", split_method);
      layer(split_grid_opt, section, "grid_n", split_grid_n);
      return cmd_split(global, split_model, split_method, split_grid_n, split_diagnostics);
    }
    if (*transmission_cmd) {
      const auto section = global.section("transmission");
      transmission_model.apply_config(section);
      layer(qmin_opt, section, "qmin", q_min);
      layer(qmax_opt, section, "qmax", q_max);
      layer(sweep_n_opt, section, "n", sweep_n);
      layer(threshold_opt, section, "threshold", threshold);
      return cmd_transmission(global, transmission_model, q_min, q_max, sweep_n, threshold);
    }
    if (*dynamics) {
      if (*tls) {
        if (tls_dt <= 0.0)
          tls_dt = 0.005 * 2.0 * std::numbers::pi * global.params().hbar / tls_deltaE;
        return cmd_dynamics_tls(global, tls_deltaE, tls_bias0, tls_amp, tls_freq,
                                tls_phase, tls_t_end, tls_dt, tls_initial);
      }
      if (*wavepacket)
        return cmd_dynamics_wavepacket(global, wavepacket_model, wp_grid_n, wp_dt,
                                       wp_steps, wp_initial);
      if (*prepare) return cmd_dynamics_prepare(global, prepare_model, prepare_field);
    }
    throw std::invalid_argument("no subcommand selected");
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
}
