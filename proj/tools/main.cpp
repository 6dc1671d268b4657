// su3bloch CLI: algebra checks, generator comparison, trajectory evolution,
// conserved-subset search, and qutrit state reports.
#include "su3bloch/io.hpp"
#include "su3bloch/qutrit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace su3b;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----------------------------- output plumbing ----------------------------

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

// ------------------------- config file + flag merge -----------------------

json load_config_file(const std::string& path, const std::string& command) {
  if (path.empty()) return json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  json file;
  try {
    in >> file;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config file '" + path + "': " + e.what());
  }
  if (!file.is_object())
    throw std::invalid_argument("config file '" + path + "' must hold a JSON object");
  if (!file.contains("command"))
    throw std::invalid_argument("config file '" + path + "' is missing the command field");
  if (file.at("command") != command)
    throw std::invalid_argument("config file '" + path + "' is for command '" +
                                file.at("command").get<std::string>() + "', not '" +
                                command + "'");
  return file;
}

void reject_unknown_keys(const json& file, std::initializer_list<const char*> allowed) {
  for (const auto& item : file.items()) {
    if (item.key() == "command") continue;
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known)
      throw std::invalid_argument("config file: unknown parameter '" + item.key() + "'");
  }
}

double merge_number(const CLI::Option* opt, double cli_value, const json& file,
                    const char* key, double fallback) {
  if (opt->count() > 0) return cli_value;
  if (file.contains(key)) return file.at(key).get<double>();
  return fallback;
}

std::string merge_string(const CLI::Option* opt, const std::string& cli_value,
                         const json& file, const char* key, const std::string& fallback) {
  if (opt->count() > 0) return cli_value;
  if (file.contains(key)) return file.at(key).get<std::string>();
  return fallback;
}

bool merge_flag(const CLI::Option* opt, const json& file, const char* key) {
  if (opt->count() > 0) return true;
  if (file.contains(key)) return file.at(key).get<bool>();
  return false;
}

// System parameters shared by matrix, evolve, and search. Precedence:
// CLI flag, then config file, then default.
struct SystemFlags {
  std::string configuration = "cascade";
  double kappa1 = 1.0, kappa2 = 0.7, delta1 = 0.0, delta2 = 0.0;
  double omega1 = 0, omega2 = 0, drive1 = 0, drive2 = 0;
  CLI::Option* o_conf = nullptr;
  CLI::Option *o_k1 = nullptr, *o_k2 = nullptr, *o_d1 = nullptr, *o_d2 = nullptr;
  CLI::Option *o_w1 = nullptr, *o_w2 = nullptr, *o_W1 = nullptr, *o_W2 = nullptr;

  void attach(CLI::App* sub) {
    o_conf = sub->add_option("--configuration", configuration,
                             "cascade, lambda, or vee (default cascade)");
    o_k1 = sub->add_option("--kappa1", kappa1, "coupling of field 1 (default 1.0)");
    o_k2 = sub->add_option("--kappa2", kappa2, "coupling of field 2 (default 0.7)");
    o_d1 = sub->add_option("--delta1", delta1, "detuning of field 1 (default 0)");
    o_d2 = sub->add_option("--delta2", delta2, "detuning of field 2 (default 0)");
    o_w1 = sub->add_option("--omega1", omega1, "level frequency 1 (optional)");
    o_w2 = sub->add_option("--omega2", omega2, "level frequency 2 (optional)");
    o_W1 = sub->add_option("--drive1", drive1, "drive frequency 1 (optional)");
    o_W2 = sub->add_option("--drive2", drive2, "drive frequency 2 (optional)");
  }

  SystemConfig build(const json& file) const {
    SystemConfig config;
    config.configuration =
        configuration_from_string(merge_string(o_conf, configuration, file,
                                               "configuration", "cascade"));
    config.kappa1 = merge_number(o_k1, kappa1, file, "kappa1", 1.0);
    config.kappa2 = merge_number(o_k2, kappa2, file, "kappa2", 0.7);

    const auto optional_freq = [&file](const CLI::Option* opt, double cli_value,
                                       const char* key) -> std::optional<double> {
      if (opt->count() > 0) return cli_value;
      if (file.contains(key)) return file.at(key).get<double>();
      return std::nullopt;
    };
    config.omega1 = optional_freq(o_w1, omega1, "omega1");
    config.omega2 = optional_freq(o_w2, omega2, "omega2");
    config.drive1 = optional_freq(o_W1, drive1, "drive1");
    config.drive2 = optional_freq(o_W2, drive2, "drive2");

    const bool deltas_given = o_d1->count() > 0 || o_d2->count() > 0 ||
                              file.contains("delta1") || file.contains("delta2");
    if (!deltas_given && config.has_frequencies()) {
      const auto [d1, d2] = detunings_from_frequencies(*config.omega1, *config.omega2,
                                                       *config.drive1, *config.drive2);
      config.delta1 = d1;
      config.delta2 = d2;
    } else {
      config.delta1 = merge_number(o_d1, delta1, file, "delta1", 0.0);
      config.delta2 = merge_number(o_d2, delta2, file, "delta2", 0.0);
      check_frequency_consistency(config);
    }
    return config;
  }
};

constexpr std::initializer_list<const char*> kSystemKeys = {
    "configuration", "kappa1", "kappa2", "delta1", "delta2",
    "omega1",        "omega2", "drive1", "drive2"};

// ------------------------------ formatting --------------------------------

std::string format_matrix(const Matrix3& m) {
  std::ostringstream out;
  out << std::setprecision(6);
  for (int i = 0; i < 3; ++i) {
    out << " ";
    for (int j = 0; j < 3; ++j) {
      const complexd v = m(i, j);
      std::ostringstream cell;
      cell << std::setprecision(6) << v.real();
      if (std::abs(v.imag()) > 1e-14) cell << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
      out << std::setw(14) << cell.str();
    }
    out << "\n";
  }
  return out.str();
}

std::string format_matrix(const GeneratorMatrix8& m) {
  std::ostringstream out;
  for (int i = 0; i < 8; ++i) {
    out << " ";
    for (int j = 0; j < 8; ++j) {
      std::ostringstream cell;
      cell << std::setprecision(6) << m(i, j);
      out << std::setw(11) << cell.str();
    }
    out << "\n";
  }
  return out.str();
}

std::string format_blocks(const std::vector<std::vector<int>>& blocks) {
  std::ostringstream out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << (b ? " {" : "{");
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      out << (i ? "," : "") << blocks[b][i];
    out << "}";
  }
  return out.str();
}

json complex_pair(const complexd& v) { return json::array({v.real(), v.imag()}); }

// ------------------------------- subcommands ------------------------------

int run_algebra(bool as_json, double perturbation, const std::string& out_path) {
  const AlgebraReport report = verify_algebra(perturbation);
  const bool ok = report.pass();

  std::ostringstream text;
  if (as_json) {
    json j;
    j["commutator_residual"] = report.commutator_residual;
    j["anticommutator_residual"] = report.anticommutator_residual;
    j["orthonormality_residual"] = report.orthonormality_residual;
    j["f_antisymmetry_residual"] = report.f_antisymmetry_residual;
    j["d_symmetry_residual"] = report.d_symmetry_residual;
    j["jacobi_residual"] = report.jacobi_residual;
    j["max_residual"] = report.max_residual();
    j["pass"] = ok;
    text << j.dump(2) << "\n";
  } else {
    text << std::setprecision(3);
    text << "identity residuals\n";
    text << "  commutator            " << report.commutator_residual << "\n";
    text << "  anticommutator        " << report.anticommutator_residual << "\n";
    text << "  trace orthonormality  " << report.orthonormality_residual << "\n";
    text << "  f antisymmetry        " << report.f_antisymmetry_residual << "\n";
    text << "  d symmetry            " << report.d_symmetry_residual << "\n";
    text << "  jacobi                " << report.jacobi_residual << "\n";
    text << "max residual " << report.max_residual() << (ok ? "  ok" : "  FAIL") << "\n";

    text << "\nnonzero f families (i j k value)\n" << std::setprecision(15);
    for (const auto& [i, j, k, v] : nonzero_f_families())
      text << "  " << i << " " << j << " " << k << "  " << v << "\n";
    text << "nonzero d families (i j k value)\n";
    for (const auto& [i, j, k, v] : nonzero_d_families())
      text << "  " << i << " " << j << " " << k << "  " << v << "\n";
  }

  write_output(out_path, text.str());
  return ok ? 0 : 1;
}

int run_matrix(const SystemConfig& config, bool as_json, const std::string& out_path) {
  const GeneratorComparison cmp = compare_generators(config);
  const auto blocks = block_structure(cmp.derived);
  const char* orientation =
      cmp.orientation == GeneratorComparison::Orientation::Direct       ? "direct"
      : cmp.orientation == GeneratorComparison::Orientation::Transposed ? "transposed"
                                                                        : "unresolved";
  const bool ok = cmp.pattern_match &&
                  cmp.orientation != GeneratorComparison::Orientation::Unresolved &&
                  cmp.resolved_deviation() < 1e-12;

  std::ostringstream text;
  if (as_json) {
    json j;
    j["configuration"] = to_string(config.configuration);
    j["parameters"] = {{"kappa1", config.kappa1},
                       {"kappa2", config.kappa2},
                       {"delta1", config.delta1},
                       {"delta2", config.delta2}};
    j["orientation"] = orientation;
    j["deviation_direct"] = cmp.deviation_direct;
    j["deviation_transposed"] = cmp.deviation_transposed;
    j["resolved_deviation"] = cmp.resolved_deviation();
    j["pattern_match"] = cmp.pattern_match;
    j["blocks"] = blocks;
    j["pass"] = ok;
    text << j.dump(2) << "\n";
  } else {
    text << "configuration " << to_string(config.configuration) << "  kappa1="
         << config.kappa1 << " kappa2=" << config.kappa2 << " delta1=" << config.delta1
         << " delta2=" << config.delta2 << "\n\n";
    text << "dressed hamiltonian\n" << format_matrix(dressed_hamiltonian(config));
    text << "\nderived generator\n" << format_matrix(cmp.derived);
    text << "\nhand-tabulated generator\n" << format_matrix(cmp.tabulated);
    text << "\norientation " << orientation << "   max deviation "
         << cmp.resolved_deviation() << "   pattern match "
         << (cmp.pattern_match ? "yes" : "NO") << "\n";
    text << "blocks " << format_blocks(blocks) << "\n";
    text << (ok ? "ok" : "MISMATCH") << "\n";
  }

  write_output(out_path, text.str());
  return ok ? 0 : 2;
}

int run_evolve(const SystemConfig& config, const Amplitude3& c0_raw, bool normalize,
               const std::string& method, double t_max, double dt,
               const std::string& out_path) {
  if (method != "exact" && method != "rk4")
    throw std::invalid_argument("evolve: method must be exact or rk4");

  const Matrix3 rho0 = density_from_amplitudes(c0_raw, normalize);
  const Amplitude3 c0 = normalize ? Amplitude3(c0_raw / c0_raw.norm()) : c0_raw;

  const Matrix3 h = dressed_hamiltonian(config);
  Trajectory traj;
  if (method == "exact") {
    traj = exact_trajectory(h, c0, time_grid(t_max, dt));
  } else {
    traj = integrate_bloch(generator_matrix(h), bloch_from_density(rho0), t_max, dt);
  }

  std::ostringstream csv;
  write_trajectory_csv(csv, traj, config.configuration);
  write_output(out_path, csv.str());
  return 0;
}

int run_search(const SystemConfig& config, const SearchOptions& options,
               const std::string& out_path) {
  const InvariantReport report = search_invariants(config, options);
  write_output(out_path, invariant_report_json(report));
  return 0;
}

int run_qutrit(const QutritAngles& angles, const std::string& out_path) {
  const Amplitude3 c = qutrit_amplitudes(angles);
  const Matrix3 rho = qutrit_density(angles);
  const BlochVector8 s = bloch_from_density(rho);

  json j;
  j["angles"] = {{"theta0", angles.theta0},
                 {"theta1", angles.theta1},
                 {"theta2", angles.theta2},
                 {"phi", angles.phi}};
  j["amplitudes"] = json::array({complex_pair(c(0)), complex_pair(c(1)), complex_pair(c(2))});
  json density = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(complex_pair(rho(i, k)));
    density.push_back(std::move(row));
  }
  j["density"] = std::move(density);
  json bloch = json::array();
  for (int i = 0; i < 8; ++i) bloch.push_back(s(i));
  j["bloch"] = std::move(bloch);
  j["norm"] = s.squaredNorm();
  j["purity_residual"] = (rho * rho - rho).cwiseAbs().maxCoeff();

  write_output(out_path, j.dump(2) + "\n");
  return 0;
}

// ------------------------- initial-state parsing ---------------------------

Amplitude3 amplitudes_from_json(const json& value) {
  std::vector<double> flat;
  if (value.is_array() && value.size() == 3 && value[0].is_array()) {
    for (const auto& pair : value) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("amplitudes must be three [re, im] pairs");
      flat.push_back(pair[0].get<double>());
      flat.push_back(pair[1].get<double>());
    }
  } else if (value.is_array() && value.size() == 6) {
    for (const auto& v : value) flat.push_back(v.get<double>());
  } else {
    throw std::invalid_argument("amplitudes must be three [re, im] pairs");
  }
  return Amplitude3(complexd(flat[0], flat[1]), complexd(flat[2], flat[3]),
                    complexd(flat[4], flat[5]));
}

QutritAngles angles_from_values(const std::vector<double>& v) {
  if (v.size() != 4)
    throw std::invalid_argument("angles must be theta0 theta1 theta2 phi");
  return QutritAngles(v[0], v[1], v[2], v[3]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(3) Bloch-vector dynamics of three-level cascade, lambda, and vee systems"};
  app.require_subcommand(1);

  // algebra
  auto* alg = app.add_subcommand("algebra", "verify the operator algebra identities");
  std::string alg_config_path, alg_out;
  bool alg_json = false;
  double alg_perturb = 0.0;
  alg->add_option("--config", alg_config_path, "JSON run configuration");
  alg->add_option("--out", alg_out, "output path (default stdout)");
  alg->add_flag("--json", alg_json, "emit a JSON residual report");
  alg->add_option("--perturb", alg_perturb)->group("");  // negative-control hook

  // matrix
  auto* mat = app.add_subcommand("matrix", "compare derived and tabulated generators");
  SystemFlags mat_sys;
  mat_sys.attach(mat);
  std::string mat_config_path, mat_out;
  bool mat_json = false;
  mat->add_option("--config", mat_config_path, "JSON run configuration");
  mat->add_option("--out", mat_out, "output path (default stdout)");
  mat->add_flag("--json", mat_json, "emit a JSON comparison report");

  // evolve
  auto* evo = app.add_subcommand("evolve", "propagate a state and write the trajectory CSV");
  SystemFlags evo_sys;
  evo_sys.attach(evo);
  std::string evo_config_path, evo_out, evo_method = "exact";
  std::vector<double> evo_amplitudes, evo_angles;
  bool evo_normalize = false;
  double evo_tmax = 10.0, evo_dt = 0.01;
  evo->add_option("--config", evo_config_path, "JSON run configuration");
  evo->add_option("--out", evo_out, "CSV output path (default stdout)");
  auto* o_method = evo->add_option("--method", evo_method, "exact or rk4 (default exact)");
  auto* o_amp = evo->add_option("--amplitudes", evo_amplitudes,
                                "initial state as re0 im0 re1 im1 re2 im2")
                    ->expected(6);
  auto* o_ang = evo->add_option("--angles", evo_angles,
                                "initial state as qutrit angles theta0 theta1 theta2 phi")
                    ->expected(4);
  auto* o_norm = evo->add_flag("--normalize", evo_normalize,
                               "normalize the initial amplitudes instead of rejecting");
  auto* o_tmax = evo->add_option("--t-max", evo_tmax, "horizon (default 10)");
  auto* o_dt = evo->add_option("--dt", evo_dt, "sample step (default 0.01)");

  // search
  auto* sea = app.add_subcommand("search", "enumerate conserved component subsets");
  SystemFlags sea_sys;
  sea_sys.attach(sea);
  std::string sea_config_path, sea_out;
  std::uint64_t sea_seed = 42;
  int sea_trials = 5, sea_samples = 200;
  double sea_tol = 1e-8;
  bool sea_allow = false;
  sea->add_option("--config", sea_config_path, "JSON run configuration");
  sea->add_option("--out", sea_out, "JSON output path (default stdout)");
  auto* o_seed = sea->add_option("--seed", sea_seed, "trial seed (default 42)");
  auto* o_trials = sea->add_option("--trials", sea_trials, "random trials (default 5)");
  auto* o_samples = sea->add_option("--samples", sea_samples, "samples per trial (default 200)");
  auto* o_tol = sea->add_option("--tolerance", sea_tol, "conservation tolerance (default 1e-8)");
  auto* o_allow = sea->add_flag("--allow-degenerate", sea_allow,
                                "accept zero or equal couplings");

  // qutrit
  auto* qut = app.add_subcommand("qutrit", "report a parametrized qutrit state");
  std::string qut_config_path, qut_out;
  std::vector<double> qut_angles;
  qut->add_option("--config", qut_config_path, "JSON run configuration");
  qut->add_option("--out", qut_out, "JSON output path (default stdout)");
  auto* o_qang = qut->add_option("--angles", qut_angles,
                                 "theta0 theta1 theta2 phi (radians)")
                     ->expected(4);

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 4;
    }

    if (alg->parsed()) {
      const json file = load_config_file(alg_config_path, "algebra");
      reject_unknown_keys(file, {"json", "out", "perturb"});
      const bool as_json = merge_flag(alg->get_option("--json"), file, "json");
      const double perturb =
          merge_number(alg->get_option("--perturb"), alg_perturb, file, "perturb", 0.0);
      const std::string out =
          merge_string(alg->get_option("--out"), alg_out, file, "out", "");
      return run_algebra(as_json, perturb, out);
    }

    if (mat->parsed()) {
      const json file = load_config_file(mat_config_path, "matrix");
      reject_unknown_keys(file, {"configuration", "kappa1", "kappa2", "delta1", "delta2",
                                 "omega1", "omega2", "drive1", "drive2", "json", "out"});
      const SystemConfig config = mat_sys.build(file);
      const bool as_json = merge_flag(mat->get_option("--json"), file, "json");
      const std::string out =
          merge_string(mat->get_option("--out"), mat_out, file, "out", "");
      return run_matrix(config, as_json, out);
    }

    if (evo->parsed()) {
      const json file = load_config_file(evo_config_path, "evolve");
      reject_unknown_keys(file, {"configuration", "kappa1", "kappa2", "delta1", "delta2",
                                 "omega1", "omega2", "drive1", "drive2", "amplitudes",
                                 "angles", "normalize", "method", "t_max", "dt", "out"});
      const SystemConfig config = evo_sys.build(file);

      const bool has_amp = o_amp->count() > 0 || file.contains("amplitudes");
      const bool has_ang = o_ang->count() > 0 || file.contains("angles");
      if (has_amp == has_ang)
        throw std::invalid_argument(
            "evolve: give exactly one of --amplitudes and --angles");

      Amplitude3 c0;
      if (has_amp) {
        c0 = o_amp->count() > 0
                 ? Amplitude3(complexd(evo_amplitudes[0], evo_amplitudes[1]),
                              complexd(evo_amplitudes[2], evo_amplitudes[3]),
                              complexd(evo_amplitudes[4], evo_amplitudes[5]))
                 : amplitudes_from_json(file.at("amplitudes"));
      } else {
        const std::vector<double> raw =
            o_ang->count() > 0 ? evo_angles
                               : file.at("angles").get<std::vector<double>>();
        c0 = qutrit_amplitudes(angles_from_values(raw));
      }

      const bool normalize = merge_flag(o_norm, file, "normalize");
      const std::string method = merge_string(o_method, evo_method, file, "method", "exact");
      const double t_max = merge_number(o_tmax, evo_tmax, file, "t_max", 10.0);
      const double dt = merge_number(o_dt, evo_dt, file, "dt", 0.01);
      const std::string out = merge_string(evo->get_option("--out"), evo_out, file, "out", "");
      return run_evolve(config, c0, normalize, method, t_max, dt, out);
    }

    if (sea->parsed()) {
      const json file = load_config_file(sea_config_path, "search");
      reject_unknown_keys(file, {"configuration", "kappa1", "kappa2", "delta1", "delta2",
                                 "omega1", "omega2", "drive1", "drive2", "seed", "trials",
                                 "samples", "tolerance", "allow_degenerate", "out"});
      const SystemConfig config = sea_sys.build(file);

      SearchOptions options;
      options.seed = o_seed->count() > 0 ? sea_seed
                     : file.contains("seed") ? file.at("seed").get<std::uint64_t>()
                                             : 42;
      options.trials = static_cast<int>(
          merge_number(o_trials, sea_trials, file, "trials", 5));
      options.samples = static_cast<int>(
          merge_number(o_samples, sea_samples, file, "samples", 200));
      options.tolerance = merge_number(o_tol, sea_tol, file, "tolerance", 1e-8);
      options.allow_degenerate = merge_flag(o_allow, file, "allow_degenerate");

      const std::string out = merge_string(sea->get_option("--out"), sea_out, file, "out", "");
      return run_search(config, options, out);
    }

    if (qut->parsed()) {
      const json file = load_config_file(qut_config_path, "qutrit");
      reject_unknown_keys(file, {"angles", "out"});
      std::vector<double> raw;
      if (o_qang->count() > 0)
        raw = qut_angles;
      else if (file.contains("angles"))
        raw = file.at("angles").get<std::vector<double>>();
      else
        throw std::invalid_argument("qutrit: --angles is required");
      const std::string out = merge_string(qut->get_option("--out"), qut_out, file, "out", "");
      return run_qutrit(angles_from_values(raw), out);
    }

    return 4;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 4;
  }
}
