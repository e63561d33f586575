// Command-line front end: simulate trajectories, sample energy series,
// report periods, sweep method comparisons and emit figure data tables.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relosc/analytic.hpp"
#include "relosc/diagnostics.hpp"
#include "relosc/dynamics.hpp"
#include "relosc/hbm.hpp"
#include "relosc/io.hpp"
#include "relosc/oracle.hpp"
#include "relosc/version.hpp"

namespace {

using namespace relosc;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct OutputOpts {
  std::string out = "-";
  std::string format = "csv";
};

std::string join_command(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd += ' ';
    cmd += argv[i];
  }
  return cmd;
}

void emit(const Table& table, const OutputOpts& opts) {
  std::ostringstream buffer;
  if (opts.format == "csv") {
    write_csv(buffer, table);
  } else if (opts.format == "json") {
    write_json(buffer, table);
  } else {
    throw InvalidRequestError("unknown format '" + opts.format +
                              "' (expected csv or json)");
  }
  if (opts.out == "-") {
    std::cout << buffer.str();
    return;
  }
  std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw InvalidRequestError("cannot open output file '" + opts.out + "'");
  }
  file << buffer.str();
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream file(path);
  if (!file) {
    throw InvalidRequestError("cannot read config file '" + path + "'");
  }
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidRequestError(std::string("config file is not valid JSON: ") +
                              e.what());
  }
  if (!j.is_object()) {
    throw InvalidRequestError("config file must hold a JSON object");
  }
  return j;
}

// Command-line flags win over config-file values.
template <class T>
void merge_option(const nlohmann::json& cfg, const CLI::Option* opt,
                  const char* key, T& var) {
  if (opt != nullptr && opt->count() > 0) return;
  if (!cfg.contains(key)) return;
  try {
    var = cfg.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidRequestError(std::string("config key '") + key +
                              "' has the wrong type");
  }
}

bool option_or_config(const CLI::Option* opt, const nlohmann::json& cfg,
                      const char* key) {
  return (opt != nullptr && opt->count() > 0) || cfg.contains(key);
}

std::optional<double> resolve_freq_override(const std::string& mode,
                                            Beta beta) {
  if (mode.empty()) return std::nullopt;  // producer's own frequency ratio
  if (mode == "eq10") return freq_ratio(beta);
  if (mode == "eq22") return hbm_omega(beta);
  throw InvalidRequestError("unknown frequency override '" + mode +
                            "' (expected eq10 or eq22)");
}

std::vector<Beta> parse_beta_grid(const std::string& grid) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(grid);
  if (!(ss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      !ss.eof()) {
    throw InvalidRequestError("beta grid must be start:stop:step, got '" +
                              grid + "'");
  }
  if (!(step > 0.0) || stop < start) {
    throw InvalidRequestError("beta grid needs step > 0 and stop >= start");
  }
  std::vector<Beta> betas;
  for (int i = 0;; ++i) {
    const double value = start + step * i;
    if (value > stop + 0.5 * step) break;
    betas.push_back(Beta{value});
  }
  return betas;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<std::pair<std::string, std::string>> base_meta(
    const std::string& command_line) {
  return {{"version", kVersion}, {"command", command_line}};
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOpts {
  double beta = 0.0;
  std::string method = "trial";
  double t_end = 30.0;
  int samples = 3000;
  double tol_rel = 1e-12;
  double tol_abs = 1e-12;
  OutputOpts output;
};

void run_simulate(const SimulateOpts& o, const std::string& command_line) {
  Beta beta{o.beta};
  if (o.samples < 2) {
    throw InvalidRequestError("simulate needs at least 2 samples");
  }
  if (!(o.t_end > 0.0)) {
    throw InvalidRequestError("simulate needs t-end > 0");
  }
  EvaluateOptions eo;
  eo.rel_tol = o.tol_rel;
  eo.abs_tol = o.tol_abs;
  const auto solution = make_solution(o.method, beta, o.t_end, eo);
  const Trajectory traj = sample_trajectory(*solution, o.t_end, o.samples);

  Table table;
  table.meta = base_meta(command_line);
  table.meta.emplace_back("beta", format_double(o.beta));
  table.meta.emplace_back("method", std::string(solution->label()));
  table.meta.emplace_back("t_end", format_double(o.t_end));
  table.meta.emplace_back("samples", std::to_string(o.samples));
  table.columns = {"t", "x", "xdot"};
  for (const OscState& s : traj.samples) {
    table.rows.push_back(
        {format_double(s.t), format_double(s.x), format_double(s.xdot)});
  }
  emit(table, o.output);
}

// ---------------------------------------------------------------------------
// energy

struct EnergyOpts {
  double beta = 0.0;
  std::string method = "trial";
  double t_end = 0.0;  // 0 = derive from measured period
  double periods = 2.0;
  int samples = 2000;
  std::string freq_override;
  double tol_rel = 1e-12;
  double tol_abs = 1e-12;
  OutputOpts output;
};

void run_energy(const EnergyOpts& o, const std::string& command_line) {
  Beta beta{o.beta};
  if (o.samples < 2) {
    throw InvalidRequestError("energy needs at least 2 samples");
  }
  if (!(o.periods > 0.0)) {
    throw InvalidRequestError("energy needs periods > 0");
  }
  EvaluateOptions eo;
  eo.rel_tol = o.tol_rel;
  eo.abs_tol = o.tol_abs;

  const double hint =
      o.t_end > 0.0 ? o.t_end : measurement_span(beta);
  const auto solution = make_solution(o.method, beta, hint, eo);

  double window = o.t_end;
  if (!(window > 0.0)) {
    const Trajectory scan = sample_trajectory(*solution, hint, 8001);
    window = o.periods * measure_period(scan);
  }

  const auto freq = resolve_freq_override(o.freq_override, beta);
  const EnergySeries series =
      energy_series(*solution, window, o.samples, freq);

  Table table;
  table.meta = base_meta(command_line);
  table.meta.emplace_back("beta", format_double(o.beta));
  table.meta.emplace_back("method", series.label);
  table.meta.emplace_back("freq_ratio_used",
                          format_double(series.freq_ratio_used));
  table.meta.emplace_back("window", format_double(window));
  table.meta.emplace_back("samples", std::to_string(o.samples));
  table.columns = {"t", "x", "kinetic", "potential", "total"};
  for (const EnergySample& s : series.samples) {
    table.rows.push_back({format_double(s.t), format_double(s.x),
                          format_double(s.kinetic), format_double(s.potential),
                          format_double(s.total)});
  }
  emit(table, o.output);
}

// ---------------------------------------------------------------------------
// period

struct PeriodOpts {
  double beta = 0.0;
  double tol_rel = 1e-12;
  double tol_abs = 1e-12;
  OutputOpts output;
};

void run_period(const PeriodOpts& o, const std::string& command_line) {
  Beta beta{o.beta};
  const double p_trial = kTwoPi * period_ratio(beta);
  const double p_hbm = kTwoPi / hbm_omega(beta);
  const double p_exact = exact_period(beta);

  IntegratorConfig config;
  config.rel_tol = o.tol_rel;
  config.abs_tol = o.tol_abs;
  config.t_end = 3.5 * p_exact;
  const double p_measured = measure_period(integrate(beta, config));

  const auto rel = [](double a, double b) { return (a - b) / b; };

  Table table;
  table.meta = base_meta(command_line);
  table.meta.emplace_back("beta", format_double(o.beta));
  table.columns = {"beta",
                   "period_trial",
                   "period_hbm",
                   "period_exact",
                   "period_measured",
                   "d_trial_hbm",
                   "d_trial_exact",
                   "d_trial_measured",
                   "d_hbm_exact",
                   "d_hbm_measured",
                   "d_exact_measured"};
  table.rows.push_back({format_double(o.beta), format_double(p_trial),
                        format_double(p_hbm), format_double(p_exact),
                        format_double(p_measured),
                        format_double(rel(p_trial, p_hbm)),
                        format_double(rel(p_trial, p_exact)),
                        format_double(rel(p_trial, p_measured)),
                        format_double(rel(p_hbm, p_exact)),
                        format_double(rel(p_hbm, p_measured)),
                        format_double(rel(p_exact, p_measured))});
  emit(table, o.output);
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
  std::string beta_grid;
  double beta = 0.0;
  bool beta_set = false;
  std::string methods = "trial,hbm";
  int samples = 2000;
  double periods = 2.0;
  std::string freq_override;
  double tol_rel = 1e-12;
  double tol_abs = 1e-12;
  OutputOpts output;
};

int run_compare(const CompareOpts& o, const std::string& command_line) {
  std::vector<Beta> betas;
  if (!o.beta_grid.empty()) {
    betas = parse_beta_grid(o.beta_grid);
  } else if (o.beta_set) {
    betas.push_back(Beta{o.beta});
  } else {
    throw InvalidRequestError("compare needs --beta or --beta-grid");
  }
  const std::vector<std::string> methods = split_list(o.methods);
  if (methods.empty()) {
    throw InvalidRequestError("compare needs a non-empty method list");
  }

  EvaluateOptions eo;
  eo.min_samples = o.samples;
  eo.min_periods = o.periods;
  eo.rel_tol = o.tol_rel;
  eo.abs_tol = o.tol_abs;
  // A frequency override has to be resolved per beta, so the sweep runs once
  // per beta with the override filled in.
  std::vector<MethodReport> reports;
  for (const Beta& beta : betas) {
    EvaluateOptions cell = eo;
    cell.freq_override = resolve_freq_override(o.freq_override, beta);
    auto part = sweep({beta}, methods, cell);
    reports.insert(reports.end(), part.begin(), part.end());
  }

  Table table;
  table.meta = base_meta(command_line);
  table.meta.emplace_back(
      "grid", o.beta_grid.empty() ? format_double(o.beta) : o.beta_grid);
  table.meta.emplace_back("methods", o.methods);
  table.meta.emplace_back("samples", std::to_string(o.samples));
  table.meta.emplace_back("periods", format_double(o.periods));
  table.meta.emplace_back(
      "freq_override",
      o.freq_override.empty() ? std::string("producer") : o.freq_override);
  table.columns = {"beta",
                   "method",
                   "mean_total",
                   "max_abs_deviation",
                   "peak_to_peak",
                   "period_estimate",
                   "period_error_vs_oracle",
                   "amplitude_estimate",
                   "amplitude_error_vs_oracle",
                   "error"};
  bool any_ok = false;
  for (const MethodReport& r : reports) {
    any_ok = any_ok || r.ok();
    table.rows.push_back({format_double(r.beta), r.method,
                          format_double(r.mean_total),
                          format_double(r.max_abs_deviation),
                          format_double(r.peak_to_peak),
                          format_double(r.period_estimate),
                          format_double(r.period_error_vs_oracle),
                          format_double(r.amplitude_estimate),
                          format_double(r.amplitude_error_vs_oracle),
                          r.error});
  }
  emit(table, o.output);
  return any_ok ? 0 : 3;
}

// ---------------------------------------------------------------------------
// figure

struct FigureOpts {
  std::string id;
  std::string freq_override;
  OutputOpts output;
};

void run_figure(const FigureOpts& o, const std::string& command_line) {
  Table table;
  table.meta = base_meta(command_line);
  table.meta.emplace_back("figure", o.id);

  const auto trial_handles = [](std::initializer_list<double> betas) {
    std::vector<TrialSolution> handles;
    for (double b : betas) handles.emplace_back(Beta{b});
    return handles;
  };

  if (o.id == "1") {
    const auto handles = trial_handles({0.1, 0.3, 0.5, 0.7});
    table.meta.emplace_back("betas", "0.1,0.3,0.5,0.7");
    table.columns = {"t", "x_b0.1", "x_b0.3", "x_b0.5", "x_b0.7"};
    const int n = 2001;
    const double t_end = 40.0;
    for (int i = 0; i < n; ++i) {
      const double t = t_end * i / (n - 1);
      std::vector<std::string> row{format_double(t)};
      for (const auto& h : handles) row.push_back(format_double(h.eval(t).x));
      table.rows.push_back(std::move(row));
    }
  } else if (o.id == "2a" || o.id == "2b") {
    table.meta.emplace_back("betas", "0.005:0.995:0.005");
    table.columns = {"beta",
                     o.id == "2a" ? "freq_ratio" : "period_ratio"};
    for (int i = 1; i <= 199; ++i) {
      const Beta beta{0.005 * i};
      const double value =
          o.id == "2a" ? freq_ratio(beta) : period_ratio(beta);
      table.rows.push_back(
          {format_double(beta.value()), format_double(value)});
    }
  } else if (o.id == "3") {
    const std::vector<double> betas{0.05, 0.365, 0.68, 0.995};
    table.meta.emplace_back("betas", "0.05,0.365,0.68,0.995");
    table.columns = {"x", "F_b0.05", "F_b0.365", "F_b0.68", "F_b0.995"};
    const int n = 401;
    for (int i = 0; i < n; ++i) {
      const double x = -1.0 + 2.0 * i / (n - 1);
      std::vector<std::string> row{format_double(x)};
      for (double b : betas) {
        row.push_back(format_double(hook_force(Beta{b}, x)));
      }
      table.rows.push_back(std::move(row));
    }
  } else if (o.id == "4a" || o.id == "4b" || o.id == "5") {
    const Beta beta{0.8};
    table.meta.emplace_back("betas", "0.8");
    std::unique_ptr<Solution> solution;
    double period = 0.0;
    if (o.id == "5") {
      auto hbm = std::make_unique<HbmSolution>(beta);
      period = hbm->period();
      solution = std::move(hbm);
    } else {
      auto trial = std::make_unique<TrialSolution>(beta);
      period = trial->period();
      solution = std::move(trial);
    }
    const double window = (o.id == "4b" ? 1.0 : 2.0) * period;
    const auto freq = resolve_freq_override(o.freq_override, beta);
    const EnergySeries series = energy_series(*solution, window, 2001, freq);
    table.meta.emplace_back("freq_ratio_used",
                            format_double(series.freq_ratio_used));
    if (o.id == "4b") {
      table.columns = {"x", "kinetic", "potential", "total"};
      for (const EnergySample& s : series.samples) {
        table.rows.push_back({format_double(s.x), format_double(s.kinetic),
                              format_double(s.potential),
                              format_double(s.total)});
      }
    } else {
      table.columns = {"t", "x", "kinetic", "potential", "total"};
      for (const EnergySample& s : series.samples) {
        table.rows.push_back({format_double(s.t), format_double(s.x),
                              format_double(s.kinetic),
                              format_double(s.potential),
                              format_double(s.total)});
      }
    }
  } else {
    throw InvalidRequestError("unknown figure id '" + o.id +
                              "' (expected 1, 2a, 2b, 3, 4a, 4b or 5)");
  }
  emit(table, o.output);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string command_line = join_command(argc, argv);

  CLI::App app{"relativistic nondissipative harmonic oscillator toolkit"};
  app.require_subcommand(1);

  SimulateOpts sim;
  EnergyOpts ene;
  PeriodOpts per;
  CompareOpts cmp;
  FigureOpts fig;
  std::string config_path;

  auto add_output = [&](CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--out", out.out, "output path, '-' for stdout");
    cmd->add_option("--format", out.format, "csv or json");
    cmd->add_option("--config", config_path,
                    "JSON config file; flags override its values");
  };

  CLI::App* c_sim = app.add_subcommand("simulate", "sample one trajectory");
  auto* sim_beta = c_sim->add_option("--beta", sim.beta, "initial velocity, 0 < beta < 1");
  auto* sim_method = c_sim->add_option("--method", sim.method, "trial, hbm or ode");
  auto* sim_tend = c_sim->add_option("--t-end", sim.t_end, "time span");
  auto* sim_samples = c_sim->add_option("--samples", sim.samples, "row count");
  auto* sim_rel = c_sim->add_option("--tol-rel", sim.tol_rel, "integrator relative tolerance");
  auto* sim_abs = c_sim->add_option("--tol-abs", sim.tol_abs, "integrator absolute tolerance");
  add_output(c_sim, sim.output);

  CLI::App* c_ene = app.add_subcommand("energy", "sample the energy split");
  auto* ene_beta = c_ene->add_option("--beta", ene.beta, "initial velocity");
  auto* ene_method = c_ene->add_option("--method", ene.method, "trial, hbm or ode");
  auto* ene_tend = c_ene->add_option("--t-end", ene.t_end, "window; default periods x measured period");
  auto* ene_periods = c_ene->add_option("--periods", ene.periods, "window length in periods");
  auto* ene_samples = c_ene->add_option("--samples", ene.samples, "row count");
  auto* ene_freq = c_ene->add_option("--freq-override", ene.freq_override,
                                     "eq10 or eq22 frequency in the potential");
  auto* ene_rel = c_ene->add_option("--tol-rel", ene.tol_rel, "integrator relative tolerance");
  auto* ene_abs = c_ene->add_option("--tol-abs", ene.tol_abs, "integrator absolute tolerance");
  add_output(c_ene, ene.output);

  CLI::App* c_per = app.add_subcommand("period", "compare the four period routes");
  auto* per_beta = c_per->add_option("--beta", per.beta, "initial velocity");
  auto* per_rel = c_per->add_option("--tol-rel", per.tol_rel, "integrator relative tolerance");
  auto* per_abs = c_per->add_option("--tol-abs", per.tol_abs, "integrator absolute tolerance");
  add_output(c_per, per.output);

  CLI::App* c_cmp = app.add_subcommand("compare", "sweep methods over a beta grid");
  auto* cmp_grid = c_cmp->add_option("--beta-grid", cmp.beta_grid, "start:stop:step");
  auto* cmp_beta = c_cmp->add_option("--beta", cmp.beta, "single beta");
  auto* cmp_methods = c_cmp->add_option("--methods", cmp.methods, "comma list: trial,hbm,ode");
  auto* cmp_samples = c_cmp->add_option("--samples", cmp.samples, "energy samples per cell");
  auto* cmp_periods = c_cmp->add_option("--periods", cmp.periods, "energy window in periods");
  auto* cmp_freq = c_cmp->add_option("--freq-override", cmp.freq_override,
                                     "eq10 or eq22 frequency in the potential");
  auto* cmp_rel = c_cmp->add_option("--tol-rel", cmp.tol_rel, "integrator relative tolerance");
  auto* cmp_abs = c_cmp->add_option("--tol-abs", cmp.tol_abs, "integrator absolute tolerance");
  add_output(c_cmp, cmp.output);

  CLI::App* c_fig = app.add_subcommand("figure", "emit figure data tables");
  auto* fig_id = c_fig->add_option("--id", fig.id, "1, 2a, 2b, 3, 4a, 4b or 5");
  auto* fig_freq = c_fig->add_option("--freq-override", fig.freq_override,
                                     "eq10 or eq22 frequency in the potential");
  add_output(c_fig, fig.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const nlohmann::json cfg = load_config(config_path);

    if (c_sim->parsed()) {
      merge_option(cfg, sim_beta, "beta", sim.beta);
      merge_option(cfg, sim_method, "method", sim.method);
      merge_option(cfg, sim_tend, "t-end", sim.t_end);
      merge_option(cfg, sim_samples, "samples", sim.samples);
      merge_option(cfg, sim_rel, "tol-rel", sim.tol_rel);
      merge_option(cfg, sim_abs, "tol-abs", sim.tol_abs);
      if (!option_or_config(sim_beta, cfg, "beta")) {
        throw InvalidRequestError("simulate needs --beta");
      }
      run_simulate(sim, command_line);
      return 0;
    }
    if (c_ene->parsed()) {
      merge_option(cfg, ene_beta, "beta", ene.beta);
      merge_option(cfg, ene_method, "method", ene.method);
      merge_option(cfg, ene_tend, "t-end", ene.t_end);
      merge_option(cfg, ene_periods, "periods", ene.periods);
      merge_option(cfg, ene_samples, "samples", ene.samples);
      merge_option(cfg, ene_freq, "freq-override", ene.freq_override);
      merge_option(cfg, ene_rel, "tol-rel", ene.tol_rel);
      merge_option(cfg, ene_abs, "tol-abs", ene.tol_abs);
      if (!option_or_config(ene_beta, cfg, "beta")) {
        throw InvalidRequestError("energy needs --beta");
      }
      run_energy(ene, command_line);
      return 0;
    }
    if (c_per->parsed()) {
      merge_option(cfg, per_beta, "beta", per.beta);
      merge_option(cfg, per_rel, "tol-rel", per.tol_rel);
      merge_option(cfg, per_abs, "tol-abs", per.tol_abs);
      if (!option_or_config(per_beta, cfg, "beta")) {
        throw InvalidRequestError("period needs --beta");
      }
      run_period(per, command_line);
      return 0;
    }
    if (c_cmp->parsed()) {
      merge_option(cfg, cmp_grid, "beta-grid", cmp.beta_grid);
      merge_option(cfg, cmp_beta, "beta", cmp.beta);
      merge_option(cfg, cmp_methods, "methods", cmp.methods);
      merge_option(cfg, cmp_samples, "samples", cmp.samples);
      merge_option(cfg, cmp_periods, "periods", cmp.periods);
      merge_option(cfg, cmp_freq, "freq-override", cmp.freq_override);
      merge_option(cfg, cmp_rel, "tol-rel", cmp.tol_rel);
      merge_option(cfg, cmp_abs, "tol-abs", cmp.tol_abs);
      cmp.beta_set = option_or_config(cmp_beta, cfg, "beta");
      return run_compare(cmp, command_line);
    }
    if (c_fig->parsed()) {
      merge_option(cfg, fig_id, "id", fig.id);
      merge_option(cfg, fig_freq, "freq-override", fig.freq_override);
      if (!option_or_config(fig_id, cfg, "id")) {
        throw InvalidRequestError("figure needs --id");
      }
      run_figure(fig, command_line);
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
