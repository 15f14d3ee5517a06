// falling-sindy: discover governing equations for falling-body trajectories
// via sequentially thresholded least squares, simulate drag models, and run
// the prediction benchmark. Subcommands: simulate, fit, sweep, benchmark,
// noise-estimate, plot.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sindy/sindy.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// temp + rename so partially written outputs never appear under their final
// name
void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
  }
  fs::rename(tmp, path);
}

void write_manifest(const fs::path& out_dir, const std::string& subcommand,
                    const json& config, const std::vector<std::string>& warnings) {
  json manifest = {{"tool", "falling-sindy"},
                   {"subcommand", subcommand},
                   {"config", config},
                   {"warnings", warnings}};
  write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string input;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string format = "csv";
  double delta = 0.1;
  int window = 35;
  int degree = 3;
  bool group = false;
  bool plain = false;
  bool no_smooth = false;
  double horizon_s = 2.8;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
  auto* in = cmd->add_option("--input", o.input, "input trajectory CSV");
  if (needs_input) in->required()->check(CLI::ExistingFile);
  cmd->add_option("--out-dir", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "root RNG seed");
  cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--delta", o.delta, "sparsity threshold");
  cmd->add_option("--window", o.window, "Savitzky-Golay window length");
  cmd->add_option("--degree", o.degree, "polynomial library degree");
  cmd->add_flag("--group", o.group, "group-sparsity pipeline");
  cmd->add_flag("--plain", o.plain, "per-trajectory pipeline");
  cmd->add_flag("--no-smooth", o.no_smooth, "differentiate without smoothing");
  cmd->add_option("--horizon-s", o.horizon_s, "prediction horizon in seconds");
}

// Flags override --config JSON, which overrides defaults.
void apply_json_config(CLI::App* cmd, const std::string& config_path) {
  if (config_path.empty()) return;
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
  json cfg = json::parse(in);
  for (auto& [key, value] : cfg.items()) {
    auto* opt = cmd->get_option_no_throw("--" + key);
    if (!opt || opt->count() > 0) continue;
    if (value.is_boolean()) {
      if (!value.get<bool>()) continue;
      opt->add_result("true");
    } else {
      opt->add_result(value.is_string() ? value.get<std::string>()
                                        : value.dump());
    }
    opt->run_callback();  // added after parse(), so push into the bound var
  }
}

sindy::SmootherConfig smoother_of(const CommonOpts& o) {
  sindy::SmootherConfig cfg;
  cfg.window_length = o.window;
  return cfg;
}

std::string trajectories_csv(const std::vector<sindy::Trajectory>& trajs) {
  std::ostringstream ss;
  sindy::write_trajectories(ss, trajs);
  return ss.str();
}

// -------------------------- simulate ---------------------------------------

int cmd_simulate(const CommonOpts& o, const std::string& model_kind, double g,
                 double coef, double lin, double quad, double radius,
                 double mass, double rho, double mu, double x0, double v0,
                 double dt, int steps, const std::vector<double>& etas,
                 bool synthetic_set) {
  fs::create_directories(o.out_dir);
  std::vector<std::string> warnings;
  std::vector<sindy::Trajectory> clean;

  if (synthetic_set) {
    // five digital balls, two drops each, the standard synthetic protocol
    const std::vector<double> drags = {-0.1, -0.3, -0.3, -0.5, -0.7};
    for (std::size_t b = 0; b < drags.size(); ++b)
      for (int drop = 1; drop <= 2; ++drop)
        clean.push_back(sindy::simulate_drop(sindy::LinearDrag{-9.8, drags[b]},
                                             x0, v0, dt, steps,
                                             "ball_" + std::to_string(b + 1), drop)
                            .traj);
  } else {
    sindy::DragModel model;
    if (model_kind == "constant")
      model = sindy::ConstantAcceleration{g};
    else if (model_kind == "linear")
      model = sindy::LinearDrag{g, coef};
    else if (model_kind == "quadratic")
      model = sindy::QuadraticDrag{g, lin, quad};
    else if (model_kind == "reynolds")
      model = sindy::ReynoldsDependent{{radius, mass, "ball"}, {rho, mu}, g};
    else
      throw sindy::config_error("unknown drag model '" + model_kind + "'");
    auto sim = sindy::simulate_drop(model, x0, v0, dt, steps, "ball_1", 1);
    if (sim.drag_crisis) warnings.push_back("entered drag-crisis range");
    // velocity / Reynolds side table
    std::ostringstream extra;
    extra << "time_s,height_m,velocity_ms,reynolds\n";
    for (std::size_t i = 0; i < sim.traj.times.size(); ++i)
      extra << fmt(sim.traj.times[i]) << ',' << fmt(sim.traj.heights[i]) << ','
            << fmt(sim.velocities[i]) << ',' << fmt(sim.reynolds[i]) << '\n';
    write_file_atomic(fs::path(o.out_dir) / "sim_detail.csv", extra.str());
    clean.push_back(sim.traj);
  }

  write_file_atomic(fs::path(o.out_dir) / "trajectories.csv",
                    trajectories_csv(clean));
  for (double eta : etas) {
    std::vector<sindy::Trajectory> noisy;
    for (std::size_t i = 0; i < clean.size(); ++i)
      noisy.push_back(
          sindy::add_gaussian_noise(clean[i], eta, sindy::derive_seed(o.seed, i)));
    char name[64];
    std::snprintf(name, sizeof name, "noisy_eta_%g.csv", eta);
    write_file_atomic(fs::path(o.out_dir) / name, trajectories_csv(noisy));
  }

  json config = {{"model", synthetic_set ? "synthetic-set" : model_kind},
                 {"x0", x0},       {"v0", v0},   {"dt", dt},
                 {"steps", steps}, {"etas", etas}, {"seed", o.seed}};
  write_manifest(o.out_dir, "simulate", config, warnings);
  return 0;
}

// ----------------------------- fit -----------------------------------------

int cmd_fit(const CommonOpts& o) {
  fs::create_directories(o.out_dir);
  auto trajs = sindy::load_trajectories(o.input);
  const auto smoother = smoother_of(o);
  sindy::FitConfig fit;
  fit.threshold = o.delta;
  std::vector<std::string> warnings;

  std::vector<sindy::SparseModel> models;
  if (o.group) {
    std::vector<sindy::LibraryMatrix> libs;
    std::vector<Eigen::VectorXd> targets;
    for (const auto& traj : trajs) {
      auto [lib, tgt] = sindy::second_order_regression_data(
          traj, smoother, o.degree, !o.no_smooth);
      libs.push_back(std::move(lib));
      targets.push_back(std::move(tgt));
    }
    models = sindy::group_stlsq(libs, targets, fit).models;
  } else {
    for (const auto& traj : trajs)
      models.push_back(sindy::fit_second_order(traj, smoother, fit, o.degree,
                                               !o.no_smooth));
  }

  json out = json::array();
  std::ostringstream equations, heatmap;
  heatmap << "ball_id,drop_id";
  for (const auto& term : models.front().terms) heatmap << ',' << term.name;
  heatmap << '\n';
  for (std::size_t i = 0; i < models.size(); ++i) {
    json m = sindy::to_json(models[i]);
    m["ball_id"] = trajs[i].ball_id;
    m["drop_id"] = trajs[i].drop_id;
    out.push_back(m);
    equations << trajs[i].ball_id << " drop " << trajs[i].drop_id << ": "
              << sindy::format_equation(models[i]) << '\n';
    if (models[i].empty_model)
      warnings.push_back(trajs[i].ball_id + ": empty model");
    heatmap << trajs[i].ball_id << ',' << trajs[i].drop_id;
    for (Eigen::Index j = 0; j < models[i].coefficients.size(); ++j)
      heatmap << ',' << fmt(std::abs(models[i].coefficients[j]));
    heatmap << '\n';
  }
  write_file_atomic(fs::path(o.out_dir) / "models.json", out.dump(2) + "\n");
  write_file_atomic(fs::path(o.out_dir) / "equations.txt", equations.str());
  write_file_atomic(fs::path(o.out_dir) / "heatmap.csv", heatmap.str());
  std::cout << equations.str();

  json config = {{"input", o.input},   {"delta", o.delta},
                 {"window", o.window}, {"degree", o.degree},
                 {"group", o.group},   {"smooth", !o.no_smooth}};
  write_manifest(o.out_dir, "fit", config, warnings);
  return 0;
}

// ---------------------------- sweep -----------------------------------------

int cmd_sweep(const CommonOpts& o, const std::vector<double>& deltas) {
  if (deltas.empty()) throw sindy::config_error("sweep needs at least one --delta");
  fs::create_directories(o.out_dir);
  auto trajs = sindy::load_trajectories(o.input);
  auto entries = sindy::sparsity_sweep(
      trajs, deltas,
      o.group ? sindy::SweepPipeline::group : sindy::SweepPipeline::plain,
      smoother_of(o), o.degree, !o.no_smooth);

  std::ostringstream csv;
  csv << "delta,ball_id,drop_id,equation,term_count\n";
  std::vector<std::string> warnings;
  for (const auto& entry : entries) {
    if (entry.failed) {
      warnings.push_back("delta " + fmt(entry.delta) + " failed: " + entry.error);
      continue;
    }
    for (std::size_t i = 0; i < entry.models.size(); ++i)
      csv << fmt(entry.delta) << ',' << trajs[i].ball_id << ','
          << trajs[i].drop_id << ",\"" << sindy::format_equation(entry.models[i])
          << "\"," << entry.models[i].support().size() << '\n';
  }
  write_file_atomic(fs::path(o.out_dir) / "sweep.csv", csv.str());

  json config = {{"input", o.input},
                 {"deltas", deltas},
                 {"group", o.group},
                 {"degree", o.degree},
                 {"window", o.window}};
  write_manifest(o.out_dir, "sweep", config, warnings);
  return 0;
}

// -------------------------- benchmark ---------------------------------------

const char* template_name(sindy::TemplateId id) {
  switch (id) {
    case sindy::TemplateId::T1: return "T1";
    case sindy::TemplateId::T2: return "T2";
    case sindy::TemplateId::T3: return "T3";
    default: return "T4";
  }
}

int cmd_benchmark(const CommonOpts& o, bool export_forecasts) {
  fs::create_directories(o.out_dir);
  auto trajs = sindy::load_trajectories(o.input);
  sindy::BenchmarkConfig cfg;
  cfg.smoother = smoother_of(o);
  cfg.smooth = !o.no_smooth;
  cfg.horizon_s = o.horizon_s;
  auto report = sindy::run_benchmark(trajs, cfg);

  std::ostringstream csv;
  csv << "ball_id,train_drop,template,pred_height_m,abs_error_m,diverged\n";
  json cells = json::array();
  for (const auto& cell : report.cells) {
    csv << cell.ball_id << ',' << cell.train_drop << ','
        << template_name(cell.template_id) << ',';
    if (cell.prediction)
      csv << fmt(cell.prediction->predicted_height) << ','
          << fmt(cell.prediction->abs_error);
    else
      csv << ",";
    csv << ',' << (cell.long_forecast_diverged ? 1 : 0) << '\n';

    json j = {{"ball_id", cell.ball_id},
              {"train_drop", cell.train_drop},
              {"template", template_name(cell.template_id)},
              {"model", sindy::to_json(cell.model)},
              {"long_forecast_diverged", cell.long_forecast_diverged}};
    if (cell.prediction)
      j["prediction"] = {{"predicted_height", cell.prediction->predicted_height},
                         {"observed_height", cell.prediction->observed_height},
                         {"abs_error", cell.prediction->abs_error},
                         {"diverged", cell.prediction->diverged}};
    cells.push_back(std::move(j));

    if (export_forecasts) {
      // per-cell 15 s forecast series for plotting
      const sindy::Trajectory* train = nullptr;
      for (const auto& traj : trajs)
        if (traj.ball_id == cell.ball_id && traj.drop_id == cell.train_drop)
          train = &traj;
      const auto [x0, v0] = sindy::initial_conditions(*train, cfg);
      auto forecast = sindy::long_forecast(cell.model, x0, v0, cfg.long_horizon_s);
      std::ostringstream fc;
      fc << "time_s,height_m\n";
      for (std::size_t i = 0; i < forecast.traj.times.size(); ++i)
        fc << fmt(forecast.traj.times[i]) << ',' << fmt(forecast.traj.heights[i])
           << '\n';
      fs::create_directories(fs::path(o.out_dir) / "forecasts");
      write_file_atomic(fs::path(o.out_dir) / "forecasts" /
                            (cell.ball_id + "_drop" + std::to_string(cell.train_drop) +
                             "_" + template_name(cell.template_id) + ".csv"),
                        fc.str());
    }
  }
  write_file_atomic(fs::path(o.out_dir) / "benchmark.csv", csv.str());
  write_file_atomic(fs::path(o.out_dir) / "benchmark.json", cells.dump(2) + "\n");

  std::vector<std::string> warnings;
  for (const auto& ball : report.missing_cross_drop)
    warnings.push_back(ball + ": single drop, no cross-drop prediction");
  json config = {{"input", o.input},
                 {"horizon_s", o.horizon_s},
                 {"window", o.window},
                 {"smooth", !o.no_smooth}};
  write_manifest(o.out_dir, "benchmark", config, warnings);
  return 0;
}

// ------------------------ noise-estimate ------------------------------------

int cmd_noise_estimate(const CommonOpts& o) {
  fs::create_directories(o.out_dir);
  auto trajs = sindy::load_trajectories(o.input);
  const auto smoother = smoother_of(o);
  const std::vector<double> grid = {0.005, 0.01, 0.02, 0.03, 0.05,
                                    0.07,  0.1,  0.2,  0.5,  1.0};

  // calibration cache, keyed by smoother parameters
  const fs::path cache = fs::path(o.out_dir) /
                         ("noise_calibration_w" + std::to_string(o.window) +
                          "_p" + std::to_string(smoother.poly_order) + ".csv");
  sindy::NoiseCalibration calib;
  bool cache_hit = false;
  if (fs::exists(cache)) {
    std::ifstream in(cache);
    std::string line;
    std::getline(in, line);  // header
    calib.window_length = o.window;
    calib.poly_order = smoother.poly_order;
    double eta, diff;
    char comma;
    while (in >> eta >> comma >> diff) {
      calib.etas.push_back(eta);
      calib.rel_diffs.push_back(diff);
    }
    cache_hit = calib.etas.size() == grid.size();
  }
  if (!cache_hit) {
    calib = sindy::build_noise_calibration(grid, 20, o.seed + 1, smoother);
    std::ostringstream cal;
    cal << "eta,relative_difference\n";
    for (std::size_t i = 0; i < calib.etas.size(); ++i)
      cal << fmt(calib.etas[i]) << ',' << fmt(calib.rel_diffs[i]) << '\n';
    write_file_atomic(cache, cal.str());
  }

  std::ostringstream csv;
  csv << "ball_id,drop_id,estimated_eta,below_range\n";
  std::vector<std::string> warnings;
  for (const auto& traj : trajs) {
    try {
      auto est = sindy::estimate_noise_level(traj, smoother, calib);
      csv << traj.ball_id << ',' << traj.drop_id << ',' << fmt(est.eta) << ','
          << (est.below_range ? 1 : 0) << '\n';
    } catch (const sindy::range_error& e) {
      warnings.push_back(traj.ball_id + ": " + e.what());
      csv << traj.ball_id << ',' << traj.drop_id << ",,\n";
    }
  }
  write_file_atomic(fs::path(o.out_dir) / "noise_estimates.csv", csv.str());

  json config = {{"input", o.input},
                 {"window", o.window},
                 {"seed", o.seed},
                 {"calibration_cache", cache.string()},
                 {"cache_hit", cache_hit}};
  write_manifest(o.out_dir, "noise-estimate", config, warnings);
  return 0;
}

// ----------------------------- plot -----------------------------------------

int cmd_plot(const CommonOpts& o, const std::string& chart) {
  fs::create_directories(o.out_dir);
  if (chart == "trajectory" || chart == "loglog") {
    auto trajs = sindy::load_trajectories(o.input);
    if (chart == "trajectory") {
      for (const auto& traj : trajs) {
        sindy::Series s{traj.ball_id, traj.times, traj.heights};
        sindy::ChartOptions opt;
        opt.title = traj.ball_id + " drop " + std::to_string(traj.drop_id);
        opt.x_label = "time (s)";
        opt.y_label = "height (m)";
        write_file_atomic(fs::path(o.out_dir) /
                              (traj.ball_id + "_drop" + std::to_string(traj.drop_id) +
                               ".svg"),
                          sindy::render_line_chart({s}, opt));
      }
    } else {
      std::vector<sindy::Series> series;
      for (const auto& traj : trajs) {
        sindy::Series s;
        s.label = traj.ball_id;
        for (std::size_t i = 1; i < traj.times.size(); ++i) {
          s.x.push_back(traj.times[i] - traj.times.front());
          s.y.push_back(traj.heights.front() - traj.heights[i]);
        }
        series.push_back(std::move(s));
      }
      sindy::ChartOptions opt;
      opt.title = "displacement (log-log)";
      opt.x_label = "time (s)";
      opt.y_label = "displacement (m)";
      opt.log_x = opt.log_y = true;
      opt.reference_slopes = {1.0, 2.0};
      write_file_atomic(fs::path(o.out_dir) / "loglog_displacement.svg",
                        sindy::render_line_chart(series, opt));
    }
  } else if (chart == "error") {
    // CSV with header time_s,<label>,... one error series per column
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
    std::string line;
    std::getline(in, line);
    std::vector<std::string> headers;
    std::stringstream hs(line);
    std::string h;
    while (std::getline(hs, h, ',')) headers.push_back(h);
    std::vector<sindy::Series> series(headers.size() - 1);
    for (std::size_t c = 1; c < headers.size(); ++c)
      series[c - 1].label = headers[c];
    while (std::getline(in, line)) {
      std::stringstream ls(line);
      std::string cell;
      std::vector<double> row;
      while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
      for (std::size_t c = 1; c < row.size(); ++c) {
        series[c - 1].x.push_back(row[0]);
        series[c - 1].y.push_back(row[c]);
      }
    }
    sindy::ChartOptions opt;
    opt.title = "prediction error vs time";
    opt.x_label = "time (s)";
    opt.y_label = "abs error (m)";
    write_file_atomic(fs::path(o.out_dir) / "error_vs_time.svg",
                      sindy::render_line_chart(series, opt));
  } else if (chart == "heatmap") {
    // heatmap.csv emitted by `fit`
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
    std::string line;
    std::getline(in, line);
    std::vector<std::string> cols;
    {
      std::stringstream hs(line);
      std::string h;
      while (std::getline(hs, h, ',')) cols.push_back(h);
    }
    std::vector<std::string> col_labels(cols.begin() + 2, cols.end());
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> values;
    while (std::getline(in, line)) {
      std::stringstream ls(line);
      std::string cell;
      std::getline(ls, cell, ',');
      std::string label = cell;
      std::getline(ls, cell, ',');
      label += " d" + cell;
      row_labels.push_back(label);
      std::vector<double> row;
      while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
      values.push_back(std::move(row));
    }
    write_file_atomic(fs::path(o.out_dir) / "coefficient_heatmap.svg",
                      sindy::render_heatmap(row_labels, col_labels, values,
                                            "|coefficient| by ball"));
  } else {
    throw sindy::config_error("unknown chart type '" + chart + "'");
  }
  write_manifest(o.out_dir, "plot", {{"input", o.input}, {"chart", chart}}, {});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"governing-equation discovery for falling-body trajectories"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config file; command-line flags take precedence");

  CommonOpts sim_o, fit_o, sweep_o, bench_o, noise_o, plot_o;

  auto* sim = app.add_subcommand("simulate", "simulate falling-sphere drops");
  add_common(sim, sim_o, false);
  std::string model_kind = "linear";
  double g = -9.8, coef = -0.5, lin = 0.0, quad = 0.0;
  double radius = 0.033025, mass = 0.056699, rho = 1.211, mu = 1.82e-5;
  double x0 = 35.0, v0 = 0.0, dt = 1.0 / 15.0;
  int steps = 49;
  std::vector<double> etas;
  bool synthetic_set = false;
  sim->add_option("--model", model_kind, "constant|linear|quadratic|reynolds");
  sim->add_option("--g", g, "gravitational acceleration (m/s^2)");
  sim->add_option("--coef", coef, "linear drag coefficient (1/s)");
  sim->add_option("--lin", lin, "linear term of quadratic model (1/s)");
  sim->add_option("--quad", quad, "quadratic term (1/m)");
  sim->add_option("--radius", radius, "sphere radius (m)");
  sim->add_option("--mass", mass, "sphere mass (kg)");
  sim->add_option("--rho", rho, "fluid density (kg/m^3)");
  sim->add_option("--mu", mu, "dynamic viscosity (kg/(m s))");
  sim->add_option("--x0", x0, "initial height (m)");
  sim->add_option("--v0", v0, "initial velocity (m/s)");
  sim->add_option("--dt", dt, "sample interval (s)");
  sim->add_option("--steps", steps, "number of integration steps");
  sim->add_option("--eta", etas, "noise levels; one noisy CSV per value");
  sim->add_flag("--synthetic-set", synthetic_set,
                "emit the five-ball synthetic set (two drops each)");

  auto* fit = app.add_subcommand("fit", "fit sparse models to trajectories");
  add_common(fit, fit_o, true);

  auto* sweep = app.add_subcommand("sweep", "sparsity-parameter sweep");
  add_common(sweep, sweep_o, true);
  std::vector<double> deltas;
  sweep->add_option("--deltas", deltas, "threshold grid")->required();

  auto* bench = app.add_subcommand("benchmark", "four-template prediction study");
  add_common(bench, bench_o, true);
  bool export_forecasts = false;
  bench->add_flag("--export-forecasts", export_forecasts,
                  "write per-cell 15 s forecast series");

  auto* noise = app.add_subcommand("noise-estimate",
                                   "estimate measurement noise per trajectory");
  add_common(noise, noise_o, true);

  auto* plot = app.add_subcommand("plot", "render SVG charts from emitted CSVs");
  add_common(plot, plot_o, true);
  std::string chart = "trajectory";
  plot->add_option("--chart", chart, "trajectory|loglog|error|heatmap");

  try {
    app.parse(argc, argv);
    if (!config_path.empty())
      for (auto* cmd : app.get_subcommands()) apply_json_config(cmd, config_path);

    if (sim->parsed())
      return cmd_simulate(sim_o, model_kind, g, coef, lin, quad, radius, mass,
                          rho, mu, x0, v0, dt, steps, etas, synthetic_set);
    if (fit->parsed()) return cmd_fit(fit_o);
    if (sweep->parsed()) return cmd_sweep(sweep_o, deltas);
    if (bench->parsed()) return cmd_benchmark(bench_o, export_forecasts);
    if (noise->parsed()) return cmd_noise_estimate(noise_o);
    if (plot->parsed()) return cmd_plot(plot_o, chart);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
