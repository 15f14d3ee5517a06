#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sindy/errors.hpp"
#include "sindy/stlsq.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

// The four model templates of the prediction study:
//   T1  v' = a              (constant acceleration)
//   T2  v' = a + b v        (linear drag)
//   T3  v' = a + b v + c v^2
//   T4  full degree-3 library with a low threshold (overfit on purpose)
enum class TemplateId { T1 = 1, T2 = 2, T3 = 3, T4 = 4 };

struct BenchmarkConfig {
  SmootherConfig smoother{};
  bool smooth = true;
  double horizon_s = 2.8;
  double long_horizon_s = 15.0;
  double t4_threshold = 0.005;
  bool assume_zero_v0 = false;  // otherwise v0 = first smoothed velocity
};

namespace detail {

inline std::vector<TermDescriptor> template_terms(TemplateId id) {
  switch (id) {
    case TemplateId::T1:
      return {{{0, 0}, "1"}};
    case TemplateId::T2:
      return {{{0, 0}, "1"}, {{0, 1}, "v"}};
    case TemplateId::T3:
      return {{{0, 0}, "1"}, {{0, 1}, "v"}, {{0, 2}, "v^2"}};
    default:
      return polynomial_terms(2, 3, {"x", "v"});
  }
}

}  // namespace detail

// T1-T3 are plain least squares on the fixed template support (threshold 0);
// T4 runs STLSQ over the full degree-3 library.
inline SparseModel fit_template(const Trajectory& traj, TemplateId id,
                                const BenchmarkConfig& cfg = {}) {
  const DerivativeSet derivs =
      compute_derivatives(traj, cfg.smoother, cfg.smooth);
  const Eigen::Index m = static_cast<Eigen::Index>(derivs.times.size());
  Eigen::MatrixXd states(m, 2);
  Eigen::VectorXd targets(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    states(i, 0) = derivs.smoothed_heights[static_cast<std::size_t>(i)];
    states(i, 1) = derivs.velocities[static_cast<std::size_t>(i)];
    targets[i] = derivs.accelerations[static_cast<std::size_t>(i)];
  }
  FitConfig fit;
  fit.threshold = id == TemplateId::T4 ? cfg.t4_threshold : 0.0;
  SparseModel model =
      stlsq(evaluate_library(states, detail::template_terms(id)), targets, fit);
  model.state_names = {"x", "v"};
  return model;
}

// Initial conditions for forecasting a drop: x0 from the first sample, v0
// from the first smoothed velocity (or zero when configured).
inline std::pair<double, double> initial_conditions(
    const Trajectory& traj, const BenchmarkConfig& cfg) {
  const double x0 = traj.heights.front();
  if (cfg.assume_zero_v0) return {x0, 0.0};
  const DerivativeSet derivs =
      compute_derivatives(traj, cfg.smoother, cfg.smooth);
  return {x0, derivs.velocities.front()};
}

struct Prediction {
  double predicted_height = 0.0;
  double observed_height = 0.0;
  double abs_error = 0.0;
  bool diverged = false;
};

// Forecast from the other drop's initial conditions to the horizon and
// compare against the linearly interpolated observation.
inline Prediction cross_drop_prediction(const SparseModel& model,
                                        const Trajectory& other_drop,
                                        double horizon_s,
                                        const BenchmarkConfig& cfg = {}) {
  if (other_drop.times.back() - other_drop.times.front() < horizon_s)
    throw range_error("drop does not cover the " + std::to_string(horizon_s) +
                      " s horizon");
  const auto [x0, v0] = initial_conditions(other_drop, cfg);
  const double dt = mean_dt(other_drop);
  const int n_steps = static_cast<int>(std::ceil(horizon_s / dt)) + 1;
  const ModelSimulation sim = simulate_model(model, x0, v0, dt, n_steps);

  Prediction out;
  out.diverged = sim.diverged;
  if (sim.diverged && sim.traj.times.back() < horizon_s) {
    out.predicted_height = sim.traj.heights.back();
  } else {
    out.predicted_height = height_at(sim.traj, horizon_s);
  }
  Trajectory shifted = other_drop;
  for (double& t : shifted.times) t -= other_drop.times.front();
  out.observed_height = height_at(shifted, horizon_s);
  out.abs_error = std::abs(out.predicted_height - out.observed_height);
  return out;
}

inline ModelSimulation long_forecast(const SparseModel& model, double x0,
                                     double v0, double horizon_s = 15.0,
                                     double dt = 1.0 / 15.0) {
  if (!(horizon_s > 0.0)) throw std::invalid_argument("horizon must be positive");
  return simulate_model(model, x0, v0, dt,
                        static_cast<int>(std::ceil(horizon_s / dt)));
}

struct ErrorCurve {
  std::vector<double> times;
  std::vector<double> abs_errors;      // |predicted - measured|
  std::vector<double> noise_baseline;  // |raw - smoothed| heights
};

inline ErrorCurve error_vs_time(const SparseModel& model,
                                const Trajectory& traj,
                                const BenchmarkConfig& cfg = {}) {
  const auto [x0, v0] = initial_conditions(traj, cfg);
  const double dt = mean_dt(traj);
  const ModelSimulation sim =
      simulate_model(model, x0, v0, dt, static_cast<int>(traj.times.size()) - 1);
  const std::vector<double> smoothed =
      cfg.smooth ? savgol(traj.heights, cfg.smoother) : traj.heights;

  ErrorCurve curve;
  const std::size_t n = std::min(sim.traj.heights.size(), traj.heights.size());
  for (std::size_t i = 0; i < n; ++i) {
    curve.times.push_back(traj.times[i]);
    curve.abs_errors.push_back(std::abs(sim.traj.heights[i] - traj.heights[i]));
    curve.noise_baseline.push_back(std::abs(traj.heights[i] - smoothed[i]));
  }
  return curve;
}

struct BenchmarkCell {
  std::string ball_id;
  int train_drop = 0;
  TemplateId template_id = TemplateId::T1;
  SparseModel model;
  std::optional<Prediction> prediction;  // empty when no other drop exists
  bool long_forecast_diverged = false;
};

struct BenchmarkReport {
  std::vector<BenchmarkCell> cells;
  std::vector<std::string> missing_cross_drop;  // balls with a single drop
};

// 4 templates x balls x drops. Train on one drop, predict the height of the
// same ball's other drop at the horizon, and run the long forecast for the
// divergence check.
inline BenchmarkReport run_benchmark(const std::vector<Trajectory>& trajs,
                                     const BenchmarkConfig& cfg = {}) {
  std::map<std::string, std::vector<const Trajectory*>> by_ball;
  std::vector<std::string> ball_order;
  for (const auto& traj : trajs) {
    if (!by_ball.count(traj.ball_id)) ball_order.push_back(traj.ball_id);
    by_ball[traj.ball_id].push_back(&traj);
  }

  BenchmarkReport report;
  for (const auto& ball : ball_order) {
    const auto& drops = by_ball[ball];
    if (drops.size() < 2) report.missing_cross_drop.push_back(ball);
    for (const Trajectory* train : drops) {
      for (TemplateId id :
           {TemplateId::T1, TemplateId::T2, TemplateId::T3, TemplateId::T4}) {
        BenchmarkCell cell;
        cell.ball_id = ball;
        cell.train_drop = train->drop_id;
        cell.template_id = id;
        cell.model = fit_template(*train, id, cfg);
        for (const Trajectory* other : drops) {
          if (other == train) continue;
          cell.prediction =
              cross_drop_prediction(cell.model, *other, cfg.horizon_s, cfg);
          break;
        }
        const auto [x0, v0] = initial_conditions(*train, cfg);
        cell.long_forecast_diverged =
            long_forecast(cell.model, x0, v0, cfg.long_horizon_s).diverged;
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

}  // namespace sindy
