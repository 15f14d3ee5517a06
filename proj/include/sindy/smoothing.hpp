#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sindy/errors.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

struct SmootherConfig {
  int window_length = 35;  // odd, >= 5
  int poly_order = 3;      // >= 1, < window_length
};

inline void validate(const SmootherConfig& cfg) {
  if (cfg.window_length < 5 || cfg.window_length % 2 == 0)
    throw config_error("smoother window must be odd and >= 5");
  if (cfg.poly_order < 1 || cfg.poly_order >= cfg.window_length)
    throw config_error("smoother poly order must satisfy 1 <= order < window");
}

// Savitzky-Golay: replace each sample by the value of the least-squares
// polynomial fit over its window, evaluated at the sample's own abscissa.
// Boundary samples reuse the nearest full one-sided window, so the output
// keeps full length.
inline std::vector<double> savgol(const std::vector<double>& values,
                                  const SmootherConfig& cfg) {
  validate(cfg);
  const int n = static_cast<int>(values.size());
  const int w = cfg.window_length;
  if (n < w)
    throw config_error("signal of length " + std::to_string(n) +
                       " shorter than smoothing window " + std::to_string(w));

  // Projection matrix onto degree-<=p polynomials over window abscissae.
  const int half = (w - 1) / 2;
  Eigen::MatrixXd vander(w, cfg.poly_order + 1);
  for (int j = 0; j < w; ++j) {
    double x = 1.0;
    for (int k = 0; k <= cfg.poly_order; ++k) {
      vander(j, k) = x;
      x *= static_cast<double>(j - half);
    }
  }
  const Eigen::MatrixXd proj =
      vander * (vander.transpose() * vander).ldlt().solve(vander.transpose());

  std::vector<double> out(values.size());
  for (int i = 0; i < n; ++i) {
    const int start = std::clamp(i - half, 0, n - w);
    const int row = i - start;
    double acc = 0.0;
    for (int j = 0; j < w; ++j) acc += proj(row, j) * values[start + j];
    out[i] = acc;
  }
  return out;
}

inline Trajectory savgol_smooth(const Trajectory& traj,
                                const SmootherConfig& cfg) {
  validate(traj);
  require_uniform(traj);
  Trajectory out = traj;
  out.heights = savgol(traj.heights, cfg);
  return out;
}

enum class DiffScheme { forward, centered };

// Output has the same length as the input. Centered uses second-order
// one-sided stencils at both ends; forward uses a backward step at the end.
inline std::vector<double> finite_difference(const std::vector<double>& v,
                                             double dt, DiffScheme scheme) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const std::size_t n = v.size();
  std::vector<double> d(n);
  if (scheme == DiffScheme::forward) {
    if (n < 2) throw std::invalid_argument("forward difference needs >= 2 samples");
    for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i]) / dt;
    d[n - 1] = (v[n - 1] - v[n - 2]) / dt;
  } else {
    if (n < 3) throw std::invalid_argument("centered difference needs >= 3 samples");
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
    for (std::size_t i = 1; i + 1 < n; ++i)
      d[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
  }
  return d;
}

struct DerivativeSet {
  std::vector<double> times;
  std::vector<double> smoothed_heights;  // raw heights when smoothing is off
  std::vector<double> velocities;
  std::vector<double> accelerations;
};

// Smoothed (or raw) centered-difference pipeline: velocity from heights,
// acceleration from velocities.
inline DerivativeSet compute_derivatives(const Trajectory& traj,
                                         const SmootherConfig& cfg,
                                         bool smooth) {
  validate(traj);
  require_uniform(traj);
  const double dt = mean_dt(traj);
  DerivativeSet out;
  out.times = traj.times;
  out.smoothed_heights = smooth ? savgol(traj.heights, cfg) : traj.heights;
  out.velocities = finite_difference(out.smoothed_heights, dt, DiffScheme::centered);
  out.accelerations = finite_difference(out.velocities, dt, DiffScheme::centered);
  return out;
}

inline double relative_l2_difference(const std::vector<double>& a,
                                     const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("relative difference: length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num / den);
}

// Reference falling-body trajectory used to calibrate the noise estimator:
// v' = -9.8 - 0.5 v, v(0) = 0, x(0) = 40, sampled at 15 Hz (closed form).
inline Trajectory noise_reference_trajectory(int n_samples = 50,
                                             double dt = 1.0 / 15.0) {
  Trajectory traj;
  traj.ball_id = "reference";
  traj.drop_id = 1;
  for (int i = 0; i < n_samples; ++i) {
    const double t = i * dt;
    traj.times.push_back(t);
    traj.heights.push_back(40.0 - 19.6 * t + 39.2 * (1.0 - std::exp(-0.5 * t)));
  }
  return traj;
}

// Monotone (eta -> mean relative smoothing difference) table.
struct NoiseCalibration {
  int window_length = 35;
  int poly_order = 3;
  std::vector<double> etas;
  std::vector<double> rel_diffs;
};

inline NoiseCalibration build_noise_calibration(
    const std::vector<double>& eta_grid, int replicates, std::uint64_t seed,
    const SmootherConfig& cfg = {}) {
  validate(cfg);
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (eta_grid.empty()) throw std::invalid_argument("eta grid is empty");
  for (std::size_t i = 0; i < eta_grid.size(); ++i) {
    if (!(eta_grid[i] > 0.0))
      throw std::invalid_argument("eta grid entries must be positive");
    if (i > 0 && !(eta_grid[i] > eta_grid[i - 1]))
      throw std::invalid_argument("eta grid must be strictly increasing");
  }

  const Trajectory reference = noise_reference_trajectory();
  NoiseCalibration calib;
  calib.window_length = cfg.window_length;
  calib.poly_order = cfg.poly_order;
  calib.etas = eta_grid;
  calib.rel_diffs.resize(eta_grid.size());
  for (std::size_t i = 0; i < eta_grid.size(); ++i) {
    double acc = 0.0;
    for (int r = 0; r < replicates; ++r) {
      const auto noisy = add_gaussian_noise(
          reference, eta_grid[i], derive_seed(seed, i * 1024 + static_cast<std::size_t>(r)));
      acc += relative_l2_difference(savgol(noisy.heights, cfg), noisy.heights);
    }
    calib.rel_diffs[i] = acc / replicates;
  }
  for (std::size_t i = 1; i < calib.rel_diffs.size(); ++i)
    if (!(calib.rel_diffs[i] > calib.rel_diffs[i - 1]))
      throw config_error(
          "calibration curve not strictly increasing; use more replicates or "
          "a coarser eta grid");
  return calib;
}

struct NoiseEstimate {
  double eta = 0.0;
  bool below_range = false;  // input cleaner than the smallest calibrated eta
};

// Inverts the calibration curve at the trajectory's own smoothing residual.
inline NoiseEstimate estimate_noise_level(const Trajectory& traj,
                                          const SmootherConfig& cfg,
                                          const NoiseCalibration& calib) {
  if (calib.window_length != cfg.window_length ||
      calib.poly_order != cfg.poly_order)
    throw config_error("noise calibration built with a different smoother");
  const double d =
      relative_l2_difference(savgol(traj.heights, cfg), traj.heights);
  if (d <= calib.rel_diffs.front())
    return {calib.etas.front(), true};
  if (d > calib.rel_diffs.back())
    throw range_error("smoothing residual " + std::to_string(d) +
                      " above calibrated range [" +
                      std::to_string(calib.rel_diffs.front()) + ", " +
                      std::to_string(calib.rel_diffs.back()) + "]");
  auto hi = std::upper_bound(calib.rel_diffs.begin(), calib.rel_diffs.end(), d);
  const std::size_t i = static_cast<std::size_t>(hi - calib.rel_diffs.begin());
  const double frac =
      (d - calib.rel_diffs[i - 1]) / (calib.rel_diffs[i] - calib.rel_diffs[i - 1]);
  return {calib.etas[i - 1] + frac * (calib.etas[i] - calib.etas[i - 1]), false};
}

}  // namespace sindy
