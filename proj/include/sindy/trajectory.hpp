#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "sindy/errors.hpp"
#include "sindy/rng.hpp"

namespace sindy {

// Time-stamped height samples for one ball / one drop. SI units throughout.
struct Trajectory {
  std::vector<double> times;    // seconds, strictly increasing
  std::vector<double> heights;  // meters; may go negative on long drops
  std::string ball_id;
  int drop_id = 0;
};

struct BallSpec {
  double radius = 0.0;  // m
  double mass = 0.0;    // kg
  std::string label;

  double diameter() const { return 2.0 * radius; }
  double cross_section_area() const {
    return std::numbers::pi * radius * radius;
  }
  double density() const {
    return mass / (4.0 / 3.0 * std::numbers::pi * radius * radius * radius);
  }
};

struct FluidSpec {
  double density = 1.211;      // kg/m^3, air at sea level, 65 F
  double viscosity = 1.82e-5;  // kg/(m s)
};

inline void validate(const Trajectory& traj) {
  if (traj.times.size() != traj.heights.size())
    throw validation_error("trajectory '" + traj.ball_id +
                           "': times and heights differ in length");
  if (traj.times.size() < 3)
    throw validation_error("trajectory '" + traj.ball_id +
                           "': need at least 3 samples");
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    if (!(traj.times[i] > traj.times[i - 1]))
      throw validation_error("trajectory '" + traj.ball_id +
                             "': times not strictly increasing at index " +
                             std::to_string(i));
  for (double h : traj.heights)
    if (!std::isfinite(h))
      throw validation_error("trajectory '" + traj.ball_id +
                             "': non-finite height");
}

inline void validate(const BallSpec& ball) {
  if (!(ball.radius > 0.0) || !(ball.mass > 0.0))
    throw validation_error("ball '" + ball.label +
                           "': radius and mass must be positive");
}

inline void validate(const FluidSpec& fluid) {
  if (!(fluid.density > 0.0) || !(fluid.viscosity > 0.0))
    throw validation_error("fluid density and viscosity must be positive");
}

inline double mean_dt(const Trajectory& traj) {
  return (traj.times.back() - traj.times.front()) /
         static_cast<double>(traj.times.size() - 1);
}

// Uniform-sampling gate for the differentiation pipeline: max |dt - mean dt|
// below 1e-9 relative to the mean step.
inline bool uniformly_sampled(const Trajectory& traj) {
  const double dt = mean_dt(traj);
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    if (std::abs(traj.times[i] - traj.times[i - 1] - dt) > 1e-9 * dt)
      return false;
  return true;
}

inline void require_uniform(const Trajectory& traj) {
  if (!uniformly_sampled(traj))
    throw validation_error("trajectory '" + traj.ball_id +
                           "': non-uniform sampling is not supported here");
}

// heights -> heights + eta * N(0,1), deterministic for a given seed.
inline Trajectory add_gaussian_noise(const Trajectory& traj, double eta,
                                     std::uint64_t seed) {
  if (eta < 0.0) throw std::invalid_argument("noise level eta must be >= 0");
  Trajectory out = traj;
  if (eta == 0.0) return out;
  GaussianStream gauss(seed);
  for (double& h : out.heights) h += eta * gauss.next();
  return out;
}

// First time (linearly interpolated) at which the descent from heights[0]
// reaches `distance`.
inline double time_to_fall_distance(const Trajectory& traj, double distance) {
  validate(traj);
  if (!(distance > 0.0))
    throw std::invalid_argument("fall distance must be positive");
  const double start = traj.heights.front();
  double max_descent = 0.0;
  for (std::size_t i = 1; i < traj.heights.size(); ++i) {
    const double d0 = start - traj.heights[i - 1];
    const double d1 = start - traj.heights[i];
    max_descent = std::max(max_descent, d1);
    if (d1 >= distance) {
      if (d0 >= distance) return traj.times[i - 1];  // already past at i-1
      const double frac = (distance - d0) / (d1 - d0);
      return traj.times[i - 1] + frac * (traj.times[i] - traj.times[i - 1]);
    }
  }
  throw not_reached_error(
      "descent of " + std::to_string(distance) + " m never reached (max " +
          std::to_string(max_descent) + " m)",
      max_descent);
}

// Height at time t by linear interpolation between samples.
inline double height_at(const Trajectory& traj, double t) {
  if (t < traj.times.front() || t > traj.times.back())
    throw range_error("time " + std::to_string(t) +
                      " outside trajectory span");
  auto it = std::upper_bound(traj.times.begin(), traj.times.end(), t);
  if (it == traj.times.end()) return traj.heights.back();
  const std::size_t i = static_cast<std::size_t>(it - traj.times.begin());
  if (i == 0) return traj.heights.front();
  const double frac = (t - traj.times[i - 1]) / (traj.times[i] - traj.times[i - 1]);
  return traj.heights[i - 1] + frac * (traj.heights[i] - traj.heights[i - 1]);
}

}  // namespace sindy
