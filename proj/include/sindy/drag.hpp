#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "sindy/errors.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

inline constexpr double kDragCrisisRe = 2e5;

// v' = g
struct ConstantAcceleration {
  double g = -9.8;
};

// v' = g + coefficient * v, coefficient < 0 for physical drag
struct LinearDrag {
  double g = -9.8;
  double coefficient = -0.5;  // 1/s
};

// v' = g + lin v + quad v^2 on descent; the quadratic term is signed to
// oppose motion (-quad * v * |v|) so it stays physical for upward states.
struct QuadraticDrag {
  double g = -9.8;
  double lin = 0.0;   // 1/s
  double quad = 0.0;  // 1/m
};

// m v' = m g + (1/2) rho v^2 A C_D(Re), Brown-Lawler drag coefficient.
struct ReynoldsDependent {
  BallSpec ball;
  FluidSpec fluid;
  double g = -9.8;
};

using DragModel = std::variant<ConstantAcceleration, LinearDrag, QuadraticDrag,
                               ReynoldsDependent>;

inline double reynolds_number(const FluidSpec& fluid, double diameter,
                              double speed) {
  validate(fluid);
  if (!(diameter > 0.0)) throw std::invalid_argument("diameter must be positive");
  if (speed < 0.0)
    throw std::invalid_argument("speed must be >= 0 (pass |v|)");
  return fluid.density * speed * diameter / fluid.viscosity;
}

struct DragCoefficient {
  double cd = 0.0;
  bool clamped = false;  // Re was capped at the drag-crisis bound
};

// Brown-Lawler sphere-drag correlation, valid for Re < 2e5. Larger Re is
// clamped rather than rejected so a simulation stays total; the clamp is
// surfaced as a flag.
inline DragCoefficient brown_lawler_cd_checked(double re) {
  if (!(re > 0.0)) throw std::invalid_argument("Reynolds number must be positive");
  DragCoefficient out;
  if (re >= kDragCrisisRe) {
    re = kDragCrisisRe;
    out.clamped = true;
  }
  out.cd = 24.0 / re * (1.0 + 0.150 * std::pow(re, 0.681)) +
           0.407 / (1.0 + 8710.0 / re);
  return out;
}

inline double brown_lawler_cd(double re) { return brown_lawler_cd_checked(re).cd; }

namespace detail {

inline double drag_accel_impl(const DragModel& model, double v, bool* clamped) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantAcceleration>) {
          return m.g;
        } else if constexpr (std::is_same_v<T, LinearDrag>) {
          return m.g + m.coefficient * v;
        } else if constexpr (std::is_same_v<T, QuadraticDrag>) {
          return m.g + m.lin * v - m.quad * v * std::abs(v);
        } else {
          // Re-dependent: the 24/Re singularity cancels against v^2, so the
          // v = 0 limit is exactly g.
          if (v == 0.0) return m.g;
          const double speed = std::abs(v);
          const double re = reynolds_number(m.fluid, m.ball.diameter(), speed);
          const auto cd = brown_lawler_cd_checked(re);
          if (clamped && cd.clamped) *clamped = true;
          const double magnitude = 0.5 * m.fluid.density * speed * speed *
                                   m.ball.cross_section_area() * cd.cd /
                                   m.ball.mass;
          return m.g + (v < 0.0 ? magnitude : -magnitude);
        }
      },
      model);
}

}  // namespace detail

inline double drag_acceleration(const DragModel& model, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("velocity must be finite");
  return detail::drag_accel_impl(model, v, nullptr);
}

struct SimResult {
  Trajectory traj;
  std::vector<double> velocities;
  std::vector<double> reynolds;  // rho |v| D / mu; zero for non-Re models
  bool drag_crisis = false;      // some sample exceeded the correlation range
};

// Fixed-step RK4 drop from (x0, v0); samples at k*dt including k = 0.
inline SimResult simulate_drop(const DragModel& model, double x0, double v0,
                               double dt, int n_steps,
                               const std::string& ball_id = "sim",
                               int drop_id = 1) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (const auto* rd = std::get_if<ReynoldsDependent>(&model)) {
    validate(rd->ball);
    validate(rd->fluid);
  }

  SimResult out;
  out.traj.ball_id = ball_id;
  out.traj.drop_id = drop_id;
  const auto* rd = std::get_if<ReynoldsDependent>(&model);

  double x = x0, v = v0;
  auto record = [&](double t) {
    out.traj.times.push_back(t);
    out.traj.heights.push_back(x);
    out.velocities.push_back(v);
    out.reynolds.push_back(
        rd ? reynolds_number(rd->fluid, rd->ball.diameter(), std::abs(v)) : 0.0);
  };
  record(0.0);
  for (int step = 0; step < n_steps; ++step) {
    const double k1x = v, k1v = detail::drag_accel_impl(model, v, &out.drag_crisis);
    const double k2x = v + 0.5 * dt * k1v,
                 k2v = detail::drag_accel_impl(model, v + 0.5 * dt * k1v, &out.drag_crisis);
    const double k3x = v + 0.5 * dt * k2v,
                 k3v = detail::drag_accel_impl(model, v + 0.5 * dt * k2v, &out.drag_crisis);
    const double k4x = v + dt * k3v,
                 k4v = detail::drag_accel_impl(model, v + dt * k3v, &out.drag_crisis);
    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!std::isfinite(x) || !std::isfinite(v))
      throw std::runtime_error("simulation produced non-finite state at step " +
                               std::to_string(step + 1));
    record((step + 1) * dt);
  }
  return out;
}

// Speed at which drag balances gravity. Closed form for linear drag;
// bracketing bisection on drag_acceleration otherwise.
inline double terminal_velocity(const DragModel& model) {
  if (std::holds_alternative<ConstantAcceleration>(model))
    throw std::invalid_argument("constant-acceleration model has no terminal velocity");
  if (const auto* lin = std::get_if<LinearDrag>(&model)) {
    if (lin->coefficient == 0.0)
      throw std::invalid_argument("linear drag model with zero drag");
    return lin->g / std::abs(lin->coefficient);
  }
  // Falling solutions: accel(0) = g < 0, accel grows toward + as |v| grows.
  double lo = 0.0;        // accel(lo) < 0
  double hi = -1.0;       // search for accel(hi) > 0
  while (drag_acceleration(model, hi) <= 0.0) {
    hi *= 2.0;
    if (std::abs(hi) > 1e3)
      throw not_reached_error("no terminal-velocity bracket within |v| <= 1e3 m/s",
                              std::abs(hi));
  }
  while (std::abs(hi - lo) > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (drag_acceleration(model, mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sindy
