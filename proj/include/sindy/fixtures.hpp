#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sindy/drag.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

// Synthetic stand-in for the bridge-drop measurement set: ten balls, two
// drops each, released from 35 m and sampled at 15 Hz, each governed by a
// per-(ball, drop) linear-drag law and corrupted with 0.05 m of Gaussian
// measurement noise. Drag parameters follow the per-ball models previously
// identified from the physical drops; the whiffle balls carry the strongest
// drag. Fully deterministic for a given seed.
struct FixtureBall {
  std::string name;
  LinearDrag drop1;
  LinearDrag drop2;
};

inline const std::vector<FixtureBall>& bridge_fixture_balls() {
  static const std::vector<FixtureBall> balls = {
      {"golf_ball", {-9.34, 0.05}, {-9.44, -0.03}},
      {"baseball", {-8.51, 0.14}, {-7.56, 0.14}},
      {"tennis_ball", {-9.08, -0.13}, {-8.64, -0.12}},
      {"volleyball", {-8.11, -0.08}, {-9.64, -0.23}},
      {"blue_basketball", {-6.71, 0.15}, {-7.50, 0.07}},
      {"green_basketball", {-7.36, 0.10}, {-8.05, 0.02}},
      {"whiffle_ball_1", {-8.24, -0.34}, {-9.44, -0.43}},
      {"whiffle_ball_2", {-9.81, -0.56}, {-9.79, -0.48}},
      {"yellow_whiffle_ball", {-8.50, -0.47}, {-8.45, -0.46}},
      {"orange_whiffle_ball", {-7.83, -0.35}, {-8.03, -0.42}},
  };
  return balls;
}

inline bool is_whiffle(const std::string& ball_id) {
  return ball_id.find("whiffle") != std::string::npos;
}

inline std::vector<Trajectory> bridge_drop_fixture(double eta = 0.05,
                                                   std::uint64_t seed = 58123,
                                                   int n_steps = 49,
                                                   double dt = 1.0 / 15.0) {
  std::vector<Trajectory> out;
  const auto& balls = bridge_fixture_balls();
  for (std::size_t b = 0; b < balls.size(); ++b) {
    for (int drop = 1; drop <= 2; ++drop) {
      const LinearDrag& law = drop == 1 ? balls[b].drop1 : balls[b].drop2;
      SimResult sim =
          simulate_drop(law, 35.0, 0.0, dt, n_steps, balls[b].name, drop);
      out.push_back(add_gaussian_noise(
          sim.traj, eta, derive_seed(seed, b * 2 + static_cast<std::size_t>(drop))));
    }
  }
  return out;
}

}  // namespace sindy
