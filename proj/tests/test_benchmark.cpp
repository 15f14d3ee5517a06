#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sindy/benchmark.hpp"
#include "sindy/drag.hpp"
#include "sindy/fixtures.hpp"

using namespace sindy;

namespace {

Trajectory noisy_drop(const DragModel& model, double eta, std::uint64_t seed,
                      int n_steps = 49, int drop_id = 1,
                      const std::string& ball = "ball") {
  auto sim = simulate_drop(model, 35.0, 0.0, 1.0 / 15.0, n_steps, ball, drop_id);
  return add_gaussian_noise(sim.traj, eta, seed);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

BenchmarkConfig quiet_config() {
  BenchmarkConfig cfg;
  cfg.smoother = {35, 3};
  return cfg;
}

}  // namespace

TEST_CASE("template fits on clean linear-drag data") {
  auto sim = simulate_drop(LinearDrag{-9.8, -0.5}, 35.0, 0.0, 1.0 / 15.0, 49);
  BenchmarkConfig cfg = quiet_config();
  cfg.smooth = false;

  auto t2 = fit_template(sim.traj, TemplateId::T2, cfg);
  REQUIRE(t2.terms.size() == 2);
  CHECK(t2.coefficients[0] == doctest::Approx(-9.8).epsilon(1e-2));
  CHECK(t2.coefficients[1] == doctest::Approx(-0.5).epsilon(5e-2));

  auto t3 = fit_template(sim.traj, TemplateId::T3, cfg);
  REQUIRE(t3.terms.size() == 3);
  // the generator has no quadratic part, so T3 agrees with T2
  CHECK(t3.coefficients[0] == doctest::Approx(t2.coefficients[0]).epsilon(1e-2));
  CHECK(t3.coefficients[1] == doctest::Approx(t2.coefficients[1]).epsilon(0.15));
  CHECK(std::abs(t3.coefficients[2]) < 0.02);

  auto t1 = fit_template(sim.traj, TemplateId::T1, cfg);
  REQUIRE(t1.terms.size() == 1);
  // constant-only fit averages the true forcing, which lies in (g, g + c*vt)
  CHECK(t1.coefficients[0] > -9.8);
  CHECK(t1.coefficients[0] < -9.8 + 0.5 * 19.6);

  auto t4 = fit_template(sim.traj, TemplateId::T4, cfg);
  CHECK(t4.terms.size() == 10);
}

TEST_CASE("initial conditions") {
  auto traj = noisy_drop(LinearDrag{-9.8, -0.5}, 0.05, 11);
  BenchmarkConfig cfg = quiet_config();
  auto [x0, v0] = initial_conditions(traj, cfg);
  CHECK(x0 == traj.heights.front());
  CHECK(std::abs(v0) < 1.0);  // dropped from rest, recovered approximately
  cfg.assume_zero_v0 = true;
  CHECK(initial_conditions(traj, cfg).second == 0.0);
}

TEST_CASE("cross-drop prediction is near-exact for the true model") {
  auto train = simulate_drop(LinearDrag{-9.8, -0.5}, 35.0, 0.0, 1.0 / 15.0, 49);
  auto other = simulate_drop(LinearDrag{-9.8, -0.5}, 35.0, 0.0, 1.0 / 15.0, 49);
  BenchmarkConfig cfg = quiet_config();
  cfg.smooth = false;
  auto model = fit_template(train.traj, TemplateId::T2, cfg);
  auto pred = cross_drop_prediction(model, other.traj, 2.8, cfg);
  // limited by the O(dt^2) finite-difference bias in the fitted coefficients
  CHECK(pred.abs_error < 0.05);
  CHECK_FALSE(pred.diverged);
  // closed form: x(2.8) = 35 - 19.6*2.8 + 39.2*(1 - e^{-1.4})
  const double expected = 35.0 - 19.6 * 2.8 + 39.2 * (1.0 - std::exp(-1.4));
  CHECK(pred.observed_height == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("cross-drop prediction rejects short drops") {
  auto sim = simulate_drop(LinearDrag{-9.8, -0.5}, 35.0, 0.0, 1.0 / 15.0, 10);
  SparseModel model;
  model.terms = detail::template_terms(TemplateId::T1);
  model.coefficients = Eigen::VectorXd::Constant(1, -9.8);
  CHECK_THROWS_AS(cross_drop_prediction(model, sim.traj, 2.8), range_error);
}

TEST_CASE("T2 beats T1 on strong-drag data, per-drop median") {
  const LinearDrag truth{-9.8, -0.8};
  BenchmarkConfig cfg = quiet_config();
  std::vector<double> t1_errors, t2_errors;
  for (std::uint64_t seed = 1; seed <= 9; ++seed) {
    auto train = noisy_drop(truth, 0.05, 2 * seed);
    auto test = noisy_drop(truth, 0.05, 2 * seed + 1);
    auto m1 = fit_template(train, TemplateId::T1, cfg);
    auto m2 = fit_template(train, TemplateId::T2, cfg);
    t1_errors.push_back(cross_drop_prediction(m1, test, 2.8, cfg).abs_error);
    t2_errors.push_back(cross_drop_prediction(m2, test, 2.8, cfg).abs_error);
  }
  CHECK(median(t2_errors) < median(t1_errors));
}

TEST_CASE("long forecast") {
  SparseModel drag;
  drag.terms = detail::template_terms(TemplateId::T2);
  drag.coefficients = Eigen::VectorXd::Zero(2);
  drag.coefficients[0] = -9.8;
  drag.coefficients[1] = -0.5;
  auto sim = long_forecast(drag, 35.0, 0.0, 15.0);
  CHECK_FALSE(sim.diverged);
  CHECK(sim.traj.times.back() == doctest::Approx(15.0).epsilon(0.01));
  // v(15) is within 1e-3 of terminal velocity
  CHECK(sim.velocities.back() == doctest::Approx(-19.6).epsilon(1e-3));
  CHECK_THROWS_AS(long_forecast(drag, 35.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("error curve definitional checks") {
  auto traj = noisy_drop(LinearDrag{-9.8, -0.5}, 0.05, 7);
  BenchmarkConfig cfg = quiet_config();
  auto model = fit_template(traj, TemplateId::T2, cfg);
  auto curve = error_vs_time(model, traj, cfg);
  REQUIRE(curve.times.size() == traj.times.size());
  REQUIRE(curve.abs_errors.size() == curve.noise_baseline.size());
  // baseline is literally |raw - smoothed|
  const auto smoothed = savgol(traj.heights, cfg.smoother);
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    CHECK(curve.noise_baseline[i] ==
          doctest::Approx(std::abs(traj.heights[i] - smoothed[i])).epsilon(1e-12));
    CHECK(curve.abs_errors[i] >= 0.0);
  }
}

TEST_CASE("full benchmark report") {
  std::vector<Trajectory> trajs;
  trajs.push_back(noisy_drop(LinearDrag{-9.8, -0.3}, 0.05, 21, 49, 1, "a"));
  trajs.push_back(noisy_drop(LinearDrag{-9.8, -0.3}, 0.05, 22, 49, 2, "a"));
  trajs.push_back(noisy_drop(LinearDrag{-9.8, -0.6}, 0.05, 23, 49, 1, "b"));
  trajs.push_back(noisy_drop(LinearDrag{-9.8, -0.6}, 0.05, 24, 49, 2, "b"));
  trajs.push_back(noisy_drop(LinearDrag{-9.8, -0.9}, 0.05, 25, 49, 1, "solo"));

  auto report = run_benchmark(trajs, quiet_config());
  CHECK(report.cells.size() == 5 * 4);  // drops x templates
  CHECK(report.missing_cross_drop == std::vector<std::string>{"solo"});
  for (const auto& cell : report.cells) {
    if (cell.ball_id == "solo")
      CHECK_FALSE(cell.prediction.has_value());
    else {
      REQUIRE(cell.prediction.has_value());
      CHECK(std::isfinite(cell.prediction->abs_error));
    }
  }
  // every (ball, drop, template) combination appears exactly once
  std::vector<std::tuple<std::string, int, TemplateId>> keys;
  for (const auto& cell : report.cells)
    keys.emplace_back(cell.ball_id, cell.train_drop, cell.template_id);
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("fixture set covers ten balls with two drops each") {
  auto trajs = bridge_drop_fixture();
  CHECK(trajs.size() == 20);
  std::map<std::string, int> counts;
  for (const auto& t : trajs) {
    counts[t.ball_id]++;
    CHECK(t.times.size() == 50);
    CHECK(t.heights.front() > 30.0);
  }
  CHECK(counts.size() == 10);
  for (const auto& [ball, n] : counts) CHECK(n == 2);
  // determinism
  auto again = bridge_drop_fixture();
  for (std::size_t i = 0; i < trajs.size(); ++i)
    CHECK(trajs[i].heights == again[i].heights);
}
