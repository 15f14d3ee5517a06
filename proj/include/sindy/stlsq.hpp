#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "sindy/poly_library.hpp"
#include "sindy/smoothing.hpp"
#include "sindy/trajectory.hpp"

namespace sindy {

// Row-salience choices for the group algorithm.
enum class Salience { l1, l2, mean_abs, median_abs, quantile25 };

struct FitConfig {
  double threshold = 0.1;  // delta; coefficients (or row saliences) below it are pruned
  int max_iterations = 20;
  Salience salience = Salience::l1;
};

// One governing equation: coefficients aligned to the term list, zeros mark
// inactive terms.
struct SparseModel {
  Eigen::VectorXd coefficients;
  std::vector<TermDescriptor> terms;
  std::vector<std::string> state_names;
  std::string target_name = "v'";
  bool empty_model = false;      // every term pruned; a flagged success
  bool ill_conditioned = false;  // some solve fell back to minimum-norm

  std::vector<int> support() const {
    std::vector<int> s;
    for (Eigen::Index j = 0; j < coefficients.size(); ++j)
      if (coefficients[j] != 0.0) s.push_back(static_cast<int>(j));
    return s;
  }
};

namespace detail {

struct LstsqResult {
  Eigen::VectorXd x;
  bool ill_conditioned = false;
};

// Least squares on unit-normalized columns (library terms differ in scale by
// orders of magnitude); QR solve, with a minimum-norm truncated-SVD fallback
// when rank-deficient or condition number exceeds 1e6. Noise-free trajectory
// libraries are numerically rank-deficient, so the fallback is load-bearing.
inline LstsqResult solve_least_squares(const Eigen::MatrixXd& a,
                                       const Eigen::VectorXd& b) {
  Eigen::VectorXd scale(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const double norm = a.col(j).norm();
    scale[j] = norm > 0.0 ? norm : 1.0;
  }
  const Eigen::MatrixXd an = a * scale.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(an);
  const auto& r = qr.matrixR();
  const Eigen::Index k = std::min(an.rows(), an.cols());
  double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < k; ++i) {
    const double d = std::abs(r(i, i));
    rmax = std::max(rmax, d);
    rmin = std::min(rmin, d);
  }
  const bool bad = qr.rank() < an.cols() || an.rows() < an.cols() ||
                   !(rmin > 0.0) || rmax / rmin > 1e6;
  if (!bad) return {scale.cwiseInverse().asDiagonal() * qr.solve(b), false};
  Eigen::BDCSVD<Eigen::MatrixXd> svd(an, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-6);
  return {scale.cwiseInverse().asDiagonal() * svd.solve(b), true};
}

inline Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m,
                                      const std::vector<int>& cols) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
  return out;
}

inline double row_salience(std::vector<double> mags, Salience kind) {
  switch (kind) {
    case Salience::l1: {
      double s = 0.0;
      for (double m : mags) s += m;
      return s;
    }
    case Salience::l2: {
      double s = 0.0;
      for (double m : mags) s += m * m;
      return std::sqrt(s);
    }
    case Salience::mean_abs: {
      double s = 0.0;
      for (double m : mags) s += m;
      return s / static_cast<double>(mags.size());
    }
    case Salience::median_abs: {
      std::sort(mags.begin(), mags.end());
      const std::size_t n = mags.size();
      return n % 2 ? mags[n / 2] : 0.5 * (mags[n / 2 - 1] + mags[n / 2]);
    }
    case Salience::quantile25: {
      std::sort(mags.begin(), mags.end());
      const double pos = 0.25 * static_cast<double>(mags.size() - 1);
      const std::size_t lo = static_cast<std::size_t>(pos);
      const double frac = pos - static_cast<double>(lo);
      return lo + 1 < mags.size()
                 ? mags[lo] * (1.0 - frac) + mags[lo + 1] * frac
                 : mags[lo];
    }
  }
  return 0.0;
}

}  // namespace detail

// Sequentially thresholded least squares: alternate a least-squares solve on
// the active columns with hard-thresholding of coefficients below delta,
// until the support stops changing.
inline SparseModel stlsq(const LibraryMatrix& library,
                         const Eigen::VectorXd& targets,
                         const FitConfig& cfg) {
  if (library.values.rows() != targets.size())
    throw std::invalid_argument("library rows and target length differ");
  if (cfg.threshold < 0.0) throw std::invalid_argument("threshold must be >= 0");
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");

  SparseModel model;
  model.terms = library.terms;
  model.coefficients = Eigen::VectorXd::Zero(library.values.cols());

  std::vector<int> active(library.terms.size());
  for (std::size_t j = 0; j < active.size(); ++j) active[j] = static_cast<int>(j);

  Eigen::VectorXd xi;
  for (int it = 0; it < cfg.max_iterations && !active.empty(); ++it) {
    auto solved = detail::solve_least_squares(
        detail::select_columns(library.values, active), targets);
    xi = solved.x;
    model.ill_conditioned |= solved.ill_conditioned;

    std::vector<int> keep;
    for (std::size_t j = 0; j < active.size(); ++j)
      if (std::abs(xi[static_cast<Eigen::Index>(j)]) >= cfg.threshold)
        keep.push_back(active[j]);
    if (keep.size() == active.size()) break;  // support converged
    active = std::move(keep);
    if (!active.empty() && it + 1 == cfg.max_iterations) {
      auto final_solve = detail::solve_least_squares(
          detail::select_columns(library.values, active), targets);
      xi = final_solve.x;
      model.ill_conditioned |= final_solve.ill_conditioned;
    }
  }
  if (active.empty()) {
    model.empty_model = true;
    return model;
  }
  for (std::size_t j = 0; j < active.size(); ++j)
    model.coefficients[active[j]] = xi[static_cast<Eigen::Index>(j)];
  return model;
}

struct GroupFitResult {
  std::vector<SparseModel> models;  // one per trajectory, shared term list
  std::vector<int> shared_support;
  bool ill_conditioned = false;
};

// Group-sparsity STLSQ: per-trajectory unregularized solves alternate with
// joint row pruning by salience R; all models end on the same support.
inline GroupFitResult group_stlsq(const std::vector<LibraryMatrix>& libraries,
                                  const std::vector<Eigen::VectorXd>& targets,
                                  const FitConfig& cfg) {
  if (libraries.empty()) throw std::invalid_argument("no trajectories to fit");
  if (libraries.size() != targets.size())
    throw std::invalid_argument("library and target counts differ");
  for (const auto& lib : libraries)
    if (!(lib.terms == libraries.front().terms))
      throw std::invalid_argument("all libraries must share one term list");

  const std::size_t n_balls = libraries.size();
  const std::size_t p = libraries.front().terms.size();
  std::vector<int> active(p);
  for (std::size_t j = 0; j < p; ++j) active[j] = static_cast<int>(j);

  GroupFitResult result;
  std::vector<Eigen::VectorXd> xis(n_balls);

  auto solve_all = [&]() {
    for (std::size_t b = 0; b < n_balls; ++b) {
      auto solved = detail::solve_least_squares(
          detail::select_columns(libraries[b].values, active), targets[b]);
      xis[b] = solved.x;
      result.ill_conditioned |= solved.ill_conditioned;
    }
  };

  for (int it = 0; it < cfg.max_iterations && !active.empty(); ++it) {
    solve_all();
    std::vector<int> keep;
    for (std::size_t j = 0; j < active.size(); ++j) {
      std::vector<double> mags(n_balls);
      for (std::size_t b = 0; b < n_balls; ++b)
        mags[b] = std::abs(xis[b][static_cast<Eigen::Index>(j)]);
      if (detail::row_salience(std::move(mags), cfg.salience) >= cfg.threshold)
        keep.push_back(active[j]);
    }
    if (keep.size() == active.size()) break;  // no row deleted: converged
    active = std::move(keep);
    if (!active.empty() && it + 1 == cfg.max_iterations) solve_all();
  }

  result.shared_support = active;
  for (std::size_t b = 0; b < n_balls; ++b) {
    SparseModel model;
    model.terms = libraries.front().terms;
    model.state_names = {"x", "v"};
    model.coefficients = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
    if (active.empty()) {
      model.empty_model = true;
    } else {
      for (std::size_t j = 0; j < active.size(); ++j)
        model.coefficients[active[j]] = xis[b][static_cast<Eigen::Index>(j)];
    }
    model.ill_conditioned = result.ill_conditioned;
    result.models.push_back(std::move(model));
  }
  return result;
}

// Library + acceleration targets for the second-order pipeline. The x-dot = v
// half of the system is fixed by construction; only v-dot is fit.
inline std::pair<LibraryMatrix, Eigen::VectorXd> second_order_regression_data(
    const Trajectory& traj, const SmootherConfig& smoother, int degree,
    bool smooth = true) {
  const DerivativeSet derivs = compute_derivatives(traj, smoother, smooth);
  const Eigen::Index m = static_cast<Eigen::Index>(derivs.times.size());
  Eigen::MatrixXd states(m, 2);
  for (Eigen::Index i = 0; i < m; ++i) {
    states(i, 0) = derivs.smoothed_heights[static_cast<std::size_t>(i)];
    states(i, 1) = derivs.velocities[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd targets(m);
  for (Eigen::Index i = 0; i < m; ++i)
    targets[i] = derivs.accelerations[static_cast<std::size_t>(i)];
  return {evaluate_library(states, polynomial_terms(2, degree, {"x", "v"})),
          targets};
}

inline SparseModel fit_second_order(const Trajectory& traj,
                                    const SmootherConfig& smoother,
                                    const FitConfig& fit, int degree,
                                    bool smooth = true) {
  auto [library, targets] =
      second_order_regression_data(traj, smoother, degree, smooth);
  SparseModel model = stlsq(library, targets, fit);
  model.state_names = {"x", "v"};
  return model;
}

inline double predict_derivative(const SparseModel& model,
                                 const std::vector<double>& state) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < model.coefficients.size(); ++j) {
    if (model.coefficients[j] == 0.0) continue;
    double phi = 1.0;
    const auto& expo = model.terms[static_cast<std::size_t>(j)].exponents;
    for (std::size_t k = 0; k < expo.size(); ++k)
      for (int e = 0; e < expo[k]; ++e) phi *= state[k];
    acc += model.coefficients[j] * phi;
  }
  return acc;
}

struct ModelSimulation {
  Trajectory traj;
  std::vector<double> velocities;
  bool diverged = false;
};

// Integrates x' = v, v' = model(x, v) with fixed-step RK4, ten substeps per
// output interval. Blows past 1e9 (or a non-finite state) truncate the
// trajectory and set the divergence flag.
inline ModelSimulation simulate_model(const SparseModel& model, double x0,
                                      double v0, double dt, int n_steps,
                                      const std::string& ball_id = "model") {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  ModelSimulation out;
  out.traj.ball_id = ball_id;
  out.traj.drop_id = 1;
  double x = x0, v = v0;
  out.traj.times.push_back(0.0);
  out.traj.heights.push_back(x);
  out.velocities.push_back(v);
  const double h = dt / 10.0;
  for (int step = 0; step < n_steps; ++step) {
    for (int sub = 0; sub < 10; ++sub) {
      const double k1x = v, k1v = predict_derivative(model, {x, v});
      const double k2x = v + 0.5 * h * k1v,
                   k2v = predict_derivative(model, {x + 0.5 * h * k1x, v + 0.5 * h * k1v});
      const double k3x = v + 0.5 * h * k2v,
                   k3v = predict_derivative(model, {x + 0.5 * h * k2x, v + 0.5 * h * k2v});
      const double k4x = v + h * k3v,
                   k4v = predict_derivative(model, {x + h * k3x, v + h * k3v});
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    if (!std::isfinite(x) || !std::isfinite(v) || std::abs(x) > 1e9 ||
        std::abs(v) > 1e9) {
      out.diverged = true;
      return out;
    }
    out.traj.times.push_back((step + 1) * dt);
    out.traj.heights.push_back(x);
    out.velocities.push_back(v);
  }
  return out;
}

enum class SweepPipeline { plain, group };

struct SweepEntry {
  double delta = 0.0;
  std::vector<SparseModel> models;
  int term_count = 0;  // shared-support size (group) or max support (plain)
  bool failed = false;
  std::string error;
};

// Runs the chosen pipeline once per delta; a failing delta is recorded, not
// fatal.
inline std::vector<SweepEntry> sparsity_sweep(
    const std::vector<Trajectory>& trajs, const std::vector<double>& delta_grid,
    SweepPipeline pipeline, const SmootherConfig& smoother, int degree,
    bool smooth = true, const FitConfig& base_cfg = {}) {
  if (delta_grid.empty()) throw std::invalid_argument("empty delta grid");
  for (double d : delta_grid)
    if (!(d > 0.0)) throw std::invalid_argument("delta grid must be positive");

  std::vector<std::pair<LibraryMatrix, Eigen::VectorXd>> data;
  for (const auto& traj : trajs)
    data.push_back(second_order_regression_data(traj, smoother, degree, smooth));

  std::vector<SweepEntry> entries;
  for (double delta : delta_grid) {
    SweepEntry entry;
    entry.delta = delta;
    FitConfig cfg = base_cfg;
    cfg.threshold = delta;
    try {
      if (pipeline == SweepPipeline::group) {
        std::vector<LibraryMatrix> libs;
        std::vector<Eigen::VectorXd> targets;
        for (auto& [lib, tgt] : data) {
          libs.push_back(lib);
          targets.push_back(tgt);
        }
        auto result = group_stlsq(libs, targets, cfg);
        entry.models = result.models;
        entry.term_count = static_cast<int>(result.shared_support.size());
      } else {
        for (auto& [lib, tgt] : data) {
          SparseModel model = stlsq(lib, tgt, cfg);
          model.state_names = {"x", "v"};
          entry.term_count = std::max(
              entry.term_count, static_cast<int>(model.support().size()));
          entry.models.push_back(std::move(model));
        }
      }
    } catch (const std::exception& e) {
      entry.failed = true;
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

// Human-readable equation in the paper's style: "v' = -9.79 - 0.48 v".
inline std::string format_equation(const SparseModel& model, int precision = 2) {
  std::string s = model.target_name + " =";
  bool first = true;
  char buf[64];
  for (Eigen::Index j = 0; j < model.coefficients.size(); ++j) {
    const double c = model.coefficients[j];
    if (c == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%.*f", precision, std::abs(c));
    s += first ? (c < 0.0 ? " -" : " ") : (c < 0.0 ? " - " : " + ");
    s += buf;
    const auto& term = model.terms[static_cast<std::size_t>(j)];
    if (!term.is_constant()) s += ' ' + term.name;
    first = false;
  }
  if (first) s += " 0";
  return s;
}

inline nlohmann::json to_json(const SparseModel& model) {
  nlohmann::json terms = nlohmann::json::array();
  for (Eigen::Index j = 0; j < model.coefficients.size(); ++j) {
    auto t = to_json(model.terms[static_cast<std::size_t>(j)]);
    t["coefficient"] = model.coefficients[j];
    terms.push_back(std::move(t));
  }
  nlohmann::json warnings = nlohmann::json::array();
  if (model.empty_model) warnings.push_back("empty model");
  if (model.ill_conditioned) warnings.push_back("ill-conditioned solve");
  return {{"target", model.target_name},
          {"terms", std::move(terms)},
          {"equation", format_equation(model)},
          {"warnings", std::move(warnings)}};
}

}  // namespace sindy
