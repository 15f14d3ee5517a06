#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kBin = FALLING_SINDY_BIN;
const fs::path kDir = CLI_TEST_DIR;

int run(const std::string& args) {
  const std::string cmd = "\"" + kBin + "\" " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("command-line pipeline end to end") {
  fs::remove_all(kDir);
  fs::create_directories(kDir);
  const fs::path sim = kDir / "sim", fit = kDir / "fit", sweep = kDir / "sweep",
                 bench = kDir / "bench", noise = kDir / "noise",
                 plot = kDir / "plot";

  SUBCASE("refuses to run without a subcommand") { CHECK(run("") != 0); }

  REQUIRE(run("simulate --synthetic-set --x0 35 --dt 0.0666666666666667 "
              "--steps 49 --eta 0.05 --seed 42 --out-dir " +
              q(sim)) == 0);
  CHECK(fs::exists(sim / "trajectories.csv"));
  CHECK(fs::exists(sim / "noisy_eta_0.05.csv"));
  CHECK(fs::exists(sim / "manifest.json"));

  const fs::path noisy = sim / "noisy_eta_0.05.csv";

  REQUIRE(run("fit --input " + q(noisy) + " --delta 1.5 --group --out-dir " +
              q(fit)) == 0);
  CHECK(fs::exists(fit / "models.json"));
  CHECK(fs::exists(fit / "heatmap.csv"));
  const std::string equations = slurp(fit / "equations.txt");
  CHECK(equations.find("v' = ") != std::string::npos);

  REQUIRE(run("sweep --input " + q(noisy) +
              " --deltas 0.01 0.5 1.5 10 --out-dir " + q(sweep)) == 0);
  const std::string sweep_csv = slurp(sweep / "sweep.csv");
  CHECK(sweep_csv.find("delta,ball_id") == 0);
  CHECK(sweep_csv.find("v' = 0") != std::string::npos);  // delta 10 empties it

  REQUIRE(run("benchmark --input " + q(noisy) + " --out-dir " + q(bench)) == 0);
  CHECK(fs::exists(bench / "benchmark.csv"));
  CHECK(fs::exists(bench / "benchmark.json"));
  const std::string bench_csv = slurp(bench / "benchmark.csv");
  for (const char* t : {"T1", "T2", "T3", "T4"})
    CHECK(bench_csv.find(t) != std::string::npos);

  REQUIRE(run("noise-estimate --input " + q(noisy) + " --out-dir " + q(noise)) ==
          0);
  const std::string estimates = slurp(noise / "noise_estimates.csv");
  CHECK(estimates.find("eta") != std::string::npos);

  SUBCASE("calibration cache is reused on the second run") {
    REQUIRE(run("noise-estimate --input " + q(noisy) + " --out-dir " + q(noise)) ==
            0);
    const std::string manifest = slurp(noise / "manifest.json");
    CHECK(manifest.find("\"cache_hit\": true") != std::string::npos);
  }

  REQUIRE(run("plot --chart trajectory --input " + q(noisy) + " --out-dir " +
              q(plot)) == 0);
  REQUIRE(run("plot --chart loglog --input " + q(noisy) + " --out-dir " +
              q(plot)) == 0);
  REQUIRE(run("plot --chart heatmap --input " + q(fit / "heatmap.csv") +
              " --out-dir " + q(plot)) == 0);
  CHECK(fs::exists(plot / "loglog_displacement.svg"));
  CHECK(fs::exists(plot / "coefficient_heatmap.svg"));
  bool found_traj_svg = false;
  for (const auto& entry : fs::directory_iterator(plot))
    if (entry.path().filename().string().find("_drop") != std::string::npos)
      found_traj_svg = true;
  CHECK(found_traj_svg);
  const std::string svg = slurp(plot / "loglog_displacement.svg");
  CHECK(svg.find("<svg") != std::string::npos);

  SUBCASE("config file fills in unset options") {
    const fs::path cfg = kDir / "cfg.json";
    std::ofstream(cfg) << R"({"delta": 10.0})";
    const fs::path fit2 = kDir / "fit_cfg";
    REQUIRE(run("--config " + q(cfg) + " fit --input " + q(noisy) +
                " --out-dir " + q(fit2)) == 0);
    CHECK(slurp(fit2 / "equations.txt").find("v' = 0") != std::string::npos);
    // an explicit flag beats the config value
    const fs::path fit3 = kDir / "fit_flag";
    REQUIRE(run("--config " + q(cfg) + " fit --input " + q(noisy) +
                " --delta 1.5 --out-dir " + q(fit3)) == 0);
    CHECK(slurp(fit3 / "equations.txt").find("v' = 0") == std::string::npos);
  }
}

TEST_CASE("command-line failure modes") {
  CHECK(run("fit --input /nonexistent.csv --out-dir " + q(kDir / "x")) != 0);
  CHECK(run("simulate --model bogus --out-dir " + q(kDir / "x")) != 0);
  CHECK(run("plot --chart bogus --input /dev/null --out-dir " + q(kDir / "x")) !=
        0);
  CHECK(run("sweep --input /nonexistent.csv --deltas 0.1 --out-dir " +
            q(kDir / "x")) != 0);

  // malformed CSV reports the offending line and exits nonzero
  const fs::path bad = kDir / "bad.csv";
  fs::create_directories(kDir);
  std::ofstream(bad) << "ball_id,drop_id,time_s,height_m\nb,1,0.0,not_a_number\n";
  CHECK(run("fit --input " + q(bad) + " --out-dir " + q(kDir / "x")) != 0);
}
