#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = 0;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("uavfog_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Run cli(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + UAVFOG_CLI + "\" " + args + " > \"" +
                          (dir / "stdout.txt").string() + "\" 2> \"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(err)};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

fs::path small_config(const fs::path& dir) {
  const fs::path p = dir / "s.json";
  std::ofstream(p) << R"({"scenario":{"n_uavs":10,"n_users":30},
    "woa":{"pop_size":6},"pso":{"pop_size":6},"sim":{"n_frames":3}})";
  return p;
}

}  // namespace

TEST_CASE("generate writes a normalized scenario") {
  const auto dir = scratch("generate");
  REQUIRE(cli("generate --seed 4 --out-dir \"" + dir.string() + "\"", dir).status == 0);
  const auto doc = nlohmann::json::parse(slurp(dir / "scenario.json"));
  CHECK(doc["scenario"]["seed"] == 4);
  CHECK(doc["scenario"]["users"].size() == 120);

  // the written document reproduces itself
  const auto again = scratch("generate_again");
  REQUIRE(cli("generate --config \"" + (dir / "scenario.json").string() + "\" --out-dir \"" +
                  again.string() + "\"", again).status == 0);
  CHECK(slurp(again / "scenario.json") == slurp(dir / "scenario.json"));
}

TEST_CASE("optimize writes placement and trace") {
  const auto dir = scratch("optimize");
  const auto cfg = small_config(dir);
  for (const char* algo : {"woa", "pso"}) {
    REQUIRE(cli(std::string("optimize --algo ") + algo + " --config \"" + cfg.string() +
                    "\" --iters 20 --seed 7 --out-dir \"" + dir.string() + "\"", dir).status == 0);
    const auto placement = nlohmann::json::parse(slurp(dir / "placement.json"));
    CHECK(placement["algorithm"] == algo);
    CHECK(placement["uavs"].size() == 10);
    const std::string trace = slurp(dir / "trace.csv");
    CHECK(first_line(trace) == "iter,best_h,nc,ncv1,ncv2,a_value,encircle,explore,spiral");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 22);
  }
}

TEST_CASE("simulate, compare and sweep") {
  const auto dir = scratch("experiments");
  const auto cfg = small_config(dir);
  const std::string common = " --config \"" + cfg.string() + "\" --iters 10 --out-dir \"" + dir.string() + "\"";

  REQUIRE(cli("simulate --ecnsa" + common, dir).status == 0);
  CHECK(first_line(slurp(dir / "frames.csv")) ==
        "frame,h,connectivity_ratio,alive,total_residual_j,nls_gstar_j,deaths,swaps");
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(summary["ecnsa_enabled"] == true);
  CHECK(summary["frames"] == 3);

  REQUIRE(cli("compare --seeds 2" + common, dir).status == 0);
  CHECK(first_line(slurp(dir / "compare.csv")) == "seed,woa_h,pso_h,woa_connectivity,pso_connectivity");

  REQUIRE(cli("sweep --param comm_radius --from 90 --to 110 --step 10 --seeds 1" + common, dir).status == 0);
  const std::string sweep = slurp(dir / "sweep.csv");
  CHECK(first_line(sweep) == "comm_radius,mean_h,mean_coverage,mean_connectivity,seeds");
  CHECK(std::count(sweep.begin(), sweep.end(), '\n') == 4);
}

TEST_CASE("failures exit nonzero with an error document") {
  const auto dir = scratch("errors");
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << R"({"scenario":{"bogus":1}})";
  const Run r = cli("optimize --config \"" + bad.string() + "\"", dir);
  CHECK(r.status != 0);
  const auto doc = nlohmann::json::parse(r.err);
  CHECK(doc["error"]["kind"] == "config");

  const Run sweep = cli("sweep --param altitude --from 1 --to 2 --step 1 --out-dir \"" + dir.string() + "\"", dir);
  CHECK(sweep.status != 0);
  CHECK(nlohmann::json::parse(sweep.err)["error"]["kind"] == "config");

  const Run usage = cli("optimize --algo gradient", dir);
  CHECK(usage.status != 0);
  CHECK(nlohmann::json::parse(usage.err).contains("error"));
}
