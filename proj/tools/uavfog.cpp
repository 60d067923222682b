// uavfog: placement, lifetime simulation and experiment driver.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uavfog/config.hpp"
#include "uavfog/experiments.hpp"
#include "uavfog/export.hpp"
#include "uavfog/lifetime.hpp"
#include "uavfog/optimizer.hpp"

namespace fs = std::filesystem;
using namespace uavfog;

namespace {

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  bool quiet = false;
};

Config load(const Common& c) {
  Config cfg = c.config_path.empty() ? Config{} : load_config(c.config_path);
  if (c.seed) cfg.scenario.seed = *c.seed;
  return cfg;
}

GeneratedScenario prepare(const Common& c, const Config& cfg) {
  GeneratedScenario g = generate_scenario(cfg);
  if (!c.quiet) {
    for (const auto& w : g.warnings) std::cerr << "warning: " << w << '\n';
  }
  return g;
}

std::string out_path(const Common& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return (fs::path(c.out_dir) / name).string();
}

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "JSON config document")->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "Override scenario.seed");
  cmd->add_option("--out-dir", c.out_dir, "Directory for output artifacts");
  cmd->add_flag("--quiet", c.quiet, "Suppress range warnings");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV fog-node placement and lifetime simulation"};
  app.require_subcommand(1);

  Common common;

  auto* gen = app.add_subcommand("generate", "Write the normalized scenario JSON");
  add_common(gen, common);
  std::string gen_name = "scenario.json";
  gen->add_option("--output", gen_name, "File name inside --out-dir");

  auto* opt = app.add_subcommand("optimize", "Optimize a placement");
  add_common(opt, common);
  std::string algo = "woa";
  std::optional<std::size_t> iters;
  std::optional<std::size_t> threads;
  opt->add_option("--algo", algo, "woa or pso")->check(CLI::IsMember({"woa", "pso"}));
  opt->add_option("--iters", iters, "Iteration budget");
  opt->add_option("--threads", threads, "Fitness evaluation threads");

  auto* sim = app.add_subcommand("simulate", "Run the timeframe lifetime simulation");
  add_common(sim, common);
  bool ecnsa = false;
  std::optional<std::size_t> frames;
  sim->add_flag("--ecnsa", ecnsa, "Enable energy-conscious node swapping");
  sim->add_option("--frames", frames, "Number of frames");
  sim->add_option("--iters", iters, "Initial WOA iteration budget");

  auto* cmp = app.add_subcommand("compare", "Paired WOA vs PSO runs");
  add_common(cmp, common);
  std::size_t seeds = 10;
  cmp->add_option("--seeds", seeds, "Number of paired seeds");
  cmp->add_option("--iters", iters, "Iteration budget for both algorithms");

  auto* swp = app.add_subcommand("sweep", "Sweep one scenario parameter");
  add_common(swp, common);
  std::string param;
  double from = 0, to = 0, step = 1;
  std::size_t sweep_seeds = 5;
  swp->add_option("--param", param, "n_uavs, n_users or comm_radius")->required();
  swp->add_option("--from", from)->required();
  swp->add_option("--to", to)->required();
  swp->add_option("--step", step)->required();
  swp->add_option("--seeds", sweep_seeds, "Replicates per point");
  swp->add_option("--iters", iters, "WOA iteration budget per run");
  swp->add_option("--threads", threads, "Points evaluated concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json(ErrorKind::Config, e.what());
    return 2;
  }

  try {
    Config cfg = load(common);
    if (iters) {
      cfg.woa.max_iters = *iters;
      cfg.pso.max_iters = *iters;
    }
    if (threads) {
      cfg.woa.threads = *threads;
      cfg.pso.threads = *threads;
    }

    if (gen->parsed()) {
      const GeneratedScenario g = prepare(common, cfg);
      const std::string path = out_path(common, gen_name);
      write_file(path, to_json(with_users(cfg, g.scenario)));
      std::cout << path << '\n';
    } else if (opt->parsed()) {
      const GeneratedScenario g = prepare(common, cfg);
      if (common.seed) {
        cfg.woa.seed = *common.seed;
        cfg.pso.seed = *common.seed;
      }
      const OptimizerResult r = algo == "pso" ? run_pso_baseline(g.scenario, cfg.pso)
                                              : run_optimizer(g.scenario, cfg.woa);
      write_file(out_path(common, "placement.json"),
                 placement_json(r.best, g.scenario, r.report, algo));
      write_file(out_path(common, "trace.csv"),
                 render([&](std::ostream& o) { write_trace_csv(o, r.trace); }));
      std::cout << "h=" << format_double(r.report.h_value) << " ncv2=" << r.report.ncv2
                << " ncv1=" << r.report.ncv1 << " nc=" << r.report.nc << '\n';
    } else if (sim->parsed()) {
      if (ecnsa) cfg.sim.ecnsa_enabled = true;
      if (frames) cfg.sim.n_frames = *frames;
      cfg.validate();
      const GeneratedScenario g = prepare(common, cfg);
      const SimResult r = run_simulation(g.scenario, cfg.sim, cfg.woa);
      write_file(out_path(common, "frames.csv"),
                 render([&](std::ostream& o) { write_frames_csv(o, r.frames); }));
      write_file(out_path(common, "summary.json"), summary_json(r, cfg.sim));
      std::cout << "h0=" << format_double(r.h_initial)
                << " lifespan_frames=" << r.lifespan_frames << '\n';
    } else if (cmp->parsed()) {
      prepare(common, cfg);
      const CompareResult r = run_compare(cfg, seeds);
      write_file(out_path(common, "compare.csv"),
                 render([&](std::ostream& o) { write_compare_csv(o, r); }));
      std::cout << "woa mean=" << format_double(r.woa_mean)
                << " std=" << format_double(r.woa_std) << '\n'
                << "pso mean=" << format_double(r.pso_mean)
                << " std=" << format_double(r.pso_std) << '\n';
    } else if (swp->parsed()) {
      const SweepResult r = run_sweep(cfg, sweep_param_from_string(param), from, to,
                                      step, sweep_seeds, threads.value_or(1));
      write_file(out_path(common, "sweep.csv"),
                 render([&](std::ostream& o) { write_sweep_csv(o, r); }));
      for (const auto& p : r.points) {
        std::cout << param << '=' << format_double(p.value)
                  << " h=" << format_double(p.mean_h)
                  << " connectivity=" << format_double(p.mean_connectivity) << '\n';
      }
    }
  } catch (const Error& e) {
    std::cerr << error_json(e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_json(ErrorKind::Io, e.what());
    return 1;
  }
  return 0;
}
