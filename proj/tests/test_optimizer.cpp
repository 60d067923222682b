#include <doctest.h>

#include <random>

#include "support.hpp"
#include "uavfog/config.hpp"
#include "uavfog/optimizer.hpp"

using namespace uavfog;

namespace {

Scenario default_scenario(std::uint64_t seed) {
  Config c;
  c.scenario.seed = seed;
  return generate_scenario(c).scenario;
}

WoaParams quick_woa(std::uint64_t seed, std::size_t iters = 40) {
  WoaParams p;
  p.seed = seed;
  p.max_iters = iters;
  p.pop_size = 10;
  return p;
}

bool non_decreasing(const std::vector<TraceEntry>& trace) {
  for (std::size_t t = 1; t < trace.size(); ++t)
    if (trace[t].best_h < trace[t - 1].best_h) return false;
  return true;
}

}  // namespace

TEST_CASE("init_population") {
  const Scenario s = default_scenario(1);
  const WoaParams p = quick_woa(3);
  const SearchState a = init_population(s, p);
  const SearchState b = init_population(s, p);
  CHECK(a.agents == b.agents);
  CHECK(a.agents.size() == p.pop_size);
  for (const auto& agent : a.agents) CHECK(agent.within(s));

  Scenario one = testing::small_scenario(1, 100.0);
  WoaParams tiny = quick_woa(1);
  tiny.pop_size = 2;
  const SearchState t = init_population(one, tiny);
  REQUIRE(t.agents.size() == 2);
  CHECK(t.agents[0].dimension() == 2);
  CHECK(t.trace.size() == 1);
  CHECK(t.trace[0].iter == 0);
}

TEST_CASE("whale move degenerate cases") {
  const std::vector<double> agent{10, 20, 30, 40};
  const std::vector<double> best{100, 200, 300, 400};
  const std::vector<double> partner{5, 5, 5, 5};
  const std::vector<double> zero_a(4, 0.0);
  std::vector<double> out(4);

  // A = 0 under encircling lands exactly on X*
  whale_move(agent, best, partner, {0.2, 0.3, 0.7, 0.9}, zero_a, 1.0, out);
  CHECK(out == best);

  // spiral around X* from X* stays put
  const std::vector<double> full_a(4, 2.0);
  whale_move(best, best, partner, {0.8, -0.4, 0.1, 0.1}, full_a, 1.0, out);
  CHECK(out == best);

  // |A| >= 1 explores around the partner
  const auto c = whale_move(agent, best, partner, {0.1, 0.0, 1.0, 0.5}, full_a, 1.0, out);
  CHECK(c.explore == 4);
  // A = 2, C = 1: partner - 2 * |partner - agent|
  CHECK(out[0] == doctest::Approx(5 - 2 * std::abs(5.0 - 10.0)));
}

TEST_CASE("fixed point: a population sitting on X* with A = 0 is stationary") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<double> best{1, 2, 3, 4, 5, 6};
  const std::vector<double> zero_a(6, 0.0);
  std::vector<double> out(6);
  for (int k = 0; k < 200; ++k) {
    whale_move(best, best, best, {u(gen), 2 * u(gen) - 1, u(gen), u(gen)}, zero_a, 1.0, out);
    REQUIRE(out == best);
  }
}

TEST_CASE("linear coefficient schedule") {
  CHECK(linear_coefficient(0, 500) == 2.0);
  CHECK(linear_coefficient(499, 500) == 0.0);
  CHECK(linear_coefficient(500, 500) == 0.0);
}

TEST_CASE("adaptive schedule") {
  WoaParams p;
  p.max_iters = 401;
  p.stagnation_window = 25;
  p.a_boost = 0.5;
  SearchState st;

  st.iter = 0;
  st.last_improvement = 0;
  CHECK(adaptive_schedule(st, p) == 2.0);

  st.iter = 401;
  st.last_improvement = 401;
  CHECK(adaptive_schedule(st, p) == 0.0);

  st.iter = 300;  // a_lin = 2 (1 - 300/400) = 0.5
  st.last_improvement = 299;
  CHECK(adaptive_schedule(st, p) == doctest::Approx(0.5));
  st.last_improvement = 275;
  CHECK(adaptive_schedule(st, p) == doctest::Approx(1.0));

  st.iter = 10;
  st.last_improvement = 0;
  p.stagnation_window = 5;
  CHECK(adaptive_schedule(st, p) == 2.0);
}

TEST_CASE("non-adaptive runs follow the linear schedule exactly") {
  const Scenario s = default_scenario(2);
  WoaParams p = quick_woa(5, 30);
  p.adaptive = false;
  const auto r = run_optimizer(s, p);
  for (const auto& row : r.trace) CHECK(row.a_value == linear_coefficient(row.iter, p.max_iters));
}

TEST_CASE("run_optimizer bookkeeping") {
  const Scenario s = default_scenario(3);
  const WoaParams p = quick_woa(9, 60);
  const auto r = run_optimizer(s, p);
  CHECK(r.trace.size() == p.max_iters + 1);
  CHECK(non_decreasing(r.trace));
  CHECK(r.trace.back().best_h == r.report.h_value);
  CHECK(fitness_h(r.best, s) == r.report);
  CHECK(r.best.within(s));
}

TEST_CASE("agents stay inside the area after every step") {
  const Scenario s = default_scenario(4);
  const WoaParams p = quick_woa(4, 30);
  SearchState st = init_population(s, p);
  while (st.iter < p.max_iters) {
    woa_step(st, s, p);
    for (const auto& agent : st.agents) REQUIRE(agent.within(s));
    REQUIRE(st.trace.back().best_h >= st.trace[st.trace.size() - 2].best_h);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const Scenario s = default_scenario(5);
  WoaParams p = quick_woa(11, 25);
  const auto serial = run_optimizer(s, p);
  p.threads = 3;
  const auto parallel = run_optimizer(s, p);
  CHECK(serial.trace == parallel.trace);
  CHECK(serial.best == parallel.best);

  PsoParams q;
  q.pop_size = 10;
  q.max_iters = 25;
  const auto a = run_pso_baseline(s, q);
  q.threads = 3;
  const auto b = run_pso_baseline(s, q);
  CHECK(a.trace == b.trace);
  CHECK(a.best == b.best);
}

TEST_CASE("warm start replaces agent 0") {
  const Scenario s = default_scenario(6);
  const WoaParams p = quick_woa(1);
  PlacementVector warm(s.n_uavs);
  for (std::size_t i = 0; i < s.n_uavs; ++i) warm.set_position(i, {500, 500});
  SearchOptions opt;
  opt.warm_start = warm;
  const SearchState st = init_population(s, p, opt);
  CHECK(st.agents[0] == warm);
  CHECK(st.agents[1] == init_population(s, p).agents[1]);
}

TEST_CASE("PSO baseline is deterministic and elitist") {
  const Scenario s = default_scenario(7);
  PsoParams q;
  q.pop_size = 12;
  q.max_iters = 50;
  q.seed = 3;
  const auto a = run_pso_baseline(s, q);
  const auto b = run_pso_baseline(s, q);
  CHECK(a.trace == b.trace);
  CHECK(a.trace.size() == q.max_iters + 1);
  CHECK(non_decreasing(a.trace));
  CHECK(a.best.within(s));
}

TEST_CASE("one UAV over a tight cluster reaches full coverage") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> off(-30, 30);
  std::vector<Point> users;
  for (int i = 0; i < 10; ++i) users.push_back({500 + off(gen), 500 + off(gen)});
  const Scenario s = testing::small_scenario(1, 100.0, users);

  // one disk of radius 100 centred on the cluster covers everything
  for (const auto& u : users) REQUIRE(testing::hypot2(u.x - 500, u.y - 500) <= 100.0);

  WoaParams p;
  p.pop_size = 20;
  p.max_iters = 200;
  CHECK(run_optimizer(s, p).report.h_value == 1.0);
  PsoParams q;
  q.pop_size = 20;
  q.max_iters = 200;
  CHECK(run_pso_baseline(s, q).report.h_value == 1.0);
}

TEST_CASE("parameter validation") {
  WoaParams p;
  p.pop_size = 1;
  CHECK_THROWS_AS(p.validate(), Error);
  p = WoaParams{};
  p.spiral_b = 0;
  CHECK_THROWS_AS(p.validate(), Error);
  p = WoaParams{};
  p.stagnation_window = 0;
  CHECK_THROWS_AS(p.validate(), Error);
  PsoParams q;
  q.max_iters = 0;
  CHECK_THROWS_AS(q.validate(), Error);
}
