#include "acr/swarm.hpp"
#include "scripted_random.hpp"

#include <cmath>
#include <doctest.h>
#include <memory>

using namespace acr;
using acr::testing::ScriptedRandom;

namespace {

ProblemDef line_problem(double lo = -10.0, double hi = 10.0) {
  ProblemDef p;
  p.name = "line";
  p.dimension = 1;
  p.bounds = {{lo}, {hi}};
  p.objective = [](std::span<const double> x) { return x[0] * x[0]; };
  return p;
}

// Constant objective, no constraints: every trial is accepted, so p exposes
// the trial point.
ProblemDef flat_problem(std::size_t dim) {
  ProblemDef p;
  p.name = "flat";
  p.dimension = dim;
  p.bounds = {std::vector<double>(dim, -100.0), std::vector<double>(dim, 100.0)};
  p.objective = [](std::span<const double>) { return 0.0; };
  return p;
}

AgentState agent_at(Point x, Point v, Point p, const ProblemDef& prob) {
  AgentState a{std::move(x), std::move(v), std::move(p), {}};
  a.p_goodness = evaluate(prob, a.p);
  return a;
}

}  // namespace

TEST_CASE("ps_step velocity and position update with pinned draws") {
  const auto prob = line_problem();
  Evaluator eval(prob);
  ScriptedRandom rng;
  rng.default_real = 1.0;
  SwarmConfig cfg;  // w = 0.4, c1 = c2 = 2

  auto agent = agent_at({0.0}, {1.0}, {0.5}, prob);
  const Point g{-0.25};
  ps_step(agent, g, cfg, Comparator{}, eval, rng);
  CHECK(agent.v[0] == doctest::Approx(0.9));
  CHECK(agent.x[0] == doctest::Approx(0.9));
  // 0.81 is worse than 0.25, so p stays.
  CHECK(agent.p[0] == 0.5);
  CHECK(eval.count() == 1);
}

TEST_CASE("ps_step fixed point and degenerate coefficients") {
  const auto prob = line_problem();
  Evaluator eval(prob);
  RngStream rng(1);
  SwarmConfig cfg;

  auto still = agent_at({2.0}, {0.0}, {2.0}, prob);
  ps_step(still, Point{2.0}, cfg, Comparator{}, eval, rng);
  CHECK(still.v[0] == 0.0);
  CHECK(still.x[0] == 2.0);

  cfg.inertia = 0.0;
  cfg.c1 = 0.0;
  cfg.c2 = 0.0;
  auto frozen = agent_at({3.0}, {5.0}, {1.0}, prob);
  ps_step(frozen, Point{-1.0}, cfg, Comparator{}, eval, rng);
  CHECK(frozen.v[0] == 0.0);
  CHECK(frozen.x[0] == 3.0);
}

TEST_CASE("ps_step replaces p on improvement and on ties") {
  const auto prob = line_problem();
  Evaluator eval(prob);
  ScriptedRandom rng;
  rng.default_real = 0.0;
  SwarmConfig cfg;
  cfg.inertia = 1.0;

  auto better = agent_at({2.0}, {-1.5}, {2.0}, prob);
  CHECK(ps_step(better, Point{2.0}, cfg, Comparator{}, eval, rng));
  CHECK(better.p[0] == 0.5);
  CHECK(better.p_goodness.f_obj == 0.25);

  auto tie = agent_at({-1.0}, {2.0}, {-1.0}, prob);
  CHECK(ps_step(tie, Point{-1.0}, cfg, Comparator{}, eval, rng));
  CHECK(tie.p[0] == 1.0);
}

TEST_CASE("de_step with CR = 0 changes exactly the forced dimension") {
  const auto prob = flat_problem(6);
  RngStream rng(77);
  SwarmConfig cfg;
  cfg.crossover = 0.0;

  std::vector<AgentState> repo;
  for (int i = 0; i < 8; ++i) {
    Point p(6);
    for (auto& c : p) c = -50.0 + 100.0 * rng.uniform_real();
    repo.push_back(agent_at(p, Point(6, 0.0), p, prob));
  }
  Evaluator eval(prob);
  for (int trial = 0; trial < 200; ++trial) {
    const Point before = repo[0].p;
    const Point g = repo[3].p;
    de_step(repo[0], g, repo, cfg, Comparator{}, eval, rng);
    int changed = 0;
    for (std::size_t d = 0; d < 6; ++d) changed += repo[0].p[d] != before[d];
    CHECK(changed <= 1);
  }
}

TEST_CASE("de_step with identical repository collapses to g") {
  const auto prob = line_problem();
  Evaluator eval(prob);
  RngStream rng(3);
  SwarmConfig cfg;
  cfg.crossover = 1.0;

  std::vector<AgentState> repo(4, agent_at({1.0}, {0.0}, {1.0}, prob));
  CHECK(de_step(repo[0], Point{1.0}, repo, cfg, Comparator{}, eval, rng));
  CHECK(repo[0].p[0] == 1.0);

  auto flat = flat_problem(3);
  Evaluator flat_eval(flat);
  std::vector<AgentState> same(5, agent_at({0, 0, 0}, {0, 0, 0}, {4.0, 5.0, 6.0}, flat));
  de_step(same[1], Point{1.0, 2.0, 3.0}, same, cfg, Comparator{}, flat_eval, rng);
  CHECK(same[1].p == Point{1.0, 2.0, 3.0});
}

TEST_CASE("de_step scalar arithmetic with pinned draws") {
  const auto prob = flat_problem(1);
  Evaluator eval(prob);
  SwarmConfig cfg;
  cfg.crossover = 1.0;
  cfg.diff_vectors = 2;
  cfg.scale = 0.5;

  // p values 0.0, 0.4, 1.0, 0.8 (indices 1..4).
  std::vector<AgentState> repo;
  for (double v : {0.0, 0.4, 1.0, 0.8}) repo.push_back(agent_at({9.0}, {7.0}, {v}, prob));

  ScriptedRandom rng;
  // DR, then (a1, b1) = (2, 1): +0.4, then (a2, b2) = (4, 3): -0.2.
  rng.ints = {1, 2, 1, 4, 3};
  rng.reals = {0.3};
  const double g = 2.0;
  CHECK(de_step(repo[0], Point{g}, repo, cfg, Comparator{}, eval, rng));
  CHECK(repo[0].p[0] == doctest::Approx(g + 0.1));
  // x and v belong to the PS rule and are untouched.
  CHECK(repo[0].x[0] == 9.0);
  CHECK(repo[0].v[0] == 7.0);
}

TEST_CASE("wrap_periodic examples") {
  const Bounds unit{{0.0}, {1.0}};
  CHECK(wrap_periodic(Point{1.3}, unit)[0] == doctest::Approx(0.3));
  CHECK(wrap_periodic(Point{-0.2}, unit)[0] == doctest::Approx(0.8));
  CHECK(wrap_periodic(Point{0.5}, Bounds{{-1.0}, {1.0}})[0] == 0.5);
  CHECK(wrap_periodic(Point{1.0}, unit)[0] == 1.0);
  CHECK(wrap_periodic(Point{2.0}, unit)[0] == 0.0);
  CHECK_THROWS_AS(wrap_periodic(Point{INFINITY}, unit), std::domain_error);
}

TEST_CASE("wrap_periodic lands every coordinate inside the bounds") {
  RngStream rng(8);
  const Bounds b{{-0.55, 0.0, -3.2}, {0.55, 1200.0, 3.2}};
  for (int i = 0; i < 10000; ++i) {
    Point x(3);
    for (auto& c : x) c = -5000.0 + 10000.0 * rng.uniform_real();
    const Point in_range = x;
    const Point w = wrap_periodic(x, b);
    CHECK(b.contains(w));
    for (std::size_t d = 0; d < 3; ++d) {
      if (in_range[d] >= b.lower[d] && in_range[d] <= b.upper[d]) {
        CHECK(w[d] == in_range[d]);
      } else {
        // Same residue class modulo the width.
        const double k = (in_range[d] - w[d]) / b.width(d);
        CHECK(std::abs(k - std::round(k)) < 1e-6);
      }
    }
  }
}

TEST_CASE("DEPS alternates PS on odd cycles and DE on even cycles") {
  const auto prob = make_g11();
  Evaluator eval(prob);
  RngStream rng(11);
  SwarmConfig cfg;
  cfg.swarm_size = 10;
  auto state = init_swarm(cfg, eval, rng);
  Handler handler = make_handler(HandlerMode::bch, {}, 10, state.agents);
  state.best = select_best(state.agents, handler.comparator());

  const auto snapshot = state.agents;
  run_cycle(state, cfg, eval, handler, rng);
  CHECK(state.t == 1);
  int moved = 0;
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    moved += state.agents[i].x != snapshot[i].x;
  }
  // Only the starting global best can stay put: x = p = g with v = 0.
  CHECK(moved >= 9);

  const auto after_ps = state.agents;
  run_cycle(state, cfg, eval, handler, rng);
  CHECK(state.t == 2);
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    CHECK(state.agents[i].x == after_ps[i].x);
    CHECK(state.agents[i].v == after_ps[i].v);
  }
}

TEST_CASE("run_cycle accounting and global-best invariant") {
  const auto prob = make_g5();
  for (auto mode : {HandlerMode::bch, HandlerMode::acr1, HandlerMode::acr2}) {
    for (auto algo : {Algorithm::ps, Algorithm::de, Algorithm::deps}) {
      CAPTURE(to_string(mode));
      CAPTURE(to_string(algo));
      Evaluator eval(prob);
      RngStream rng(5);
      SwarmConfig cfg;
      cfg.algorithm = algo;
      cfg.swarm_size = 12;
      cfg.cycles = 40;
      auto state = init_swarm(cfg, eval, rng);
      CHECK(state.eval_count == 12);
      Handler handler = make_handler(mode, {}, cfg.cycles, state.agents);
      state.best = select_best(state.agents, handler.comparator());

      for (int t = 1; t <= 40; ++t) {
        const auto before = state.repository();
        run_cycle(state, cfg, eval, handler, rng);
        CHECK(state.eval_count == 12u * static_cast<unsigned>(t + 1));
        CHECK(eval.count() == state.eval_count);
        const auto cmp = handler.comparator();
        for (const auto& a : state.agents) {
          CHECK_FALSE(cmp.better(a.p_goodness, state.g_goodness()));
          CHECK(prob.bounds.contains(a.p));
          CHECK(a.p_goodness == evaluate(prob, a.p));
        }
        if (mode == HandlerMode::bch) {
          for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(compare_bch(state.agents[i].p_goodness, before[i]) <= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("run: T = 0 returns the best initial point") {
  const auto prob = make_g13();
  SwarmConfig cfg;
  cfg.swarm_size = 20;
  cfg.cycles = 0;
  const auto r = run(prob, cfg, HandlerMode::acr2, {}, 9);
  CHECK(r.evaluations == 20);
  CHECK(r.best_trace.size() == 1);
  CHECK(r.eps_r_trace.size() == 1);

  Evaluator eval(prob);
  RngStream rng(9);
  const auto state = init_swarm(cfg, eval, rng);
  const auto best = select_best(state.agents, Comparator{});
  CHECK(r.best == state.agents[best].p);
  CHECK(r.goodness == state.agents[best].p_goodness);
}

TEST_CASE("run is deterministic per seed and evaluates only in-bounds points") {
  auto prob = make_g5();
  auto outside = std::make_shared<int>(0);
  const auto base = prob.objective;
  const auto bounds = prob.bounds;
  prob.objective = [base, bounds, outside](std::span<const double> x) {
    if (!bounds.contains(x)) ++*outside;
    return base(x);
  };
  SwarmConfig cfg;
  cfg.swarm_size = 15;
  cfg.cycles = 60;
  const auto a = run(prob, cfg, HandlerMode::acr2, {}, 123);
  const auto b = run(prob, cfg, HandlerMode::acr2, {}, 123);
  const auto c = run(prob, cfg, HandlerMode::acr2, {}, 124);
  CHECK(*outside == 0);
  CHECK(a.best == b.best);
  CHECK(a.eps_r_trace == b.eps_r_trace);
  CHECK(a.best_trace == b.best_trace);
  CHECK(a.best_trace != c.best_trace);
  CHECK(a.evaluations == 15u * 60u + 15u);
  CHECK(a.eps_r_trace.size() == 61);
  CHECK(a.best_trace.size() == 61);
}

TEST_CASE("run under bch has no eps_r trace") {
  SwarmConfig cfg;
  cfg.swarm_size = 5;
  cfg.cycles = 3;
  const auto r = run(make_g11(), cfg, HandlerMode::bch, {}, 1);
  CHECK(r.eps_r_trace.empty());
  CHECK(r.final_eps_r == 0.0);
}

TEST_CASE("DEPS with ACR2 solves G11") {
  SwarmConfig cfg;  // N = 70
  cfg.cycles = 2000;
  const auto r = run(make_g11(), cfg, HandlerMode::acr2, {}, 42);
  CHECK(r.feasible);
  CHECK(r.reported_objective == doctest::Approx(0.7499).epsilon(5e-4));
}

TEST_CASE("swarm config validation and names") {
  SwarmConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.swarm_size = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.crossover = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.diff_vectors = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.cycles = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(parse_algorithm("DEPS") == Algorithm::deps);
  CHECK_THROWS_AS(parse_algorithm("ga"), std::invalid_argument);
}
