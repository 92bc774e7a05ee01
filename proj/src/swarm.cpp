#include "acr/swarm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace acr {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ps: return "ps";
    case Algorithm::de: return "de";
    case Algorithm::deps: return "deps";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (key == "ps") return Algorithm::ps;
  if (key == "de") return Algorithm::de;
  if (key == "deps") return Algorithm::deps;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

void SwarmConfig::validate() const {
  if (swarm_size < 2) throw std::invalid_argument("swarm: need N >= 2");
  if (cycles < 0) throw std::invalid_argument("swarm: need T >= 0");
  if (!(crossover >= 0.0 && crossover <= 1.0)) {
    throw std::invalid_argument("swarm: CR must lie in [0, 1]");
  }
  if (diff_vectors < 1) throw std::invalid_argument("swarm: need NV >= 1");
  for (double c : {inertia, c1, c2, scale}) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("swarm: coefficients must be finite");
    }
  }
}

std::vector<Goodness> SwarmState::repository() const {
  std::vector<Goodness> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.p_goodness);
  return out;
}

Handler make_handler(HandlerMode mode, const AcrParams& params,
                     std::int64_t cycles, std::span<const AgentState> agents) {
  Handler h;
  h.mode = mode;
  if (mode != HandlerMode::bch) {
    std::vector<Goodness> repo;
    repo.reserve(agents.size());
    for (const auto& a : agents) repo.push_back(a.p_goodness);
    h.acr = AcrState::start(params, cycles, init_eps_r(repo));
  }
  return h;
}

void wrap_periodic(std::span<double> x, const Bounds& bounds) {
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double lo = bounds.lower[d];
    const double hi = bounds.upper[d];
    if (x[d] >= lo && x[d] <= hi) continue;
    if (!std::isfinite(x[d])) {
      throw std::domain_error("wrap_periodic: non-finite coordinate " +
                              std::to_string(d));
    }
    const double width = hi - lo;
    double r = std::fmod(x[d] - lo, width);
    if (r < 0.0) r += width;
    if (r >= width) r = 0.0;
    x[d] = lo + r;
  }
}

Point wrap_periodic(Point x, const Bounds& bounds) {
  wrap_periodic(std::span<double>(x), bounds);
  return x;
}

std::size_t select_best(std::span<const AgentState> agents,
                        const Comparator& cmp) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < agents.size(); ++i) {
    if (cmp.better(agents[i].p_goodness, agents[best].p_goodness)) best = i;
  }
  return best;
}

bool ps_step(AgentState& agent, std::span<const double> g,
             const SwarmConfig& cfg, const Comparator& cmp, Evaluator& eval,
             RandomSource& rng) {
  for (std::size_t d = 0; d < agent.x.size(); ++d) {
    const double r1 = rng.uniform_real();
    const double r2 = rng.uniform_real();
    agent.v[d] = cfg.inertia * agent.v[d] +
                 cfg.c1 * r1 * (agent.p[d] - agent.x[d]) +
                 cfg.c2 * r2 * (g[d] - agent.x[d]);
    agent.x[d] += agent.v[d];
  }
  wrap_periodic(std::span<double>(agent.x), eval.problem().bounds);

  const Goodness fit = eval(agent.x);
  if (!cmp.not_worse(fit, agent.p_goodness)) return false;
  agent.p = agent.x;
  agent.p_goodness = fit;
  return true;
}

bool de_step(AgentState& agent, std::span<const double> g,
             std::span<const AgentState> repository, const SwarmConfig& cfg,
             const Comparator& cmp, Evaluator& eval, RandomSource& rng) {
  const std::size_t dim = agent.p.size();
  const auto last = static_cast<std::int64_t>(repository.size());

  const auto forced =
      static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(dim)) - 1);

  Point delta(dim, 0.0);
  for (std::size_t k = 0; k < cfg.diff_vectors; ++k) {
    const auto& a = repository[static_cast<std::size_t>(rng.uniform_int(1, last) - 1)].p;
    const auto& b = repository[static_cast<std::size_t>(rng.uniform_int(1, last) - 1)].p;
    for (std::size_t d = 0; d < dim; ++d) delta[d] += a[d] - b[d];
  }

  Point trial = agent.p;
  for (std::size_t d = 0; d < dim; ++d) {
    const bool crossed = rng.uniform_real() < cfg.crossover;
    if (crossed || d == forced) trial[d] = g[d] + cfg.scale * delta[d];
  }
  wrap_periodic(std::span<double>(trial), eval.problem().bounds);

  const Goodness fit = eval(trial);
  if (!cmp.not_worse(fit, agent.p_goodness)) return false;
  agent.p = std::move(trial);
  agent.p_goodness = fit;
  return true;
}

SwarmState init_swarm(const SwarmConfig& cfg, Evaluator& eval,
                      RandomSource& rng) {
  const auto& bounds = eval.problem().bounds;
  const std::size_t dim = eval.problem().dimension;
  SwarmState state;
  state.agents.resize(cfg.swarm_size);
  for (auto& agent : state.agents) {
    agent.x.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      agent.x[d] = bounds.lower[d] + rng.uniform_real() * bounds.width(d);
    }
    agent.v.assign(dim, 0.0);
    agent.p = agent.x;
    agent.p_goodness = eval(agent.p);
    ++state.eval_count;
  }
  return state;
}

void run_cycle(SwarmState& state, const SwarmConfig& cfg, Evaluator& eval,
               Handler& handler, RandomSource& rng) {
  ++state.t;
  if (handler.mode != HandlerMode::bch) {
    update_eps_r(handler.acr, state.repository(), state.t, handler.mode);
    state.best = select_best(state.agents, handler.comparator());
  }
  const Comparator cmp = handler.comparator();

  const bool use_ps = cfg.algorithm == Algorithm::ps ||
                      (cfg.algorithm == Algorithm::deps && state.t % 2 == 1);

  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const Point g = state.g();
    auto& agent = state.agents[i];
    const bool replaced =
        use_ps ? ps_step(agent, g, cfg, cmp, eval, rng)
               : de_step(agent, g, state.agents, cfg, cmp, eval, rng);
    ++state.eval_count;
    if (replaced && i != state.best &&
        cmp.better(agent.p_goodness, state.g_goodness())) {
      state.best = i;
    }
  }
}

RunResult run(const ProblemDef& problem, const SwarmConfig& cfg,
              HandlerMode mode, const AcrParams& params, std::uint64_t seed) {
  problem.validate();
  cfg.validate();
  params.validate();

  RngStream rng(seed);
  Evaluator eval(problem);
  SwarmState state = init_swarm(cfg, eval, rng);
  Handler handler = make_handler(mode, params, cfg.cycles, state.agents);
  state.best = select_best(state.agents, handler.comparator());

  RunResult result;
  const auto steps = static_cast<std::size_t>(cfg.cycles);
  result.best_trace.reserve(steps + 1);
  result.best_trace.push_back(state.g_goodness());
  if (mode != HandlerMode::bch) {
    result.eps_r_trace.reserve(steps + 1);
    result.eps_r_trace.push_back(handler.acr.eps_r);
  }

  for (std::int64_t t = 0; t < cfg.cycles; ++t) {
    run_cycle(state, cfg, eval, handler, rng);
    result.best_trace.push_back(state.g_goodness());
    if (mode != HandlerMode::bch) result.eps_r_trace.push_back(handler.acr.eps_r);
  }

  const std::size_t final_best = select_best(state.agents, Comparator{0.0});
  result.best = state.agents[final_best].p;
  result.goodness = state.agents[final_best].p_goodness;
  result.reported_objective = problem.reported(result.goodness.f_obj);
  result.feasible = result.goodness.feasible();
  result.final_eps_r = mode == HandlerMode::bch ? 0.0 : handler.acr.eps_r;
  result.evaluations = eval.count();
  return result;
}

}  // namespace acr
