#pragma once

#include "acr/core.hpp"
#include "acr/handling.hpp"
#include "acr/problems.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace acr {

enum class Algorithm { ps, de, deps };

std::string_view to_string(Algorithm algorithm);
/// Accepts "ps", "de", "deps" (case-insensitive).
Algorithm parse_algorithm(std::string_view text);

struct SwarmConfig {
  Algorithm algorithm = Algorithm::deps;
  std::size_t swarm_size = 70;
  std::int64_t cycles = 2000;
  // PS rule
  double inertia = 0.4;
  double c1 = 2.0;
  double c2 = 2.0;
  // DE rule
  double crossover = 0.9;
  double scale = 0.5;
  std::size_t diff_vectors = 2;

  /// Throws std::invalid_argument unless N >= 2, T >= 0, CR in [0, 1],
  /// NV >= 1 and all coefficients are finite.
  void validate() const;
};

struct AgentState {
  Point x;  ///< current position (PS rule)
  Point v;  ///< velocity (PS rule)
  Point p;  ///< personal best
  Goodness p_goodness;
};

struct SwarmState {
  std::vector<AgentState> agents;
  std::size_t best = 0;  ///< index of the agent whose p is the global best
  std::int64_t t = 0;
  std::uint64_t eval_count = 0;

  const Point& g() const { return agents[best].p; }
  const Goodness& g_goodness() const { return agents[best].p_goodness; }
  std::vector<Goodness> repository() const;
};

/// Comparator state of a run: the mode plus, for acr1/acr2, the controller.
struct Handler {
  HandlerMode mode = HandlerMode::bch;
  AcrState acr;

  Comparator comparator() const {
    return {mode == HandlerMode::bch ? 0.0 : acr.eps_r};
  }
};

/// Builds the handler for a freshly initialized swarm; in acr modes eps_r
/// starts at the largest violation in the repository.
Handler make_handler(HandlerMode mode, const AcrParams& params,
                     std::int64_t cycles, std::span<const AgentState> agents);

/// Maps every out-of-range coordinate to l + mod(x - l, u - l) with the
/// remainder in [0, u - l). In-range coordinates are untouched.
/// Throws std::domain_error on a non-finite coordinate.
void wrap_periodic(std::span<double> x, const Bounds& bounds);
Point wrap_periodic(Point x, const Bounds& bounds);

/// Index of the best personal best under `cmp`; the lowest index wins ties.
std::size_t select_best(std::span<const AgentState> agents,
                        const Comparator& cmp);

/// Particle swarm rule: new velocity and position from p and g, then a
/// wrapped evaluation of x. p takes x when x is not worse. Returns true if p
/// was replaced.
bool ps_step(AgentState& agent, std::span<const double> g,
             const SwarmConfig& cfg, const Comparator& cmp, Evaluator& eval,
             RandomSource& rng);

/// Differential evolution rule around g. The trial point starts as p; one
/// forced dimension plus every dimension passing the crossover test is set
/// to g_d + SF * delta_d, where delta is the sum of NV differences between
/// repository members drawn with replacement. p takes the trial when it is
/// not worse. x and v are not touched. Returns true if p was replaced.
bool de_step(AgentState& agent, std::span<const double> g,
             std::span<const AgentState> repository, const SwarmConfig& cfg,
             const Comparator& cmp, Evaluator& eval, RandomSource& rng);

/// Random positions uniform in the bounds, zero velocities, p = x.
/// Uses N evaluations.
SwarmState init_swarm(const SwarmConfig& cfg, Evaluator& eval,
                      RandomSource& rng);

/// One learning cycle: advances t, updates eps_r and re-selects g in acr
/// modes, then activates agents 0..N-1 in order. DEPS uses the PS rule on odd
/// t and the DE rule on even t.
void run_cycle(SwarmState& state, const SwarmConfig& cfg, Evaluator& eval,
               Handler& handler, RandomSource& rng);

struct RunResult {
  Point best;
  /// Goodness of `best`, chosen among all personal bests with eps_r = 0.
  Goodness goodness;
  double reported_objective = 0.0;
  bool feasible = false;
  double final_eps_r = 0.0;
  /// eps_r in force during cycle t at index t (index 0: initial value).
  /// Empty under bch.
  std::vector<double> eps_r_trace;
  /// Goodness of g at the end of cycle t at index t (index 0: initial swarm).
  std::vector<Goodness> best_trace;
  std::uint64_t evaluations = 0;
};

RunResult run(const ProblemDef& problem, const SwarmConfig& cfg,
              HandlerMode mode, const AcrParams& params, std::uint64_t seed);

}  // namespace acr
