#pragma once

#include "acr/core.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace acr {

/// Constraint-handling rule of a run.
enum class HandlerMode {
  bch,   ///< Lexicographic (violation, objective) comparison only.
  acr1,  ///< Adaptive relaxation with the ratio-keeping sub-rules.
  acr2,  ///< As acr1, plus the forcing sub-rule after t_th.
};

std::string_view to_string(HandlerMode mode);
/// Accepts "bch", "acr1", "acr2" (case-insensitive).
HandlerMode parse_handler(std::string_view text);

class ComparisonError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Total preorder on Goodness: smaller f_con first, then smaller f_obj.
/// std::weak_ordering::less means `a` is better. Throws ComparisonError on
/// NaN in either argument.
std::weak_ordering compare_bch(const Goodness& a, const Goodness& b);

/// compare_bch on (f_obj, max(eps_r, f_con)). Identical to compare_bch at
/// eps_r = 0.
std::weak_ordering compare_relaxed(const Goodness& a, const Goodness& b,
                                   double eps_r);

/// The comparator active during one learning cycle.
struct Comparator {
  double eps_r = 0.0;

  std::weak_ordering operator()(const Goodness& a, const Goodness& b) const {
    return compare_relaxed(a, b, eps_r);
  }
  bool better(const Goodness& a, const Goodness& b) const {
    return (*this)(a, b) < 0;
  }
  bool not_worse(const Goodness& a, const Goodness& b) const {
    return (*this)(a, b) <= 0;
  }
};

/// Control constants of the relaxation controller.
struct AcrParams {
  double r_l = 0.25;
  double r_u = 0.75;
  double beta_l = 0.618;
  double beta_u = 1.382;
  double beta_f = 0.618;
  /// Cycle from which the forcing sub-rule fires. Unset means half of T.
  std::optional<double> t_th;

  double threshold_cycle(std::int64_t total_cycles) const {
    return t_th ? *t_th : 0.5 * static_cast<double>(total_cycles);
  }

  /// Throws std::invalid_argument unless 0 <= r_l < r_u <= 1,
  /// 0 < beta_l < 1 < beta_u, 0 < beta_f < 1 and t_th >= 0.
  void validate() const;
};

/// eps_r values below this are snapped to zero.
inline constexpr double kEpsRFloor = 1e-12;

struct AcrState {
  AcrParams params;
  double eps_r = 0.0;
  double t_th = 0.0;
  std::int64_t total_cycles = 0;

  static AcrState start(const AcrParams& params, std::int64_t total_cycles,
                        double eps_r0);
};

/// Initial relaxation threshold: the largest f_con in the repository.
/// Throws std::invalid_argument on an empty repository.
double init_eps_r(std::span<const Goodness> repository);

/// One controller step for cycle t. Ratio-keeping first: with r_N the
/// fraction of repository entries having f_con <= eps_r, eps_r is scaled by
/// beta_u when r_N <= r_l and by beta_l when r_N >= r_u. Then, in acr2 only,
/// eps_r is scaled by beta_f once t >= t_th. Stores and returns the new eps_r.
double update_eps_r(AcrState& state, std::span<const Goodness> repository,
                    std::int64_t t, HandlerMode mode);

}  // namespace acr
