#include "acr/handling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace acr {

namespace {

std::weak_ordering order_of(double a, double b) {
  if (a < b) return std::weak_ordering::less;
  if (b < a) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

void require_comparable(const Goodness& a, const Goodness& b) {
  if (std::isnan(a.f_obj) || std::isnan(a.f_con) || std::isnan(b.f_obj) ||
      std::isnan(b.f_con)) {
    throw ComparisonError("cannot compare goodness values containing NaN");
  }
}

}  // namespace

std::string_view to_string(HandlerMode mode) {
  switch (mode) {
    case HandlerMode::bch: return "bch";
    case HandlerMode::acr1: return "acr1";
    case HandlerMode::acr2: return "acr2";
  }
  return "?";
}

HandlerMode parse_handler(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (key == "bch") return HandlerMode::bch;
  if (key == "acr1") return HandlerMode::acr1;
  if (key == "acr2") return HandlerMode::acr2;
  throw std::invalid_argument("unknown handler '" + std::string(text) + "'");
}

std::weak_ordering compare_bch(const Goodness& a, const Goodness& b) {
  require_comparable(a, b);
  if (auto c = order_of(a.f_con, b.f_con); c != 0) return c;
  return order_of(a.f_obj, b.f_obj);
}

std::weak_ordering compare_relaxed(const Goodness& a, const Goodness& b,
                                   double eps_r) {
  require_comparable(a, b);
  if (std::isnan(eps_r)) throw ComparisonError("eps_r is NaN");
  return compare_bch({a.f_obj, std::max(eps_r, a.f_con)},
                     {b.f_obj, std::max(eps_r, b.f_con)});
}

void AcrParams::validate() const {
  if (!(0.0 <= r_l && r_l < r_u && r_u <= 1.0)) {
    throw std::invalid_argument("acr: need 0 <= r_l < r_u <= 1");
  }
  if (!(0.0 < beta_l && beta_l < 1.0 && 1.0 < beta_u && std::isfinite(beta_u))) {
    throw std::invalid_argument("acr: need 0 < beta_l < 1 < beta_u");
  }
  if (!(0.0 < beta_f && beta_f < 1.0)) {
    throw std::invalid_argument("acr: need 0 < beta_f < 1");
  }
  if (t_th && !(*t_th >= 0.0)) {
    throw std::invalid_argument("acr: t_th must be >= 0");
  }
}

AcrState AcrState::start(const AcrParams& params, std::int64_t total_cycles,
                         double eps_r0) {
  params.validate();
  if (!(eps_r0 >= 0.0) || !std::isfinite(eps_r0)) {
    throw std::invalid_argument("acr: initial eps_r must be finite and >= 0");
  }
  AcrState s;
  s.params = params;
  s.eps_r = eps_r0 < kEpsRFloor ? 0.0 : eps_r0;
  s.t_th = params.threshold_cycle(total_cycles);
  s.total_cycles = total_cycles;
  return s;
}

double init_eps_r(std::span<const Goodness> repository) {
  if (repository.empty()) {
    throw std::invalid_argument("init_eps_r: empty repository");
  }
  double eps = 0.0;
  for (const auto& g : repository) eps = std::max(eps, g.f_con);
  return eps;
}

double update_eps_r(AcrState& state, std::span<const Goodness> repository,
                    std::int64_t t, HandlerMode mode) {
  if (mode == HandlerMode::bch || repository.empty()) return state.eps_r;
  const auto& prm = state.params;

  const auto inside = std::count_if(
      repository.begin(), repository.end(),
      [&](const Goodness& g) { return g.f_con <= state.eps_r; });
  const double ratio =
      static_cast<double>(inside) / static_cast<double>(repository.size());

  double eps = state.eps_r;
  if (ratio <= prm.r_l) {
    eps *= prm.beta_u;
  } else if (ratio >= prm.r_u) {
    eps *= prm.beta_l;
  }
  if (mode == HandlerMode::acr2 && static_cast<double>(t) >= state.t_th) {
    eps *= prm.beta_f;
  }
  if (eps < kEpsRFloor) eps = 0.0;
  state.eps_r = eps;
  return eps;
}

}  // namespace acr
