#include "acr/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace acr {

bool Bounds::contains(std::span<const double> x) const {
  if (x.size() != dimension()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!(x[d] >= lower[d] && x[d] <= upper[d])) return false;
  }
  return true;
}

void Bounds::validate() const {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("bounds: lower and upper differ in length");
  }
  if (lower.empty()) throw std::invalid_argument("bounds: zero dimensions");
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) ||
        !(lower[d] < upper[d])) {
      throw std::invalid_argument("bounds: dimension " + std::to_string(d) +
                                  " needs finite lower < upper");
    }
  }
}

std::int64_t RandomSource::uniform_int(std::int64_t a, std::int64_t b) {
  if (a > b) {
    throw std::invalid_argument("uniform_int: empty range [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "]");
  }
  return draw_int(a, b);
}

double RngStream::uniform_real() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t RngStream::draw_int(std::int64_t a, std::int64_t b) {
  // Span as unsigned; wraps to 0 only for the full 64-bit range.
  const std::uint64_t span =
      static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a) + 1u;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % span + 1u) % span;
  std::uint64_t raw = engine_();
  while (raw > limit) raw = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + raw % span);
}

}  // namespace acr
