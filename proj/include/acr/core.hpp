#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace acr {

/// A point of the D-dimensional search space.
using Point = std::vector<double>;

/// Box bounds [lower_d, upper_d] of the search space.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dimension() const { return lower.size(); }
  double width(std::size_t d) const { return upper[d] - lower[d]; }
  bool contains(std::span<const double> x) const;

  /// Throws std::invalid_argument unless both sides have equal length and
  /// lower_d < upper_d holds for every dimension.
  void validate() const;
};

/// Objective value and total (weighted) constraint violation of a point.
/// f_con is zero exactly when every transformed constraint is satisfied.
struct Goodness {
  double f_obj = 0.0;
  double f_con = 0.0;

  bool feasible() const { return f_con == 0.0; }
  bool operator==(const Goodness&) const = default;
};

/// Source of the two random primitives used by the agent rules.
///
/// RngStream is the production implementation; tests substitute scripted
/// sources to pin individual draws.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Real value in [0, 1).
  virtual double uniform_real() = 0;

  /// Integer uniformly distributed over {a, ..., b}. Throws
  /// std::invalid_argument when a > b.
  std::int64_t uniform_int(std::int64_t a, std::int64_t b);

 protected:
  virtual std::int64_t draw_int(std::int64_t a, std::int64_t b) = 0;
};

/// Seeded 64-bit Mersenne Twister (std::mt19937_64, 19937-bit state).
///
/// The mapping from raw engine output to reals and bounded integers is done
/// here rather than by the <random> distributions, whose algorithms are
/// implementation-defined; this keeps streams identical across standard
/// libraries.
///
/// - uniform_real: top 53 bits of one engine output times 2^-53.
/// - uniform_int: rejection sampling on the raw 64-bit output, no modulo bias.
class RngStream final : public RandomSource {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double uniform_real() override;
  std::uint64_t seed() const { return seed_; }

 protected:
  std::int64_t draw_int(std::int64_t a, std::int64_t b) override;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace acr
