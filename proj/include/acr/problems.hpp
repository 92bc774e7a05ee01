#pragma once

#include "acr/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace acr {

using ScalarFunction = std::function<double(std::span<const double>)>;

/// A constrained minimization problem
///
///   minimize f(x)  s.t.  g_j(x) <= 0,  h_j(x) = 0,  x in bounds
///
/// where every equality is evaluated as the inequality |h_j(x)| - eps_h <= 0.
struct ProblemDef {
  std::string name;
  std::size_t dimension = 0;
  Bounds bounds;
  ScalarFunction objective;
  std::vector<ScalarFunction> inequalities;
  std::vector<ScalarFunction> equalities;
  double eps_h = 1e-4;
  /// One positive weight per constraint (inequalities first). Empty means
  /// every weight is 1.
  std::vector<double> weights;
  /// Reports print -f instead of f (G3 is maximized in the literature).
  bool report_negated = false;

  std::size_t constraint_count() const {
    return inequalities.size() + equalities.size();
  }
  double weight(std::size_t j) const {
    return weights.empty() ? 1.0 : weights[j];
  }
  double reported(double f_obj) const {
    return report_negated ? -f_obj : f_obj;
  }

  /// Throws std::invalid_argument if the definition is inconsistent.
  void validate() const;
};

/// Raised when the objective or a constraint yields a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  /// constraint == std::nullopt refers to the objective.
  EvaluationError(std::string problem, std::optional<std::size_t> constraint,
                  std::size_t dimension);

  std::optional<std::size_t> constraint() const { return constraint_; }
  std::size_t dimension() const { return dimension_; }

 private:
  std::optional<std::size_t> constraint_;
  std::size_t dimension_;
};

/// Per-constraint violations: max(0, g_j(x)) for the inequalities followed by
/// max(0, |h_j(x)| - eps_h) for the equalities. Weights are not applied.
std::vector<double> violation_terms(const ProblemDef& problem,
                                    std::span<const double> x);

/// (f(x), sum_j r_j * violation_j(x)).
Goodness evaluate(const ProblemDef& problem, std::span<const double> x);

/// Evaluates points of one problem and counts the evaluations.
class Evaluator {
 public:
  explicit Evaluator(const ProblemDef& problem) : problem_(&problem) {}

  Goodness operator()(std::span<const double> x) {
    ++count_;
    return evaluate(*problem_, x);
  }

  const ProblemDef& problem() const { return *problem_; }
  std::uint64_t count() const { return count_; }

 private:
  const ProblemDef* problem_;
  std::uint64_t count_ = 0;
};

ProblemDef make_g3(std::size_t dimension = 10);
ProblemDef make_g5();
ProblemDef make_g11();
ProblemDef make_g13();

/// Registered benchmark ids, in display order: g3, g5, g11, g13.
std::vector<std::string> problem_names();

/// Looks up a benchmark by id (case-insensitive). Throws std::invalid_argument
/// for unknown names.
ProblemDef make_problem(std::string_view name);

/// Literature constants for one benchmark. Means are in reported sign
/// convention (positive for G3).
struct ReferenceRecord {
  std::string name;
  /// Best known value at eps_h = 1E-4.
  double f_star;
  double es_mean;
  double es_std;
  std::optional<double> ga_mean;
  std::optional<double> ga_std;
};

/// Throws std::invalid_argument for unknown names.
const ReferenceRecord& reference_record(std::string_view name);
const std::vector<ReferenceRecord>& reference_records();

}  // namespace acr
