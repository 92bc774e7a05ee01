#include "acr/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace acr {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string describe(const std::string& problem,
                     std::optional<std::size_t> constraint,
                     std::size_t dimension) {
  std::string what = "non-finite ";
  what += constraint ? "value of constraint " + std::to_string(*constraint)
                     : std::string("objective value");
  what += " in problem '" + problem + "' (D=" + std::to_string(dimension) + ")";
  return what;
}

double checked(const ProblemDef& p, std::optional<std::size_t> constraint,
               double value) {
  if (!std::isfinite(value)) {
    throw EvaluationError(p.name, constraint, p.dimension);
  }
  return value;
}

void require_dimension(const ProblemDef& p, std::span<const double> x) {
  if (x.size() != p.dimension) {
    throw std::invalid_argument("problem '" + p.name + "' expects " +
                                std::to_string(p.dimension) +
                                " coordinates, got " +
                                std::to_string(x.size()));
  }
}

}  // namespace

EvaluationError::EvaluationError(std::string problem,
                                 std::optional<std::size_t> constraint,
                                 std::size_t dimension)
    : std::runtime_error(describe(problem, constraint, dimension)),
      constraint_(constraint),
      dimension_(dimension) {}

void ProblemDef::validate() const {
  if (dimension == 0) throw std::invalid_argument("problem: dimension is 0");
  bounds.validate();
  if (bounds.dimension() != dimension) {
    throw std::invalid_argument("problem: bounds do not match dimension");
  }
  if (!objective) throw std::invalid_argument("problem: missing objective");
  for (const auto& g : inequalities) {
    if (!g) throw std::invalid_argument("problem: empty inequality");
  }
  for (const auto& h : equalities) {
    if (!h) throw std::invalid_argument("problem: empty equality");
  }
  if (!(eps_h >= 0.0) || !std::isfinite(eps_h)) {
    throw std::invalid_argument("problem: eps_h must be finite and >= 0");
  }
  if (!weights.empty()) {
    if (weights.size() != constraint_count()) {
      throw std::invalid_argument("problem: need one weight per constraint");
    }
    for (double r : weights) {
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("problem: weights must be positive");
      }
    }
  }
}

std::vector<double> violation_terms(const ProblemDef& problem,
                                    std::span<const double> x) {
  require_dimension(problem, x);
  std::vector<double> terms;
  terms.reserve(problem.constraint_count());
  std::size_t j = 0;
  for (const auto& g : problem.inequalities) {
    terms.push_back(std::max(0.0, checked(problem, j, g(x))));
    ++j;
  }
  for (const auto& h : problem.equalities) {
    const double value = checked(problem, j, h(x));
    terms.push_back(std::max(0.0, std::abs(value) - problem.eps_h));
    ++j;
  }
  return terms;
}

Goodness evaluate(const ProblemDef& problem, std::span<const double> x) {
  const auto terms = violation_terms(problem, x);
  Goodness out;
  out.f_obj = checked(problem, std::nullopt, problem.objective(x));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    out.f_con += problem.weight(j) * terms[j];
  }
  return out;
}

ProblemDef make_g3(std::size_t dimension) {
  ProblemDef p;
  p.name = "g3";
  p.dimension = dimension;
  p.bounds = {std::vector<double>(dimension, 0.0),
              std::vector<double>(dimension, 1.0)};
  const double scale =
      std::pow(static_cast<double>(dimension), 0.5 * static_cast<double>(dimension));
  p.objective = [scale](std::span<const double> x) {
    double prod = 1.0;
    for (double v : x) prod *= v;
    return -scale * prod;
  };
  p.equalities.push_back([](std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum - 1.0;
  });
  p.report_negated = true;
  return p;
}

ProblemDef make_g5() {
  ProblemDef p;
  p.name = "g5";
  p.dimension = 4;
  p.bounds = {{0.0, 0.0, -0.55, -0.55}, {1200.0, 1200.0, 0.55, 0.55}};
  p.objective = [](std::span<const double> x) {
    return 3.0 * x[0] + 0.000001 * x[0] * x[0] * x[0] + 2.0 * x[1] +
           (0.000002 / 3.0) * x[1] * x[1] * x[1];
  };
  // Stored as -(expr) <= 0 for the two "expr >= 0" constraints.
  p.inequalities.push_back(
      [](std::span<const double> x) { return -(x[3] - x[2] + 0.55); });
  p.inequalities.push_back(
      [](std::span<const double> x) { return -(x[2] - x[3] + 0.55); });
  p.equalities.push_back([](std::span<const double> x) {
    return 1000.0 * std::sin(-x[2] - 0.25) + 1000.0 * std::sin(-x[3] - 0.25) +
           894.8 - x[0];
  });
  p.equalities.push_back([](std::span<const double> x) {
    return 1000.0 * std::sin(x[2] - 0.25) +
           1000.0 * std::sin(x[2] - x[3] - 0.25) + 894.8 - x[1];
  });
  p.equalities.push_back([](std::span<const double> x) {
    return 1000.0 * std::sin(x[3] - 0.25) +
           1000.0 * std::sin(x[3] - x[2] - 0.25) + 1294.8;
  });
  return p;
}

ProblemDef make_g11() {
  ProblemDef p;
  p.name = "g11";
  p.dimension = 2;
  p.bounds = {{-1.0, -1.0}, {1.0, 1.0}};
  p.objective = [](std::span<const double> x) {
    return x[0] * x[0] + (x[1] - 1.0) * (x[1] - 1.0);
  };
  p.equalities.push_back(
      [](std::span<const double> x) { return x[1] - x[0] * x[0]; });
  return p;
}

ProblemDef make_g13() {
  ProblemDef p;
  p.name = "g13";
  p.dimension = 5;
  p.bounds = {{-2.3, -2.3, -3.2, -3.2, -3.2}, {2.3, 2.3, 3.2, 3.2, 3.2}};
  p.objective = [](std::span<const double> x) {
    return std::exp(x[0] * x[1] * x[2] * x[3] * x[4]);
  };
  p.equalities.push_back([](std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum - 10.0;
  });
  p.equalities.push_back(
      [](std::span<const double> x) { return x[1] * x[2] - 5.0 * x[3] * x[4]; });
  p.equalities.push_back([](std::span<const double> x) {
    return x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + 1.0;
  });
  return p;
}

std::vector<std::string> problem_names() { return {"g3", "g5", "g11", "g13"}; }

ProblemDef make_problem(std::string_view name) {
  const std::string key = lowercase(name);
  if (key == "g3") return make_g3();
  if (key == "g5") return make_g5();
  if (key == "g11") return make_g11();
  if (key == "g13") return make_g13();
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

const std::vector<ReferenceRecord>& reference_records() {
  static const std::vector<ReferenceRecord> records = {
      {"g3", 1.0005, 1.0, 1.9e-4, 0.9999, 7.5e-5},
      {"g5", 5126.497, 5128.881, 3.5, 5432.08, 3.9e3},
      {"g11", 0.7499, 0.75, 8.0e-5, 0.75, 0.0},
      {"g13", 0.053942, 0.067543, 3.1e-2, std::nullopt, std::nullopt},
  };
  return records;
}

const ReferenceRecord& reference_record(std::string_view name) {
  const std::string key = lowercase(name);
  for (const auto& r : reference_records()) {
    if (r.name == key) return r;
  }
  throw std::invalid_argument("no reference record for '" + std::string(name) +
                              "'");
}

}  // namespace acr
