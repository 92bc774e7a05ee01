#pragma once

#include "acr/handling.hpp"
#include "acr/swarm.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace acr {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { csv, json, text };

std::string_view to_string(OutputFormat format);
OutputFormat parse_format(std::string_view text);

struct ExperimentConfig {
  std::string problem = "g5";
  Algorithm algorithm = Algorithm::deps;
  HandlerMode handler = HandlerMode::acr2;
  std::size_t swarm_size = 70;
  /// Unset: the per-(problem, handler) budget from default_cycles().
  std::optional<std::int64_t> cycles;
  int runs = 100;
  std::uint64_t seed = 42;
  /// Unset: the problem's own eps_h (1E-4 for the benchmarks).
  std::optional<double> eps_h;
  /// Success threshold on F(x) - F*; enables the "solved" count.
  std::optional<double> eps_o;

  double inertia = 0.4;
  double c1 = 2.0;
  double c2 = 2.0;
  double crossover = 0.9;
  double scale = 0.5;
  std::size_t diff_vectors = 2;
  AcrParams acr;

  OutputFormat format = OutputFormat::csv;
  bool compare = false;
  /// Worker threads; runs are independent and results are ordered by index.
  unsigned jobs = 1;

  std::int64_t resolved_cycles() const;
  SwarmConfig swarm_config() const;
  void validate() const;
};

/// T = 5000 for bch everywhere and for g3 under acr; T = 2000 otherwise.
std::int64_t default_cycles(std::string_view problem, HandlerMode handler);

/// Sets one field from its key=value form. Keys match the CLI long option
/// names ("problem", "algo", "eps-h", ...); '_' and '-' are interchangeable.
/// Throws ConfigError on unknown keys or unparsable values.
void apply_config_entry(ExperimentConfig& cfg, std::string_view key,
                        std::string_view value);

/// Reads key=value lines; blank lines and lines starting with '#' or ';' are
/// skipped. Later duplicates override earlier ones.
std::map<std::string, std::string> parse_key_values(std::istream& in);

struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  /// Final objective in reported sign convention.
  double objective = 0.0;
  double f_con = 0.0;
  bool feasible = false;
  double final_eps_r = 0.0;
  std::uint64_t evaluations = 0;

  bool operator==(const RunRecord&) const = default;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunRecord> records;
  /// Mean of the objective over feasible runs; unset if none succeeded.
  std::optional<double> mean;
  /// Sample standard deviation over feasible runs; unset below two.
  std::optional<double> stddev;
  int failed = 0;
  /// Feasible runs within eps_o of F*; only set when eps_o is configured.
  std::optional<int> solved;
  std::uint64_t evaluations_per_run = 0;
};

/// Executes cfg.runs runs with seeds seed + run_index and aggregates them.
/// Throws ConfigError for an invalid configuration.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Aggregate statistics of already computed records.
ExperimentResult aggregate(const ExperimentConfig& cfg,
                           std::vector<RunRecord> records);

struct PublishedCell {
  double mean;
  /// Runs (of 100) that never became feasible; 0 when none were reported.
  int failed = 0;
};

/// One column of the literature comparison for a benchmark.
struct ReferenceRow {
  std::string problem;
  double f_star;
  double es_mean;
  double es_std;
  std::optional<double> ga_mean;
  std::optional<double> ga_std;
  double deps_acr2_mean;
  double deps_acr2_std;
};

std::vector<ReferenceRow> reference_table();

/// Published 100-run mean of a swarm algorithm under a handler, if any.
std::optional<PublishedCell> published_swarm_result(std::string_view problem,
                                                    Algorithm algorithm,
                                                    HandlerMode handler);

/// Writes the result in the requested format. CSV columns:
/// problem,algorithm,handler,runs,mean,std,failed,evals,seed.
void emit(const ExperimentResult& result, OutputFormat format, std::ostream& out,
          bool compare = false);

/// Writes the literature constants as a text table.
void emit_reference(std::ostream& out);

void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);
void to_json(nlohmann::json& j, const RunRecord& record);
void from_json(const nlohmann::json& j, RunRecord& record);
void to_json(nlohmann::json& j, const ExperimentResult& result);
void from_json(const nlohmann::json& j, ExperimentResult& result);

}  // namespace acr
