#include "acr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <thread>

namespace acr {

namespace {

std::string normalize_key(std::string_view key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    out.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(
                                       static_cast<unsigned char>(c))));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value '" + std::string(text) + "' for '" +
                      std::string(key) + "'");
  }
  return value;
}

// Integers may be written in scientific form ("2E3") as in the literature.
std::int64_t parse_count(std::string_view key, std::string_view text) {
  const double value = parse_number<double>(key, text);
  if (!std::isfinite(value) || value != std::floor(value) || value < 0.0 ||
      value > 9.0e15) {
    throw ConfigError("'" + std::string(key) + "' needs a non-negative integer");
  }
  return static_cast<std::int64_t>(value);
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string v = normalize_key(trim(text));
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for '" +
                    std::string(key) + "'");
}

template <typename Fn>
auto as_config_error(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::text: return "text";
  }
  return "?";
}

OutputFormat parse_format(std::string_view text) {
  const std::string key = normalize_key(text);
  if (key == "csv") return OutputFormat::csv;
  if (key == "json") return OutputFormat::json;
  if (key == "text" || key == "table") return OutputFormat::text;
  throw ConfigError("unknown format '" + std::string(text) + "'");
}

std::int64_t default_cycles(std::string_view problem, HandlerMode handler) {
  if (handler == HandlerMode::bch) return 5000;
  return normalize_key(problem) == "g3" ? 5000 : 2000;
}

std::int64_t ExperimentConfig::resolved_cycles() const {
  return cycles ? *cycles : default_cycles(problem, handler);
}

SwarmConfig ExperimentConfig::swarm_config() const {
  SwarmConfig s;
  s.algorithm = algorithm;
  s.swarm_size = swarm_size;
  s.cycles = resolved_cycles();
  s.inertia = inertia;
  s.c1 = c1;
  s.c2 = c2;
  s.crossover = crossover;
  s.scale = scale;
  s.diff_vectors = diff_vectors;
  return s;
}

void ExperimentConfig::validate() const {
  as_config_error([&] {
    make_problem(problem);
    swarm_config().validate();
    acr.validate();
    return 0;
  });
  if (runs < 1) throw ConfigError("runs must be >= 1");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  if (eps_h && !(*eps_h >= 0.0 && std::isfinite(*eps_h))) {
    throw ConfigError("eps-h must be finite and >= 0");
  }
  if (eps_o && !(*eps_o >= 0.0)) throw ConfigError("eps-o must be >= 0");
}

void apply_config_entry(ExperimentConfig& cfg, std::string_view raw_key,
                        std::string_view raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string_view value = trim(raw_value);

  if (key == "problem") {
    cfg.problem = normalize_key(value);
  } else if (key == "algo" || key == "algorithm") {
    cfg.algorithm = as_config_error([&] { return parse_algorithm(value); });
  } else if (key == "handler") {
    cfg.handler = as_config_error([&] { return parse_handler(value); });
  } else if (key == "n") {
    cfg.swarm_size = static_cast<std::size_t>(parse_count(key, value));
  } else if (key == "t") {
    cfg.cycles = parse_count(key, value);
  } else if (key == "runs") {
    cfg.runs = static_cast<int>(parse_count(key, value));
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "eps-h") {
    cfg.eps_h = parse_number<double>(key, value);
  } else if (key == "eps-o") {
    cfg.eps_o = parse_number<double>(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "compare") {
    cfg.compare = parse_bool(key, value);
  } else if (key == "jobs") {
    cfg.jobs = static_cast<unsigned>(parse_count(key, value));
  } else if (key == "w") {
    cfg.inertia = parse_number<double>(key, value);
  } else if (key == "c1") {
    cfg.c1 = parse_number<double>(key, value);
  } else if (key == "c2") {
    cfg.c2 = parse_number<double>(key, value);
  } else if (key == "cr") {
    cfg.crossover = parse_number<double>(key, value);
  } else if (key == "sf") {
    cfg.scale = parse_number<double>(key, value);
  } else if (key == "nv") {
    cfg.diff_vectors = static_cast<std::size_t>(parse_count(key, value));
  } else if (key == "r-l") {
    cfg.acr.r_l = parse_number<double>(key, value);
  } else if (key == "r-u") {
    cfg.acr.r_u = parse_number<double>(key, value);
  } else if (key == "beta-l") {
    cfg.acr.beta_l = parse_number<double>(key, value);
  } else if (key == "beta-u") {
    cfg.acr.beta_u = parse_number<double>(key, value);
  } else if (key == "beta-f") {
    cfg.acr.beta_f = parse_number<double>(key, value);
  } else if (key == "t-th") {
    cfg.acr.t_th = parse_number<double>(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(raw_key) + "'");
  }
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#' || text.front() == ';') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    }
    const std::string key = normalize_key(trim(text.substr(0, eq)));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    }
    entries[key] = std::string(trim(text.substr(eq + 1)));
  }
  return entries;
}

ExperimentResult aggregate(const ExperimentConfig& cfg,
                           std::vector<RunRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) { return a.run < b.run; });

  ExperimentResult result;
  result.config = cfg;
  result.config.cycles = cfg.resolved_cycles();
  const auto n = static_cast<std::uint64_t>(cfg.swarm_size);
  result.evaluations_per_run =
      n * static_cast<std::uint64_t>(cfg.resolved_cycles()) + n;

  std::vector<double> successes;
  for (const auto& r : records) {
    if (r.feasible) {
      successes.push_back(r.objective);
    } else {
      ++result.failed;
    }
  }
  if (!successes.empty()) {
    double sum = 0.0;
    for (double v : successes) sum += v;
    const double mean = sum / static_cast<double>(successes.size());
    result.mean = mean;
    if (successes.size() >= 2) {
      double ss = 0.0;
      for (double v : successes) ss += (v - mean) * (v - mean);
      result.stddev = std::sqrt(ss / static_cast<double>(successes.size() - 1));
    }
  }

  if (cfg.eps_o) {
    const ProblemDef problem = make_problem(cfg.problem);
    const double f_star = reference_record(cfg.problem).f_star;
    int solved = 0;
    for (const auto& r : records) {
      const double gap =
          problem.report_negated ? f_star - r.objective : r.objective - f_star;
      if (r.feasible && gap <= *cfg.eps_o) ++solved;
    }
    result.solved = solved;
  }

  result.records = std::move(records);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ProblemDef problem = make_problem(cfg.problem);
  if (cfg.eps_h) problem.eps_h = *cfg.eps_h;
  const SwarmConfig swarm = cfg.swarm_config();

  std::vector<RunRecord> records(static_cast<std::size_t>(cfg.runs));
  auto execute = [&](int i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    const RunResult r = run(problem, swarm, cfg.handler, cfg.acr, seed);
    auto& rec = records[static_cast<std::size_t>(i)];
    rec.run = i;
    rec.seed = seed;
    rec.objective = r.reported_objective;
    rec.f_con = r.goodness.f_con;
    rec.feasible = r.feasible;
    rec.final_eps_r = r.final_eps_r;
    rec.evaluations = r.evaluations;
  };

  const unsigned workers =
      std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.runs));
  if (workers <= 1) {
    for (int i = 0; i < cfg.runs; ++i) execute(i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (int i = next++; i < cfg.runs; i = next++) {
            try {
              execute(i);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return aggregate(cfg, std::move(records));
}

}  // namespace acr
