// Command-line front end: run experiments, list benchmarks, print the
// literature reference tables.

#include "acr/harness.hpp"
#include "acr/problems.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <utility>
#include <string>

#include <CLI11.hpp>

namespace {

// Long option names that are handled here rather than by the experiment
// config.
constexpr const char* kOutKey = "out";
constexpr const char* kConfigKey = "config";

int run_command(CLI::App& cmd) {
  std::map<std::string, std::string> entries;
  if (auto* opt = cmd.get_option("--config"); opt->count() > 0) {
    const auto path = opt->as<std::string>();
    std::ifstream in(path);
    if (!in) throw acr::ConfigError("cannot read config file '" + path + "'");
    entries = acr::parse_key_values(in);
  }
  // Flags given on the command line win over the file.
  for (const CLI::Option* opt : cmd.get_options()) {
    if (opt->count() == 0) continue;
    const std::string key = opt->get_single_name();
    if (key == kConfigKey || key == "help") continue;
    entries[key] = opt->get_expected_max() == 0 ? "true" : opt->as<std::string>();
  }

  std::string out_path;
  if (auto it = entries.find(kOutKey); it != entries.end()) {
    out_path = it->second;
    entries.erase(it);
  }

  acr::ExperimentConfig cfg;
  for (const auto& [key, value] : entries) {
    acr::apply_config_entry(cfg, key, value);
  }

  const acr::ExperimentResult result = acr::run_experiment(cfg);
  if (out_path.empty()) {
    acr::emit(result, cfg.format, std::cout, cfg.compare);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + out_path + "'");
    acr::emit(result, cfg.format, out, cfg.compare);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swarm optimizers with adaptive constraint relaxation"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run repeated optimizations and report statistics");
  // Values stay strings and are parsed by the experiment config, so file
  // entries and flags share one parser.
  const std::pair<const char*, const char*> options[] = {
      {"--config", "key=value file mirroring these flags"},
      {"--problem", "Benchmark id: g3, g5, g11, g13"},
      {"--algo", "ps, de or deps"},
      {"--handler", "bch, acr1 or acr2"},
      {"--runs", "Independent runs (default 100)"},
      {"--seed", "Base seed; run i uses seed + i (default 42)"},
      {"--n", "Swarm size N (default 70)"},
      {"--t", "Learning cycles T (default per problem and handler)"},
      {"--eps-h", "Equality tolerance (default 1e-4)"},
      {"--eps-o", "Success threshold on F - F*"},
      {"--format", "csv, json or text (default csv)"},
      {"--out", "Output file (default stdout)"},
      {"--jobs", "Worker threads (default 1)"},
      {"--w", "Inertia weight (default 0.4)"},
      {"--c1", "Cognitive coefficient (default 2)"},
      {"--c2", "Social coefficient (default 2)"},
      {"--cr", "DE crossover factor (default 0.9)"},
      {"--sf", "DE scaling factor (default 0.5)"},
      {"--nv", "DE difference vectors (default 2)"},
      {"--r-l", "Lower ratio bound (default 0.25)"},
      {"--r-u", "Upper ratio bound (default 0.75)"},
      {"--beta-l", "Shrink factor (default 0.618)"},
      {"--beta-u", "Widen factor (default 1.382)"},
      {"--beta-f", "Forcing factor (default 0.618)"},
      {"--t-th", "Forcing start cycle (default T/2)"},
  };
  for (const auto& [name, help] : options) run->add_option(name, help);
  run->add_flag("--compare", "Add literature reference columns (text format)");

  auto* list = app.add_subcommand("list-problems", "List the registered benchmarks");
  auto* reference = app.add_subcommand("reference", "Print the literature reference tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(*run);
    if (list->parsed()) {
      std::cout.precision(10);
      for (const auto& name : acr::problem_names()) {
        const auto p = acr::make_problem(name);
        std::cout << name << "  D=" << p.dimension
                  << "  inequalities=" << p.inequalities.size()
                  << "  equalities=" << p.equalities.size()
                  << "  F*=" << acr::reference_record(name).f_star << '\n';
      }
      return 0;
    }
    if (reference->parsed()) {
      acr::emit_reference(std::cout);
      return 0;
    }
  } catch (const acr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
