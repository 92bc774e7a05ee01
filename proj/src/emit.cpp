#include "acr/harness.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

namespace acr {

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string number(const std::optional<double>& v) {
  return v ? number(*v) : "NA";
}

void emit_csv(const ExperimentResult& r, std::ostream& out) {
  const auto& c = r.config;
  out << "problem,algorithm,handler,runs,mean,std,failed,evals,seed\n";
  out << c.problem << ',' << to_string(c.algorithm) << ','
      << to_string(c.handler) << ',' << c.runs << ',' << number(r.mean) << ','
      << number(r.stddev) << ',' << r.failed << ',' << r.evaluations_per_run
      << ',' << c.seed << '\n';
}

void emit_json(const ExperimentResult& r, std::ostream& out) {
  out << nlohmann::json(r).dump(2) << '\n';
}

void emit_text(const ExperimentResult& r, std::ostream& out, bool compare) {
  const auto& c = r.config;
  constexpr int kLabel = 12;
  auto line = [&](std::string_view label, const std::string& value) {
    out << std::left << std::setw(kLabel) << label << value << '\n';
  };
  line("problem", c.problem);
  line("algorithm", std::string(to_string(c.algorithm)));
  line("handler", std::string(to_string(c.handler)));
  line("N x T", std::to_string(c.swarm_size) + " x " +
                    std::to_string(c.resolved_cycles()));
  line("evals/run", std::to_string(r.evaluations_per_run));
  line("runs", std::to_string(c.runs));
  line("seed", std::to_string(c.seed));
  if (r.solved) line("solved", std::to_string(*r.solved));

  if (!compare) {
    line("mean", number(r.mean));
    line("std", number(r.stddev));
    line("failed", std::to_string(r.failed));
    return;
  }

  std::optional<ReferenceRow> ref;
  for (const auto& row : reference_table()) {
    if (row.problem == c.problem) ref = row;
  }
  const auto paper = published_swarm_result(c.problem, c.algorithm, c.handler);
  const bool deps_acr2 =
      c.algorithm == Algorithm::deps && c.handler == HandlerMode::acr2;

  constexpr int kCol = 16;
  auto cell = [&](const std::string& s) { out << std::left << std::setw(kCol) << s; };
  out << '\n';
  out << std::left << std::setw(kLabel) << "";
  for (const char* h : {"this", "F*", "ES", "GA", "paper"}) cell(h);
  out << '\n';

  out << std::left << std::setw(kLabel) << "mean";
  cell(number(r.mean));
  cell(ref ? number(ref->f_star) : "-");
  cell(ref ? number(ref->es_mean) : "-");
  cell(ref && ref->ga_mean ? number(*ref->ga_mean) : "-");
  cell(paper ? number(paper->mean) : "-");
  out << '\n';

  out << std::left << std::setw(kLabel) << "std";
  cell(number(r.stddev));
  cell("-");
  cell(ref ? number(ref->es_std) : "-");
  cell(ref && ref->ga_std ? number(*ref->ga_std) : "-");
  cell(ref && deps_acr2 ? number(ref->deps_acr2_std) : "-");
  out << '\n';

  out << std::left << std::setw(kLabel) << "failed";
  cell(std::to_string(r.failed) + "/" + std::to_string(c.runs));
  cell("-");
  cell("-");
  cell("-");
  cell(paper ? std::to_string(paper->failed) + "/100" : "-");
  out << '\n';
}

}  // namespace

void emit(const ExperimentResult& result, OutputFormat format,
          std::ostream& out, bool compare) {
  switch (format) {
    case OutputFormat::csv: emit_csv(result, out); break;
    case OutputFormat::json: emit_json(result, out); break;
    case OutputFormat::text: emit_text(result, out, compare); break;
  }
  if (!out) throw std::ios_base::failure("failed to write result");
}

void emit_reference(std::ostream& out) {
  constexpr int kW = 14;
  const auto names = problem_names();
  auto header = [&](std::string_view title) {
    out << title << '\n' << std::left << std::setw(kW) << "";
    for (const auto& n : names) out << std::setw(kW) << n;
    out << '\n';
  };

  const auto rows = reference_table();
  header("Existing results (mean best)");
  auto row = [&](std::string_view label, auto get) {
    out << std::left << std::setw(kW) << label;
    for (const auto& r : rows) out << std::setw(kW) << get(r);
    out << '\n';
  };
  row("F*", [](const ReferenceRow& r) { return number(r.f_star); });
  row("ES", [](const ReferenceRow& r) { return number(r.es_mean); });
  row("GA", [](const ReferenceRow& r) { return r.ga_mean ? number(*r.ga_mean) : "-"; });

  for (HandlerMode h : {HandlerMode::bch, HandlerMode::acr1, HandlerMode::acr2}) {
    out << '\n';
    header("Swarm results, " + std::string(to_string(h)) + " (failed runs in parentheses)");
    for (Algorithm a : {Algorithm::de, Algorithm::ps, Algorithm::deps}) {
      out << std::left << std::setw(kW) << to_string(a);
      for (const auto& n : names) {
        const auto p = published_swarm_result(n, a, h);
        std::string s = number(p->mean);
        if (p->failed > 0) s += "(" + std::to_string(p->failed) + ")";
        out << std::setw(kW) << s;
      }
      out << '\n';
    }
  }

  out << '\n';
  header("Standard deviation");
  row("ES", [](const ReferenceRow& r) { return number(r.es_std); });
  row("GA", [](const ReferenceRow& r) { return r.ga_std ? number(*r.ga_std) : "-"; });
  row("DEPS acr2", [](const ReferenceRow& r) { return number(r.deps_acr2_std); });
  if (!out) throw std::ios_base::failure("failed to write reference table");
}

void to_json(nlohmann::json& j, const ExperimentConfig& c) {
  j = nlohmann::json{
      {"problem", c.problem},
      {"algorithm", to_string(c.algorithm)},
      {"handler", to_string(c.handler)},
      {"n", c.swarm_size},
      {"t", c.resolved_cycles()},
      {"runs", c.runs},
      {"seed", c.seed},
      {"eps_h", c.eps_h ? nlohmann::json(*c.eps_h) : nlohmann::json(nullptr)},
      {"eps_o", c.eps_o ? nlohmann::json(*c.eps_o) : nlohmann::json(nullptr)},
      {"w", c.inertia},
      {"c1", c.c1},
      {"c2", c.c2},
      {"cr", c.crossover},
      {"sf", c.scale},
      {"nv", c.diff_vectors},
      {"r_l", c.acr.r_l},
      {"r_u", c.acr.r_u},
      {"beta_l", c.acr.beta_l},
      {"beta_u", c.acr.beta_u},
      {"beta_f", c.acr.beta_f},
      {"t_th", c.acr.t_th ? nlohmann::json(*c.acr.t_th) : nlohmann::json(nullptr)},
  };
}

void from_json(const nlohmann::json& j, ExperimentConfig& c) {
  auto opt = [&](const char* key) -> std::optional<double> {
    const auto& v = j.at(key);
    return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
  };
  c.problem = j.at("problem").get<std::string>();
  c.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
  c.handler = parse_handler(j.at("handler").get<std::string>());
  c.swarm_size = j.at("n").get<std::size_t>();
  c.cycles = j.at("t").get<std::int64_t>();
  c.runs = j.at("runs").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.eps_h = opt("eps_h");
  c.eps_o = opt("eps_o");
  c.inertia = j.at("w").get<double>();
  c.c1 = j.at("c1").get<double>();
  c.c2 = j.at("c2").get<double>();
  c.crossover = j.at("cr").get<double>();
  c.scale = j.at("sf").get<double>();
  c.diff_vectors = j.at("nv").get<std::size_t>();
  c.acr.r_l = j.at("r_l").get<double>();
  c.acr.r_u = j.at("r_u").get<double>();
  c.acr.beta_l = j.at("beta_l").get<double>();
  c.acr.beta_u = j.at("beta_u").get<double>();
  c.acr.beta_f = j.at("beta_f").get<double>();
  c.acr.t_th = opt("t_th");
}

void to_json(nlohmann::json& j, const RunRecord& r) {
  j = nlohmann::json{{"run", r.run},
                     {"seed", r.seed},
                     {"objective", r.objective},
                     {"f_con", r.f_con},
                     {"feasible", r.feasible},
                     {"final_eps_r", r.final_eps_r},
                     {"evaluations", r.evaluations}};
}

void from_json(const nlohmann::json& j, RunRecord& r) {
  r.run = j.at("run").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.objective = j.at("objective").get<double>();
  r.f_con = j.at("f_con").get<double>();
  r.feasible = j.at("feasible").get<bool>();
  r.final_eps_r = j.at("final_eps_r").get<double>();
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const ExperimentResult& r) {
  auto opt = [](const auto& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  j = nlohmann::json{{"config", r.config},
                     {"mean", opt(r.mean)},
                     {"std", opt(r.stddev)},
                     {"failed", r.failed},
                     {"solved", opt(r.solved)},
                     {"evals", r.evaluations_per_run},
                     {"records", r.records}};
}

void from_json(const nlohmann::json& j, ExperimentResult& r) {
  r.config = j.at("config").get<ExperimentConfig>();
  r.mean = j.at("mean").is_null() ? std::nullopt
                                  : std::optional<double>(j.at("mean").get<double>());
  r.stddev = j.at("std").is_null() ? std::nullopt
                                   : std::optional<double>(j.at("std").get<double>());
  r.failed = j.at("failed").get<int>();
  r.solved = j.at("solved").is_null() ? std::nullopt
                                      : std::optional<int>(j.at("solved").get<int>());
  r.evaluations_per_run = j.at("evals").get<std::uint64_t>();
  r.records = j.at("records").get<std::vector<RunRecord>>();
}

}  // namespace acr
