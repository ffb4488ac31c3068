// Command-line front end: generate ordering-principle instances, solve
// DIMACS files, verify the predicted learned-clause sequence, measure the
// DPLL/CDCL separation, and export implication graphs.
//
// Exit codes follow solver conventions: `solve` returns 10 for SAT and 20
// for UNSAT; `verify` returns 0 only if every check passes; usage and I/O
// errors return 1.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "opsat/dimacs.hpp"
#include "opsat/dpll.hpp"
#include "opsat/opgen.hpp"
#include "opsat/oracle.hpp"
#include "opsat/proofs.hpp"
#include "opsat/solver.hpp"

namespace {

using namespace opsat;

// Everything that determines one run; echoed into generated artifacts so a
// run can be reproduced from its outputs.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  std::string to_string() const {
    std::string out = "opsat " + command;
    for (const auto& [key, value] : fields) out += " " + key + "=" + value;
    return out;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Formula read_formula(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

SolverConfig config_from_flags(const std::string& score_mode, double decay,
                               bool verify_invariants) {
  SolverConfig config;
  config.score_mode =
      score_mode == "float" ? ScoreMode::kFloat : ScoreMode::kExact;
  config.decay = decay;
  config.verify_invariants = verify_invariants;
  return config;
}

int cmd_gen(int n, const std::string& out_path) {
  Formula f = generate_op(n);
  if (out_path == "-")
    std::cout << emit_dimacs(f);
  else
    write_file(out_path, emit_dimacs(f));
  return 0;
}

int cmd_solve(const std::string& cnf_path, const SolverConfig& config,
              const std::string& trace_out, const std::string& drat_out) {
  Formula f = read_formula(cnf_path);

  std::ofstream trace_stream;
  std::optional<JsonTraceWriter> tracer;
  if (!trace_out.empty()) {
    trace_stream.open(trace_out, std::ios::binary);
    if (!trace_stream)
      throw std::runtime_error("cannot open '" + trace_out + "' for writing");
    tracer.emplace(trace_stream);
  }

  Result result = solve(f, config, tracer ? &*tracer : nullptr);

  if (result.verdict == Verdict::kSat) {
    std::cout << "SAT conflicts=" << result.stats.conflicts
              << " decisions=" << result.stats.decisions
              << " propagations=" << result.stats.propagations << "\n";
    std::cout << "v ";
    for (Var v = 1; v <= result.model.var_count(); ++v)
      std::cout << (result.model.value(v) == Value::kTrue ? v : -v) << " ";
    std::cout << "0\n";
  } else {
    std::cout << "UNSAT conflicts=" << result.stats.conflicts
              << " decisions=" << result.stats.decisions
              << " propagations=" << result.stats.propagations << "\n";
  }
  if (config.verify_invariants) {
    std::cout << "focus_violations=" << result.focus_violations.size()
              << " score_violations=" << result.score_violations.size()
              << "\n";
  }
  if (!drat_out.empty()) {
    if (result.verdict != Verdict::kUnsat)
      throw std::runtime_error("--drat-out: run was satisfiable, no proof");
    write_file(drat_out, export_drat(result));
  }
  return result.verdict == Verdict::kSat ? 10 : 20;
}

int cmd_verify(int n, const SolverConfig& config,
               const std::string& report_out) {
  if (n < 6) {
    std::cerr << "verify: n must be at least 6; the predicted sequence has "
                 "no tail below that and is undefined\n";
    return 1;
  }
  TheoremReport report = verify_theorem(n, config);
  std::cout << report_text(report);
  if (!report_out.empty()) write_file(report_out, report_key_values(report));
  return report.pass() ? 0 : 1;
}

int cmd_separation(int n_min, int n_max, const std::string& csv_out) {
  if (n_min < 6 || n_max > 12 || n_min > n_max) {
    std::cerr << "separation: range must satisfy 6 <= n_min <= n_max <= 12 "
                 "(plain tree search is too slow beyond that)\n";
    return 1;
  }
  std::ostringstream csv;
  csv << "n,cdcl_conflicts,dpll_nodes,ratio\n";
  for (int n = n_min; n <= n_max; ++n) {
    Formula f = generate_op(n);
    Result cdcl = solve(f);
    DpllStats dpll = solve_dpll(f);
    double ratio = static_cast<double>(dpll.node_count) /
                   static_cast<double>(cdcl.stats.conflicts);
    char ratio_text[32];
    std::snprintf(ratio_text, sizeof ratio_text, "%.6f", ratio);
    csv << n << "," << cdcl.stats.conflicts << "," << dpll.node_count << ","
        << ratio_text << "\n";
  }
  if (csv_out == "-")
    std::cout << csv.str();
  else
    write_file(csv_out, csv.str());
  return 0;
}

int cmd_graph(const std::string& cnf_path, int conflict_index,
              const std::string& dot_out, const RunManifest& manifest) {
  Formula f = read_formula(cnf_path);
  Result result = solve(f);
  if (conflict_index < 1 ||
      conflict_index > static_cast<int>(result.records.size())) {
    std::cerr << "graph: conflict index " << conflict_index
              << " out of range; run has " << result.records.size()
              << " conflicts\n";
    return 1;
  }
  const ConflictRecord& record =
      result.records[static_cast<std::size_t>(conflict_index - 1)];

  DotOptions options;
  if (auto n = detect_op_instance(f)) options.codec = OpCodec(*n);
  options.learned = result.learned;
  options.original_count = static_cast<int>(f.clauses.size());

  std::string dot = "// " + manifest.to_string() + "\n";
  dot += export_dot(record.graph, options);
  if (dot_out == "-")
    std::cout << dot;
  else
    write_file(dot_out, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic CDCL solver with an ordering-principle trace "
               "oracle"};
  app.require_subcommand(1);

  int n = 0, n_min = 6, n_max = 10, conflict_index = 1;
  std::string path, out_path, score_mode = "exact", trace_out, drat_out,
                    report_out;
  double decay = 0.5;
  bool verify_invariants = false;

  auto add_config_flags = [&](CLI::App* cmd) {
    cmd->add_option("--score-mode", score_mode,
                    "Branching score semantics: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--decay", decay, "Decay factor for float mode")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate an ordering-principle "
                                            "instance as DIMACS");
  gen->add_option("n", n, "Number of ordered elements (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000));
  gen->add_option("out", out_path, "Output path, or - for stdout")->required();

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS file");
  solve_cmd->add_option("cnf", path, "Input DIMACS file")->required();
  add_config_flags(solve_cmd);
  solve_cmd->add_option("--trace-out", trace_out,
                        "Write a JSON-lines event trace");
  solve_cmd->add_option("--drat-out", drat_out, "Write a DRAT proof");
  solve_cmd->add_flag("--verify-invariants", verify_invariants,
                      "Run the focus / equal-score checks on the trace");

  CLI::App* verify = app.add_subcommand(
      "verify", "Check the predicted learned-clause sequence for one n");
  verify->add_option("n", n, "Number of ordered elements (>= 6)")->required();
  add_config_flags(verify);
  verify->add_option("--report-out", report_out,
                     "Write the report as key=value lines");

  CLI::App* separation = app.add_subcommand(
      "separation", "Compare DPLL node counts against CDCL conflicts");
  separation->add_option("n_min", n_min, "Smallest n")->required();
  separation->add_option("n_max", n_max, "Largest n (<= 12)")->required();
  separation->add_option("out", out_path, "CSV output path, or - for stdout")
      ->required();

  CLI::App* graph = app.add_subcommand(
      "graph", "Export one conflict's implication graph as DOT");
  graph->add_option("cnf", path, "Input DIMACS file")->required();
  graph->add_option("conflict_index", conflict_index,
                    "1-based conflict number")
      ->required();
  graph->add_option("out", out_path, "DOT output path, or - for stdout")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(n, out_path);
    if (solve_cmd->parsed())
      return cmd_solve(path,
                       config_from_flags(score_mode, decay, verify_invariants),
                       trace_out, drat_out);
    if (verify->parsed())
      return cmd_verify(n, config_from_flags(score_mode, decay, true),
                        report_out);
    if (separation->parsed())
      return cmd_separation(n_min, n_max, out_path);
    if (graph->parsed()) {
      RunManifest manifest;
      manifest.command = "graph";
      manifest.add("cnf", path);
      manifest.add("conflict_index", std::to_string(conflict_index));
      return cmd_graph(path, conflict_index, out_path, manifest);
    }
  } catch (const std::exception& e) {
    std::cerr << "opsat: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
