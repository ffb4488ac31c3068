#include "opsat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace opsat {

namespace {

void require_n(int n) {
  if (n < 6)
    throw std::invalid_argument(
        "predicted trace is defined for n >= 6 only (the tail of the "
        "sequence is empty below that)");
}

Clause sorted(const Clause& c) {
  Clause out = c;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PredictedTrace predicted_trace(int n) {
  require_n(n);
  OpCodec codec(n);
  PredictedTrace trace;
  trace.n = n;

  trace.refs.push_back({1, n - 2});
  trace.refs.push_back({1, n - 3});
  for (int j = n - 2; j >= 2; --j)
    for (int k = n - 2; k >= j - 1; --k) trace.refs.push_back({j, k});
  for (int k = n - 4; k >= 2; --k) trace.refs.push_back({1, k});

  trace.clauses.reserve(trace.refs.size());
  for (const PrefixRef& ref : trace.refs)
    trace.clauses.push_back(prefix_clause(codec, ref.column, ref.length));
  return trace;
}

int predicted_conflict_count(int n) {
  require_n(n);
  return n * (n - 1) / 2 - 3;
}

std::optional<TraceDivergence> compare_trace(
    const PredictedTrace& predicted, std::span<const Clause> recorded) {
  std::size_t common = std::min(predicted.clauses.size(), recorded.size());
  for (std::size_t i = 0; i < common; ++i)
    if (sorted(predicted.clauses[i]) != sorted(recorded[i]))
      return TraceDivergence{static_cast<int>(i), predicted.clauses[i],
                             recorded[i]};
  if (predicted.clauses.size() != recorded.size()) {
    TraceDivergence d;
    d.index = static_cast<int>(common);
    if (common < predicted.clauses.size()) d.expected = predicted.clauses[common];
    if (common < recorded.size()) d.actual = recorded[common];
    return d;
  }
  return std::nullopt;
}

TheoremReport verify_theorem(int n, SolverConfig config) {
  require_n(n);
  config.verify_invariants = true;

  Result result = solve(generate_op(n), config);
  PredictedTrace predicted = predicted_trace(n);

  TheoremReport report;
  report.n = n;
  report.score_mode = config.score_mode;
  report.decay = config.decay;
  report.verdict = result.verdict;
  report.conflicts = result.stats.conflicts;
  report.expected_conflicts = predicted_conflict_count(n);
  report.divergence = compare_trace(predicted, result.learned);
  report.trace_match = !report.divergence.has_value();
  report.focus_ok = result.focus_violations.empty();
  report.equal_scores_ok = result.score_violations.empty();
  return report;
}

std::string report_text(const TheoremReport& report) {
  auto verdict = [](Verdict v) { return v == Verdict::kUnsat ? "UNSAT" : "SAT"; };
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  std::string mode = report.score_mode == ScoreMode::kExact
                         ? "exact"
                         : "float decay=" + std::to_string(report.decay);
  std::string out;
  out += "n=" + std::to_string(report.n) + " score=" + mode + "\n";
  out += "verdict: " + std::string(verdict(report.verdict)) + " (" +
         mark(report.verdict == Verdict::kUnsat) + ")\n";
  out += "conflicts: " + std::to_string(report.conflicts) + " expected " +
         std::to_string(report.expected_conflicts) + " (" +
         mark(report.conflicts == report.expected_conflicts) + ")\n";
  if (report.trace_match) {
    out += "learned clauses: " + std::to_string(report.expected_conflicts) +
           "/" + std::to_string(report.expected_conflicts) + " matched\n";
  } else {
    const TraceDivergence& d = *report.divergence;
    out += "learned clauses: diverged at index " + std::to_string(d.index) +
           ", expected " + to_string(d.expected) + ", got " +
           to_string(d.actual) + "\n";
  }
  out += "focus lemma: " + std::string(mark(report.focus_ok)) + "\n";
  out += "equal scores: " + std::string(mark(report.equal_scores_ok)) + "\n";
  out += report.pass() ? "PASS\n" : "FAIL\n";
  return out;
}

std::string report_key_values(const TheoremReport& report) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::string out;
  out += "n=" + std::to_string(report.n) + "\n";
  out += std::string("score_mode=") +
         (report.score_mode == ScoreMode::kExact ? "exact" : "float") + "\n";
  out += "decay=" + std::to_string(report.decay) + "\n";
  out += std::string("verdict=") +
         (report.verdict == Verdict::kUnsat ? "UNSAT" : "SAT") + "\n";
  out += "conflicts=" + std::to_string(report.conflicts) + "\n";
  out += "expected_conflicts=" + std::to_string(report.expected_conflicts) +
         "\n";
  out += std::string("trace_match=") + yn(report.trace_match) + "\n";
  if (report.divergence)
    out += "divergence_index=" + std::to_string(report.divergence->index) +
           "\n";
  out += std::string("focus_ok=") + yn(report.focus_ok) + "\n";
  out += std::string("equal_scores_ok=") + yn(report.equal_scores_ok) + "\n";
  out += std::string("pass=") + yn(report.pass()) + "\n";
  return out;
}

}  // namespace opsat
