// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any fails.
//
//   A1  verdict, conflict count n(n-1)/2 - 3, and learned sequence equal to
//       the prediction for every n in 6..30, exact equality
//   A2  n=6 and n=7 learned clauses equal the published listings
//   A3  the terminal conflict happens at level 0 with zero decisions
//   A4  no focus-lemma or equal-score violations in exact mode and in float
//       mode at decay 0.5 and 0.25
//   A5  every learned clause is RUP; DRAT has exactly n(n-1)/2 - 3
//       additions plus the empty clause
//   A6  500 seeded random CNFs: verdicts match brute force, unsat runs all
//       RUP-checked
//   A7  dpll_nodes / cdcl_conflicts strictly increasing over n = 6..10
//   A8  two n=12 runs emit byte-identical JSON traces
//   A9  float (decay 0.25) and exact runs decide identically for n in 6..15

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "opsat/dimacs.hpp"
#include "opsat/dpll.hpp"
#include "opsat/opgen.hpp"
#include "opsat/oracle.hpp"
#include "opsat/proofs.hpp"
#include "opsat/solver.hpp"
#include "testutil.hpp"

using namespace opsat;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << name << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<Lit> decisions_of(const Result& r) {
  std::vector<Lit> out;
  for (const TraceEvent& e : r.events)
    if (e.kind == TraceEvent::Kind::kDecision) out.push_back(e.lit);
  return out;
}

}  // namespace

int main() {
  constexpr int kMaxN = 30;

  // One verified exact-mode run per n, shared by A1/A2/A3/A5.
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Result> runs;  // index n - 6
  for (int n = 6; n <= kMaxN; ++n) {
    SolverConfig config;
    config.verify_invariants = true;
    runs.push_back(solve(generate_op(n), config));
  }
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

  // A1: verdict, count, and clause-for-clause trace equality, zero tolerance.
  {
    bool ok = true;
    std::string detail;
    for (int n = 6; n <= kMaxN && ok; ++n) {
      const Result& r = runs[static_cast<std::size_t>(n - 6)];
      int expected = predicted_conflict_count(n);
      auto divergence = compare_trace(predicted_trace(n), r.learned);
      if (r.verdict != Verdict::kUnsat || r.stats.conflicts != expected ||
          divergence.has_value()) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << "n=6..30, " << elapsed << "s";
    report("A1 theorem trace", ok, ok ? timing.str() : detail);
  }

  // A2: the published n=6 and n=7 listings, as variable sets in order.
  {
    OpCodec c6(6), c7(7);
    using testutil::p_clause;
    std::vector<Clause> op6 = {
        p_clause(c6, {{2, 1}, {3, 1}, {4, 1}, {5, 1}}),
        p_clause(c6, {{2, 1}, {3, 1}, {4, 1}}),
        p_clause(c6, {{1, 4}, {2, 4}, {3, 4}, {5, 4}}),
        p_clause(c6, {{1, 4}, {2, 4}, {3, 4}}),
        p_clause(c6, {{1, 3}, {2, 3}, {4, 3}, {5, 3}}),
        p_clause(c6, {{1, 3}, {2, 3}, {4, 3}}),
        p_clause(c6, {{1, 3}, {2, 3}}),
        p_clause(c6, {{1, 2}, {3, 2}, {4, 2}, {5, 2}}),
        p_clause(c6, {{1, 2}, {3, 2}, {4, 2}}),
        p_clause(c6, {{1, 2}, {3, 2}}),
        p_clause(c6, {{1, 2}}),
        p_clause(c6, {{2, 1}, {3, 1}}),
    };
    std::vector<Clause> op7 = {
        p_clause(c7, {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}}),
        p_clause(c7, {{2, 1}, {3, 1}, {4, 1}, {5, 1}}),
        p_clause(c7, {{1, 5}, {2, 5}, {3, 5}, {4, 5}, {6, 5}}),
        p_clause(c7, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}),
        p_clause(c7, {{1, 4}, {2, 4}, {3, 4}, {5, 4}, {6, 4}}),
        p_clause(c7, {{1, 4}, {2, 4}, {3, 4}, {5, 4}}),
        p_clause(c7, {{1, 4}, {2, 4}, {3, 4}}),
        p_clause(c7, {{1, 3}, {2, 3}, {4, 3}, {5, 3}, {6, 3}}),
        p_clause(c7, {{1, 3}, {2, 3}, {4, 3}, {5, 3}}),
        p_clause(c7, {{1, 3}, {2, 3}, {4, 3}}),
        p_clause(c7, {{1, 3}, {2, 3}}),
        p_clause(c7, {{1, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}}),
        p_clause(c7, {{1, 2}, {3, 2}, {4, 2}, {5, 2}}),
        p_clause(c7, {{1, 2}, {3, 2}, {4, 2}}),
        p_clause(c7, {{1, 2}, {3, 2}}),
        p_clause(c7, {{1, 2}}),
        p_clause(c7, {{2, 1}, {3, 1}, {4, 1}}),
        p_clause(c7, {{2, 1}, {3, 1}}),
    };
    auto matches = [](const Result& r, const std::vector<Clause>& expected) {
      if (r.learned.size() != expected.size()) return false;
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (!testutil::same_literal_set(r.learned[i], expected[i]))
          return false;
      return true;
    };
    report("A2 published listings",
           matches(runs[0], op6) && matches(runs[1], op7), "n=6 and n=7");
  }

  // A3: the final conflict arrives by level-0 propagation alone.
  {
    bool ok = true;
    for (const Result& r : runs)
      ok = ok && r.final_conflict.has_value() && r.final_conflict->level == 0 &&
           r.final_conflict->decisions_on_trail == 0;
    report("A3 final derivation", ok, "terminal conflict at level 0");
  }

  // A4: invariant checks in exact mode and float mode, decay 0.5 and 0.25.
  {
    bool ok = true;
    for (const Result& r : runs)
      ok = ok && r.focus_violations.empty() && r.score_violations.empty();
    for (double decay : {0.5, 0.25}) {
      for (int n = 6; n <= kMaxN && ok; ++n) {
        SolverConfig config;
        config.score_mode = ScoreMode::kFloat;
        config.decay = decay;
        config.verify_invariants = true;
        Result r = solve(generate_op(n), config);
        ok = ok && r.focus_violations.empty() && r.score_violations.empty();
      }
    }
    report("A4 focus lemma / equal scores", ok,
           "exact and float decay 0.5, 0.25");
  }

  // A5: independent RUP check of every learned clause; DRAT shape.
  {
    bool ok = true;
    for (int n = 6; n <= kMaxN && ok; ++n) {
      const Result& r = runs[static_cast<std::size_t>(n - 6)];
      RupChecker checker(generate_op(n));
      for (const Clause& learned : r.learned) {
        if (!checker.check(learned)) {
          ok = false;
          break;
        }
        checker.add_clause(learned);
      }
      std::string drat = export_drat(r);
      int lines = 0;
      for (char ch : drat)
        if (ch == '\n') ++lines;
      ok = ok && lines == predicted_conflict_count(n) + 1 &&
           drat.size() >= 2 && drat.substr(drat.size() - 2) == "0\n";
    }
    report("A5 proof soundness", ok, "all learned clauses RUP, DRAT shape");
  }

  // A6: 500 seeded random CNFs against the brute-force oracle.
  {
    bool ok = true;
    int sat = 0, unsat = 0;
    testutil::Rng rng(0xC0FFEE);
    for (int i = 0; i < 500 && ok; ++i) {
      Formula f = testutil::random_formula(rng, 20, 90);
      Result r = solve(f);
      BruteForceResult expected = brute_force_sat(f);
      if (r.verdict != expected.verdict) ok = false;
      if (r.verdict == Verdict::kSat) {
        ++sat;
        ok = ok && evaluate(f, r.model) == Eval::kSatisfied;
      } else {
        ++unsat;
        RupChecker checker(f);
        for (const Clause& learned : r.learned) {
          ok = ok && checker.check(learned);
          checker.add_clause(learned);
        }
      }
    }
    report("A6 general correctness", ok,
           std::to_string(sat) + " sat / " + std::to_string(unsat) + " unsat");
  }

  // A7: the DPLL/CDCL node ratio grows strictly with n.
  {
    bool ok = true;
    double previous = 0.0;
    std::string detail;
    for (int n = 6; n <= 10; ++n) {
      Formula f = generate_op(n);
      DpllStats dpll = solve_dpll(f);
      int conflicts = predicted_conflict_count(n);
      double ratio = static_cast<double>(dpll.node_count) / conflicts;
      ok = ok && dpll.verdict == Verdict::kUnsat && ratio > previous;
      previous = ratio;
      detail += (n > 6 ? " " : "") + std::to_string(n) + ":" +
                std::to_string(dpll.node_count);
    }
    report("A7 separation measurement", ok, detail);
  }

  // A8: byte-identical JSON traces at n=12.
  {
    Formula f = generate_op(12);
    auto trace = [&] {
      std::ostringstream out;
      JsonTraceWriter writer(out);
      solve(f, {}, &writer);
      return out.str();
    };
    std::string first = trace();
    std::string second = trace();
    report("A8 determinism", !first.empty() && first == second,
           std::to_string(first.size()) + " bytes");
  }

  // A9: float mode at decay 0.25 decides exactly like exact mode.
  {
    bool ok = true;
    for (int n = 6; n <= 15 && ok; ++n) {
      Formula f = generate_op(n);
      SolverConfig exact;
      exact.verify_invariants = true;
      SolverConfig fl;
      fl.score_mode = ScoreMode::kFloat;
      fl.decay = 0.25;
      fl.verify_invariants = true;
      Result a = solve(f, exact);
      Result b = solve(f, fl);
      ok = ok && decisions_of(a) == decisions_of(b) && a.learned == b.learned;
    }
    report("A9 score-order equivalence", ok, "decay 0.25, n=6..15");
  }

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
