#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opsat/cnf.hpp"
#include "opsat/opgen.hpp"
#include "opsat/solver.hpp"

namespace opsat {

// The learned-clause sequence the solver is predicted to produce on an
// ordering-principle instance, as prefix-clause coordinates and expanded
// clauses:
//
//   Head:     C(1, n-2), C(1, n-3)
//   Cascade:  for j = n-2 down to 2, the block C(j, n-2), ..., C(j, j-1)
//   Tail:     C(1, n-4), ..., C(1, 2)
//
// Total length n(n-1)/2 - 3. Defined for n >= 6 only; below that the tail
// is empty and the prediction does not apply.
struct PredictedTrace {
  int n = 0;
  std::vector<PrefixRef> refs;
  std::vector<Clause> clauses;
};

PredictedTrace predicted_trace(int n);    // throws for n < 6
int predicted_conflict_count(int n);      // n(n-1)/2 - 3, throws for n < 6

// First mismatch between prediction and a recorded run. `expected` or
// `actual` is empty when one sequence ran out before the other.
struct TraceDivergence {
  int index = 0;  // 0-based position of the first mismatch
  Clause expected;
  Clause actual;
};

// Clause-for-clause comparison, in order, as literal sets. Returns nullopt
// on a perfect match.
std::optional<TraceDivergence> compare_trace(const PredictedTrace& predicted,
                                             std::span<const Clause> recorded);

struct TheoremReport {
  int n = 0;
  ScoreMode score_mode = ScoreMode::kExact;
  double decay = 0.5;
  Verdict verdict = Verdict::kSat;
  std::int64_t conflicts = 0;
  int expected_conflicts = 0;
  bool trace_match = false;
  std::optional<TraceDivergence> divergence;
  bool focus_ok = false;
  bool equal_scores_ok = false;

  bool pass() const {
    return verdict == Verdict::kUnsat && conflicts == expected_conflicts &&
           trace_match && focus_ok && equal_scores_ok;
  }
};

// Runs the engine on the generated instance in verification mode and checks
// verdict, conflict count, learned sequence, and both runtime invariants.
TheoremReport verify_theorem(int n, SolverConfig config = {});

// Human-readable multi-line summary.
std::string report_text(const TheoremReport& report);
// Machine-readable key=value lines.
std::string report_key_values(const TheoremReport& report);

}  // namespace opsat
