#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opsat/cnf.hpp"
#include "opsat/scores.hpp"

namespace opsat {

// One solver event, as recorded in verification mode. The stream is enough
// to replay the run's assignment history and learned-clause sequence.
struct TraceEvent {
  enum class Kind { kDecision, kPropagation, kConflict, kLearned, kRestart };

  Kind kind = Kind::kDecision;
  Lit lit{};               // decision / propagated literal
  int level = 0;
  int reason = -1;         // antecedent or conflict clause reference
  int conflict_index = 0;  // 1-based, conflict and learned events
  Clause clause;           // learned events
};

struct FocusViolation {
  std::int64_t event_index = 0;  // position in the replayed stream
  Lit decided{};                 // the offending decision
  Clause focus_clause;           // the learned clause that still had
                                 // unassigned variables
};

struct ScoreViolation {
  int conflict_index = 0;
  Var reference = 0;  // first variable of the learned clause
  Var offender = 0;   // variable whose score differs
};

// Checks that every decision picks a variable from the most recent learned
// clause whenever that clause still has an unassigned variable. Decisions
// made before anything was learned are unconstrained.
std::vector<FocusViolation> assert_focus_lemma(
    std::span<const TraceEvent> events, int var_count);

// Replays the bump/decay history implied by the learned-clause sequence and
// checks that, right after each bump, all variables of the just-learned
// clause compare equal under the given score order.
std::vector<ScoreViolation> assert_equal_scores(
    std::span<const Clause> learned, ScoreMode mode, double decay,
    int var_count);

}  // namespace opsat
