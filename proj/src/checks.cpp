#include "opsat/checks.hpp"

#include <algorithm>

namespace opsat {

std::vector<FocusViolation> assert_focus_lemma(
    std::span<const TraceEvent> events, int var_count) {
  std::vector<FocusViolation> violations;
  std::vector<int> level(static_cast<std::size_t>(var_count) + 1, -1);
  Clause focus;  // most recent learned clause; empty before the first

  for (std::size_t i = 0; i < events.size(); ++i) {
    const TraceEvent& e = events[i];
    switch (e.kind) {
      case TraceEvent::Kind::kDecision: {
        if (!focus.empty()) {
          bool has_unassigned = std::any_of(
              focus.begin(), focus.end(),
              [&](Lit l) { return level[static_cast<std::size_t>(l.var())] < 0; });
          bool inside = std::any_of(focus.begin(), focus.end(), [&](Lit l) {
            return l.var() == e.lit.var();
          });
          if (has_unassigned && !inside)
            violations.push_back(
                {static_cast<std::int64_t>(i), e.lit, focus});
        }
        level[static_cast<std::size_t>(e.lit.var())] = e.level;
        break;
      }
      case TraceEvent::Kind::kPropagation:
        level[static_cast<std::size_t>(e.lit.var())] = e.level;
        break;
      case TraceEvent::Kind::kLearned:
        focus = e.clause;
        break;
      case TraceEvent::Kind::kRestart:
        for (int v = 1; v <= var_count; ++v)
          if (level[static_cast<std::size_t>(v)] > 0)
            level[static_cast<std::size_t>(v)] = -1;
        break;
      case TraceEvent::Kind::kConflict:
        break;
    }
  }
  return violations;
}

std::vector<ScoreViolation> assert_equal_scores(
    std::span<const Clause> learned, ScoreMode mode, double decay,
    int var_count) {
  std::vector<ScoreViolation> violations;
  ScoreState scores(mode, var_count, decay);
  for (const Clause& clause : learned) {
    scores.bump_and_decay(clause);
    if (clause.empty()) continue;
    Var reference = clause.front().var();
    for (std::size_t i = 1; i < clause.size(); ++i) {
      Var v = clause[i].var();
      if (!scores.ranks_equal(reference, v))
        violations.push_back({scores.conflict_count(), reference, v});
    }
  }
  return violations;
}

}  // namespace opsat
