#pragma once

#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {

enum class ScoreMode { kExact, kFloat };

// Branching scores. A variable's score is bumped by 1 when it appears in a
// learned clause, and all scores decay by a multiplicative factor once per
// conflict, decay first: q(x,t) = b(x,t) + decay * q(x,t-1).
//
// Exact mode is the normative semantics: each variable keeps the list of
// conflict indices at which it was bumped, and variables compare
// lexicographically on those lists read most-recent-first. This is the
// order a decayed sum induces whenever the decay factor is at most 1/2,
// without any floating-point sensitivity at the 1/2 boundary. Float mode
// keeps plain decayed sums.
class ScoreState {
 public:
  ScoreState(ScoreMode mode, int var_count, double decay);

  ScoreMode mode() const { return mode_; }
  int conflict_count() const { return conflicts_; }

  // Applies one conflict's update: decay everything, then bump the
  // variables of the learned clause.
  void bump_and_decay(const Clause& learned);

  // Strict "better branching candidate" order. Ties are broken outside by
  // variable index.
  bool ranks_above(Var a, Var b) const;
  bool ranks_equal(Var a, Var b) const;

  double score(Var v) const { return score_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& bump_history(Var v) const {
    return bumps_[static_cast<std::size_t>(v)];
  }

 private:
  ScoreMode mode_;
  double decay_;
  int conflicts_ = 0;
  std::vector<std::vector<int>> bumps_;  // exact: ascending conflict indices
  std::vector<double> score_;            // float: decayed sums
};

}  // namespace opsat
