#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "opsat/checks.hpp"
#include "opsat/clause_db.hpp"
#include "opsat/cnf.hpp"
#include "opsat/scores.hpp"
#include "opsat/snapshot.hpp"
#include "opsat/trail.hpp"

namespace opsat {

// The solver configuration under test. Everything not listed here is fixed
// by construction: fixed-false phase (decisions always assign false),
// restart after every conflict, no clause deletion, first-UIP learning with
// no minimization, and ties on score broken by smaller variable index.
struct SolverConfig {
  ScoreMode score_mode = ScoreMode::kExact;
  double decay = 0.5;  // float mode only
  // Record the event stream and run the focus / equal-score checks on it.
  bool verify_invariants = false;
};

struct SolverStats {
  std::int64_t decisions = 0;
  std::int64_t propagations = 0;
  std::int64_t conflicts = 0;  // analyzed conflicts == learned clauses
};

// Everything known about one analyzed conflict.
struct ConflictRecord {
  int conflict_clause = -1;  // clause falsified by propagation
  ImplicationGraphSnapshot graph;
  Lit uip{};       // the first-UIP literal, as assigned on the trail
  Clause learned;  // contains -uip plus literals from lower levels
  int conflict_index = 0;  // 1-based
  int decision_level = 0;  // level at conflict time
  int backjump_level = 0;  // second-highest level in learned, 0 if unit
};

// The conflict that ended an unsatisfiable run. Always at decision level 0:
// unsatisfiability is reported exactly when a clause is falsified with no
// decisions on the trail.
struct FinalConflict {
  int clause = -1;
  int level = 0;
  std::int64_t decisions_on_trail = 0;
};

struct Result {
  Verdict verdict = Verdict::kUnsat;
  Assignment model;                     // total, verdict == kSat only
  std::vector<Clause> learned;          // in learning order
  std::vector<ConflictRecord> records;  // one per learned clause
  SolverStats stats;
  std::optional<FinalConflict> final_conflict;  // verdict == kUnsat only
  // Populated when config.verify_invariants is set.
  std::vector<TraceEvent> events;
  std::vector<FocusViolation> focus_violations;
  std::vector<ScoreViolation> score_violations;
};

// Synchronous trace sink. Callbacks fire on the solving thread, in run
// order. on_conflict fires for every falsified clause including the final
// level-0 one; on_learned only for analyzed conflicts.
class Observer {
 public:
  virtual ~Observer() = default;
  virtual void on_decision(Lit /*decision*/, int /*level*/) {}
  virtual void on_propagation(Lit /*implied*/, int /*level*/, int /*reason*/) {
  }
  virtual void on_conflict(int /*clause*/, int /*level*/,
                           int /*conflict_index*/) {}
  virtual void on_learned(const Clause& /*clause*/,
                          const ConflictRecord& /*record*/) {}
  virtual void on_restart() {}
};

// CDCL core. Watched-literal propagation is deterministic: newly assigned
// literals are processed in trail order, each one's watch list is scanned
// in clause-database order (kept sorted as watches move), and the first
// falsified clause ends propagation immediately.
class Solver {
 public:
  explicit Solver(const Formula& formula, SolverConfig config = {},
                  Observer* observer = nullptr);

  Result solve();

  // Stepping surface, usable before or instead of solve().
  // Runs boolean constraint propagation to fixpoint; returns the falsified
  // clause, if any.
  std::optional<int> propagate();
  // The next decision literal: the negative phase of the unassigned
  // variable ranking highest, ties to the smaller index. Requires at least
  // one unassigned variable.
  Lit pick_decision() const;

  const Trail& trail() const { return trail_; }
  const ClauseDb& db() const { return db_; }
  const ScoreState& scores() const { return scores_; }

 private:
  void emit_decision(Lit l);
  void emit_propagation(Lit l, int reason);
  void emit_conflict(int clause);
  void emit_learned(const ConflictRecord& record);
  void emit_restart();

  void assign(Lit l, int reason);
  void insert_watch(Lit l, int clause_ref);
  // Registers the clause with the watch index under the current (level-0)
  // assignment, asserting its unit literal if it has exactly one non-false
  // literal left. Returns the clause if it is already falsified.
  std::optional<int> attach_clause(int clause_ref);
  ConflictRecord analyze_conflict(int conflict_ref);
  void restart_after_learning(int learned_ref);
  Result finish_sat();
  Result finish_unsat(int conflict_ref);

  SolverConfig config_;
  Observer* observer_;
  ClauseDb db_;
  Trail trail_;
  ScoreState scores_;

  std::vector<std::vector<int>> watch_lists_;   // literal index -> sorted refs
  std::vector<std::array<int, 2>> watch_pos_;   // clause ref -> literal slots
  int qhead_ = 0;
  std::optional<int> pending_conflict_;  // falsified while (re)attaching

  int conflict_events_ = 0;
  std::vector<ConflictRecord> records_;
  SolverStats stats_;
  std::vector<TraceEvent> events_;  // verify_invariants only
};

Result solve(const Formula& formula, SolverConfig config = {},
             Observer* observer = nullptr);

}  // namespace opsat
