#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "opsat/clause_db.hpp"
#include "opsat/cnf.hpp"
#include "opsat/opgen.hpp"
#include "opsat/snapshot.hpp"
#include "opsat/solver.hpp"
#include "opsat/trail.hpp"

namespace opsat {

// Independent reverse-unit-propagation checker. Deliberately shares nothing
// with the engine's watched-literal propagation: it keeps per-clause
// false/satisfied counters driven by occurrence lists, so it can confirm
// the engine's learned clauses without inheriting its bugs.
//
// A clause is RUP with respect to the context iff asserting the negation of
// each of its literals and propagating units to fixpoint falsifies some
// context clause.
class RupChecker {
 public:
  explicit RupChecker(const Formula& context);

  // Extends the context, e.g. with an already-checked learned clause.
  void add_clause(const Clause& clause);

  bool check(const Clause& clause);

  int context_size() const { return static_cast<int>(clauses_.size()); }

 private:
  bool assign(Lit l, std::vector<int>& unit_queue);
  void undo_all();

  int var_count_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> occurrences_;  // literal index -> clause ids
  std::vector<int> false_count_;
  std::vector<int> true_count_;
  std::vector<Value> values_;
  std::vector<Lit> trail_;
  std::vector<int> unit_at_rest_;  // size-1 clauses, unit with nothing set
  bool has_empty_clause_ = false;
};

// One-shot convenience over RupChecker.
bool check_rup(const Clause& clause, const Formula& context);

// Ordered learned-clause additions of one run.
struct ProofLog {
  std::vector<Clause> additions;
  std::vector<int> conflict_indices;

  static ProofLog from_result(const Result& result);
};

// Textual DRAT: one addition line per learned clause in learning order,
// terminated by the empty-clause line "0". Only meaningful for refutations;
// throws std::logic_error if the run was satisfiable.
std::string export_drat(const ProofLog& log);
std::string export_drat(const Result& result);

// Captures the conflict's ancestor graph from the live trail. Call at
// conflict time, before the restart truncates the trail. uip is the
// first-UIP literal as assigned; omit it for level-0 conflicts, which have
// no cut.
ImplicationGraphSnapshot snapshot_conflict(const Trail& trail,
                                           const ClauseDb& db,
                                           int conflict_ref,
                                           std::optional<Lit> uip);

struct DotOptions {
  // When set, nodes are labelled P_{row,column} and original clauses get
  // their A/B/D names; otherwise nodes are x<var> and clauses #<ref>.
  std::optional<OpCodec> codec;
  // Learned clauses matching a prefix clause are labelled C(column,length);
  // needs the learned list and the original clause count to resolve refs.
  std::span<const Clause> learned;
  int original_count = 0;
};

// DOT digraph of one snapshot: the 1UIP cut is drawn as a dashed cluster
// around the reason side and the UIP node is outlined.
std::string export_dot(const ImplicationGraphSnapshot& snapshot,
                       const DotOptions& options = {});

// Streams solver events as JSON lines, one object per decision, propagation
// and conflict, with fields kind, literal, level, reason, conflict_index.
// Identically configured runs produce byte-identical streams.
class JsonTraceWriter final : public Observer {
 public:
  explicit JsonTraceWriter(std::ostream& out) : out_(out) {}

  void on_decision(Lit decision, int level) override;
  void on_propagation(Lit implied, int level, int reason) override;
  void on_conflict(int clause, int level, int conflict_index) override;

 private:
  std::ostream& out_;
};

}  // namespace opsat
