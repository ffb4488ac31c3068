#include "opsat/solver.hpp"

#include <algorithm>
#include <cassert>

#include "opsat/proofs.hpp"

namespace opsat {

Solver::Solver(const Formula& formula, SolverConfig config, Observer* observer)
    : config_(config),
      observer_(observer),
      trail_(formula.var_count),
      scores_(config.score_mode, formula.var_count,
              config.score_mode == ScoreMode::kFloat ? config.decay : 0.5) {
  validate(formula);
  watch_lists_.resize(2 * (static_cast<std::size_t>(formula.var_count) + 1));
  for (const Clause& c : formula.clauses) {
    int ref = db_.add_original(c);
    watch_pos_.push_back({-1, -1});
    if (auto conflict = attach_clause(ref); conflict && !pending_conflict_)
      pending_conflict_ = conflict;
  }
}

void Solver::emit_decision(Lit l) {
  if (observer_) observer_->on_decision(l, trail_.decision_level());
  if (config_.verify_invariants)
    events_.push_back({TraceEvent::Kind::kDecision, l,
                       trail_.decision_level(), kNoReason, 0, {}});
}

void Solver::emit_propagation(Lit l, int reason) {
  if (observer_) observer_->on_propagation(l, trail_.decision_level(), reason);
  if (config_.verify_invariants)
    events_.push_back({TraceEvent::Kind::kPropagation, l,
                       trail_.decision_level(), reason, 0, {}});
}

void Solver::emit_conflict(int clause) {
  if (observer_)
    observer_->on_conflict(clause, trail_.decision_level(), conflict_events_);
  if (config_.verify_invariants)
    events_.push_back({TraceEvent::Kind::kConflict, Lit{},
                       trail_.decision_level(), clause, conflict_events_, {}});
}

void Solver::emit_learned(const ConflictRecord& record) {
  if (observer_) observer_->on_learned(record.learned, record);
  if (config_.verify_invariants)
    events_.push_back({TraceEvent::Kind::kLearned, Lit{},
                       record.decision_level, record.conflict_clause,
                       record.conflict_index, record.learned});
}

void Solver::emit_restart() {
  if (observer_) observer_->on_restart();
  if (config_.verify_invariants)
    events_.push_back({TraceEvent::Kind::kRestart, Lit{}, 0, kNoReason, 0, {}});
}

void Solver::assign(Lit l, int reason) {
  trail_.assign(l, reason);
  if (reason != kNoReason) {
    ++stats_.propagations;
    emit_propagation(l, reason);
  }
}

void Solver::insert_watch(Lit l, int clause_ref) {
  auto& wl = watch_lists_[static_cast<std::size_t>(l.index())];
  wl.insert(std::lower_bound(wl.begin(), wl.end(), clause_ref), clause_ref);
}

std::optional<int> Solver::attach_clause(int clause_ref) {
  const Clause& c = db_[clause_ref];
  if (c.empty()) return clause_ref;
  if (c.size() == 1) {
    switch (trail_.value(c[0])) {
      case Value::kTrue:
        return std::nullopt;
      case Value::kFalse:
        return clause_ref;
      case Value::kUnassigned:
        assign(c[0], clause_ref);
        return std::nullopt;
    }
  }
  int w0 = -1, w1 = -1;
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    if (trail_.value(c[static_cast<std::size_t>(k)]) == Value::kFalse) continue;
    if (w0 < 0)
      w0 = k;
    else if (w1 < 0) {
      w1 = k;
      break;
    }
  }
  if (w0 < 0) return clause_ref;  // every literal already false
  bool unit = w1 < 0;
  if (unit) w1 = (w0 == 0) ? 1 : 0;  // park the second watch on a false literal
  watch_pos_[static_cast<std::size_t>(clause_ref)] = {w0, w1};
  insert_watch(c[static_cast<std::size_t>(w0)], clause_ref);
  insert_watch(c[static_cast<std::size_t>(w1)], clause_ref);
  if (unit && trail_.value(c[static_cast<std::size_t>(w0)]) == Value::kUnassigned)
    assign(c[static_cast<std::size_t>(w0)], clause_ref);
  return std::nullopt;
}

std::optional<int> Solver::propagate() {
  if (pending_conflict_) return pending_conflict_;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++].lit;  // just became true
    const Lit false_lit = -p;
    auto& wl = watch_lists_[static_cast<std::size_t>(false_lit.index())];
    std::size_t keep = 0;
    std::optional<int> conflict;
    for (std::size_t i = 0; i < wl.size(); ++i) {
      const int cref = wl[i];
      if (conflict) {  // stopped; the rest stay watched here
        wl[keep++] = cref;
        continue;
      }
      const Clause& c = db_[cref];
      auto& wp = watch_pos_[static_cast<std::size_t>(cref)];
      const int wi = c[static_cast<std::size_t>(wp[0])] == false_lit ? 0 : 1;
      const Lit other = c[static_cast<std::size_t>(wp[1 - wi])];
      if (trail_.value(other) == Value::kTrue) {
        wl[keep++] = cref;
        continue;
      }
      int replacement = -1;
      for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        if (k == wp[0] || k == wp[1]) continue;
        if (trail_.value(c[static_cast<std::size_t>(k)]) != Value::kFalse) {
          replacement = k;
          break;
        }
      }
      if (replacement >= 0) {
        wp[wi] = replacement;
        insert_watch(c[static_cast<std::size_t>(replacement)], cref);
        continue;  // moved away from this list
      }
      wl[keep++] = cref;
      if (trail_.value(other) == Value::kUnassigned)
        assign(other, cref);  // unit
      else
        conflict = cref;  // both watches false with no replacement
    }
    wl.resize(keep);
    if (conflict) return conflict;
  }
  return std::nullopt;
}

Lit Solver::pick_decision() const {
  Var best = 0;
  for (Var v = 1; v <= trail_.var_count(); ++v) {
    if (trail_.assigned(v)) continue;
    if (best == 0 || scores_.ranks_above(v, best)) best = v;
  }
  assert(best != 0);
  return Lit::negative(best);
}

ConflictRecord Solver::analyze_conflict(int conflict_ref) {
  const int conflict_level = trail_.decision_level();
  assert(conflict_level > 0);

  std::vector<char> seen(static_cast<std::size_t>(trail_.var_count()) + 1, 0);
  Clause below_level;  // literals from levels below the conflict level
  int open = 0;        // conflict-level variables still to resolve
  int reason = conflict_ref;
  int idx = trail_.size() - 1;
  Lit pivot{};

  while (true) {
    const Clause& rc = db_[reason];
    for (Lit q : rc) {
      if (q == pivot) continue;  // the literal this clause propagated
      Var v = q.var();
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (trail_.level(v) == conflict_level)
        ++open;
      else
        below_level.push_back(q);
    }
    while (!seen[static_cast<std::size_t>(trail_[idx].lit.var())]) --idx;
    assert(idx >= trail_.level_start(conflict_level));
    pivot = trail_[idx].lit;
    --open;
    if (open == 0) break;
    reason = trail_[idx].reason;
    assert(reason != kNoReason);
    --idx;
  }

  ConflictRecord record;
  record.conflict_clause = conflict_ref;
  record.uip = pivot;
  record.decision_level = conflict_level;
  record.learned.reserve(below_level.size() + 1);
  record.learned.push_back(-pivot);
  record.learned.insert(record.learned.end(), below_level.begin(),
                        below_level.end());
  record.backjump_level = 0;
  for (Lit l : below_level)
    record.backjump_level = std::max(record.backjump_level,
                                     trail_.level(l.var()));
  record.graph = snapshot_conflict(trail_, db_, conflict_ref, pivot);
  return record;
}

void Solver::restart_after_learning(int learned_ref) {
  trail_.backtrack_to_level_zero();
  qhead_ = trail_.size();  // level-0 prefix was already propagated
  emit_restart();
  watch_pos_.push_back({-1, -1});
  assert(static_cast<int>(watch_pos_.size()) == db_.size());
  if (auto conflict = attach_clause(learned_ref); conflict)
    pending_conflict_ = conflict;
}

Result Solver::finish_sat() {
  Result r;
  r.verdict = Verdict::kSat;
  r.model = trail_.to_assignment();
  r.learned.assign(db_.learned_clauses().begin(), db_.learned_clauses().end());
  r.records = std::move(records_);
  r.stats = stats_;
  if (config_.verify_invariants) {
    r.events = std::move(events_);
    r.focus_violations = assert_focus_lemma(r.events, trail_.var_count());
    r.score_violations = assert_equal_scores(r.learned, config_.score_mode,
                                             config_.decay, trail_.var_count());
  }
  return r;
}

Result Solver::finish_unsat(int conflict_ref) {
  Result r;
  r.verdict = Verdict::kUnsat;
  r.learned.assign(db_.learned_clauses().begin(), db_.learned_clauses().end());
  r.records = std::move(records_);
  r.stats = stats_;
  r.final_conflict = FinalConflict{conflict_ref, trail_.decision_level(),
                                   trail_.decision_level()};
  if (config_.verify_invariants) {
    r.events = std::move(events_);
    r.focus_violations = assert_focus_lemma(r.events, trail_.var_count());
    r.score_violations = assert_equal_scores(r.learned, config_.score_mode,
                                             config_.decay, trail_.var_count());
  }
  return r;
}

Result Solver::solve() {
  while (true) {
    if (auto conflict = propagate()) {
      ++conflict_events_;
      emit_conflict(*conflict);
      if (trail_.decision_level() == 0) return finish_unsat(*conflict);

      ConflictRecord record = analyze_conflict(*conflict);
      scores_.bump_and_decay(record.learned);
      record.conflict_index = scores_.conflict_count();
      assert(record.conflict_index == conflict_events_);
      int learned_ref = db_.add_learned(record.learned);
      ++stats_.conflicts;
      emit_learned(record);
      records_.push_back(record);
      restart_after_learning(learned_ref);
      continue;
    }
    if (trail_.size() == trail_.var_count()) return finish_sat();
    Lit decision = pick_decision();
    ++stats_.decisions;
    trail_.decide(decision);
    emit_decision(decision);
  }
}

Result solve(const Formula& formula, SolverConfig config, Observer* observer) {
  return Solver(formula, config, observer).solve();
}

}  // namespace opsat
