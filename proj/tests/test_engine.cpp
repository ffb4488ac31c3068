#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "opsat/opgen.hpp"
#include "opsat/oracle.hpp"
#include "opsat/solver.hpp"
#include "testutil.hpp"

using namespace opsat;
using testutil::Rng;
using testutil::same_literal_set;

namespace {

Clause mk(std::initializer_list<int> dimacs) {
  Clause c;
  for (int v : dimacs) c.push_back(Lit::from_dimacs(v));
  return c;
}

Formula formula(int vars, std::initializer_list<Clause> clauses) {
  Formula f;
  f.var_count = vars;
  f.clauses = clauses;
  return f;
}

}  // namespace

TEST_CASE("unit clause propagates at level 0 and satisfies") {
  Result r = solve(formula(1, {mk({1})}));
  CHECK(r.verdict == Verdict::kSat);
  CHECK(r.model.value(1) == Value::kTrue);
  CHECK(r.stats.decisions == 0);
  CHECK(r.stats.conflicts == 0);
}

TEST_CASE("propagate steps: unit then conflict on the second clause") {
  Formula f = formula(1, {mk({1}), mk({-1})});
  Solver s(f);
  auto conflict = s.propagate();
  REQUIRE(conflict.has_value());
  CHECK(*conflict == 1);  // the second clause is the one falsified
  CHECK(s.trail().value(Var{1}) == Value::kTrue);
  CHECK(s.trail().level(1) == 0);

  CHECK(solve(f).verdict == Verdict::kUnsat);
}

TEST_CASE("empty clause is an immediate level-0 conflict") {
  Result r = solve(formula(2, {mk({1}), Clause{}}));
  CHECK(r.verdict == Verdict::kUnsat);
  CHECK(r.learned.empty());
  REQUIRE(r.final_conflict.has_value());
  CHECK(r.final_conflict->clause == 1);
  CHECK(r.final_conflict->level == 0);
  CHECK(r.final_conflict->decisions_on_trail == 0);
}

TEST_CASE("solver rejects unclean input clauses") {
  CHECK_THROWS_AS(solve(formula(2, {mk({1, -1})})), std::invalid_argument);
  CHECK_THROWS_AS(solve(formula(2, {mk({2, 2})})), std::invalid_argument);
}

TEST_CASE("decision picks the lowest index among never-bumped variables") {
  // Everything except variables 5 and 9 is pinned by unit clauses.
  Formula f = formula(
      9, {mk({1}), mk({2}), mk({3}), mk({4}), mk({6}), mk({7}), mk({8})});
  Solver s(f);
  CHECK_FALSE(s.propagate().has_value());
  CHECK(s.pick_decision() == Lit::negative(5));
}

TEST_CASE("fresh ordering instance branches on the first column-major var") {
  Formula op6 = generate_op(6);
  OpCodec codec(6);
  Solver s(op6);
  CHECK_FALSE(s.propagate().has_value());
  // All scores are zero, so the tie-break picks P(2,1), assigned false.
  CHECK(s.pick_decision() == Lit::negative(codec.encode(2, 1)));
}

TEST_CASE("bump_and_decay float arithmetic") {
  ScoreState s(ScoreMode::kFloat, 2, 0.5);
  s.bump_and_decay(mk({1}));  // q(x1) = 1
  CHECK(s.score(1) == doctest::Approx(1.0));
  s.bump_and_decay(mk({1}));  // q(x1) = 1 * 0.5 + 1
  CHECK(s.score(1) == doctest::Approx(1.5));

  ScoreState t(ScoreMode::kFloat, 2, 0.5);
  t.bump_and_decay(mk({2}));  // q(x2) = 1
  t.bump_and_decay(mk({1}));
  t.bump_and_decay(mk({1}));  // two conflicts without x2
  CHECK(t.score(2) == doctest::Approx(0.25));
}

TEST_CASE("one recent bump outranks any run of older ones") {
  // x bumped at conflict 3; y bumped at conflicts 1 and 2. With decay 1/2,
  // y's decayed sum is 0.75 < 1, and the exact order agrees.
  for (ScoreMode mode : {ScoreMode::kExact, ScoreMode::kFloat}) {
    ScoreState s(mode, 2, 0.5);
    s.bump_and_decay(mk({2}));
    s.bump_and_decay(mk({2}));
    s.bump_and_decay(mk({1}));
    CHECK(s.ranks_above(1, 2));
    CHECK_FALSE(s.ranks_above(2, 1));
    CHECK_FALSE(s.ranks_equal(1, 2));
    if (mode == ScoreMode::kFloat) {
      CHECK(s.score(2) == doctest::Approx(0.75));
      CHECK(s.score(1) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("exact ranking: identical recent history, longer tail wins") {
  ScoreState s(ScoreMode::kExact, 3, 0.5);
  s.bump_and_decay(mk({1}));     // t=1: x1
  s.bump_and_decay(mk({1, 2})); // t=2: x1 x2
  // Histories: x1 = [1,2], x2 = [2]. x1 outranks x2; x3 trails both.
  CHECK(s.ranks_above(1, 2));
  CHECK(s.ranks_above(2, 3));
  CHECK(s.ranks_equal(3, 3));
}

TEST_CASE("resolution stops at the decision when it is its own first UIP") {
  // Deciding -x1 propagates x2 through (x2 v x1) and falsifies (-x2 v x1).
  // Resolving the two leaves the decision as the only current-level
  // variable, so the learned clause is the unit {x1}.
  Formula f = formula(3, {mk({2, 1}), mk({-2, 1})});
  Result r = solve(f);
  CHECK(r.verdict == Verdict::kSat);
  REQUIRE(r.records.size() == 1);
  const ConflictRecord& rec = r.records[0];
  CHECK(rec.conflict_clause == 1);
  CHECK(rec.uip == Lit::negative(1));
  CHECK(rec.learned == mk({1}));
  CHECK(rec.backjump_level == 0);
  CHECK(rec.decision_level == 1);
  CHECK(r.model.value(1) == Value::kTrue);
}

TEST_CASE("first conflict on the n=6 instance matches the predicted head") {
  Formula op6 = generate_op(6);
  OpCodec codec(6);
  SolverConfig config;
  config.verify_invariants = true;
  Result r = solve(op6, config);

  REQUIRE(r.records.size() >= 1);
  const ConflictRecord& first = r.records[0];
  // Conflict clause is D(6), the last original clause.
  CHECK(first.conflict_clause == 140);
  CHECK(first.decision_level == 4);
  CHECK(first.uip == Lit::negative(codec.encode(5, 1)));
  CHECK(same_literal_set(first.learned,
                         prefix_clause(codec, 1, 4)));  // C(1, n-2)

  // The first four events are the column-major decisions, all false.
  std::vector<Lit> decisions;
  for (const TraceEvent& e : r.events) {
    if (e.kind == TraceEvent::Kind::kConflict) break;
    if (e.kind == TraceEvent::Kind::kDecision) decisions.push_back(e.lit);
  }
  CHECK(decisions ==
        std::vector<Lit>{Lit::negative(codec.encode(2, 1)),
                         Lit::negative(codec.encode(3, 1)),
                         Lit::negative(codec.encode(4, 1)),
                         Lit::negative(codec.encode(5, 1))});

  // Propagation reaches the conflict through P(6,1): derived from D(1),
  // then the column-6 negatives.
  const TraceEvent* p61 = nullptr;
  for (const TraceEvent& e : r.events)
    if (e.kind == TraceEvent::Kind::kPropagation &&
        e.lit == Lit::positive(codec.encode(6, 1))) {
      p61 = &e;
      break;
    }
  REQUIRE(p61 != nullptr);
  CHECK(p61->level == 4);
  CHECK(p61->reason == 135);  // D(1)
}

TEST_CASE("the n=6 run ends by level-0 propagation alone") {
  SolverConfig config;
  config.verify_invariants = true;
  Result r = solve(generate_op(6), config);
  OpCodec codec(6);

  CHECK(r.verdict == Verdict::kUnsat);
  REQUIRE(r.stats.conflicts == 12);
  REQUIRE(r.final_conflict.has_value());
  CHECK(r.final_conflict->level == 0);
  CHECK(r.final_conflict->decisions_on_trail == 0);
  // The closing conflict falsifies the learned clause C(3,2).
  CHECK(r.final_conflict->clause == 141 + 6);

  // The eleventh learned clause is the unit P(1,2); after the restart it
  // asserts at level 0 and antisymmetry immediately yields -P(2,1).
  CHECK(r.learned[10] == Clause{Lit::positive(codec.encode(1, 2))});
  std::size_t i = 0;
  while (i < r.events.size() &&
         !(r.events[i].kind == TraceEvent::Kind::kLearned &&
           r.events[i].conflict_index == 11))
    ++i;
  REQUIRE(i + 3 < r.events.size());
  CHECK(r.events[i + 1].kind == TraceEvent::Kind::kRestart);
  CHECK(r.events[i + 2].kind == TraceEvent::Kind::kPropagation);
  CHECK(r.events[i + 2].lit == Lit::positive(codec.encode(1, 2)));
  CHECK(r.events[i + 2].level == 0);
  CHECK(r.events[i + 2].reason == 141 + 10);
  CHECK(r.events[i + 3].kind == TraceEvent::Kind::kPropagation);
  CHECK(r.events[i + 3].lit == Lit::negative(codec.encode(2, 1)));
  CHECK(r.events[i + 3].reason == 120);  // B(1,2)
}

TEST_CASE("every learned clause keeps the single-current-level shape") {
  SolverConfig config;
  Result r = solve(generate_op(7), config);
  CHECK(r.verdict == Verdict::kUnsat);
  for (const ConflictRecord& rec : r.records) {
    // learned[0] asserts the negated UIP; all other literals sit at lower
    // levels, which the snapshot records.
    REQUIRE(!rec.learned.empty());
    CHECK(rec.learned[0] == -rec.uip);
    int at_conflict_level = 0;
    for (Lit l : rec.learned) {
      auto node = std::find_if(rec.graph.nodes.begin(), rec.graph.nodes.end(),
                               [&](const SnapshotNode& n) {
                                 return n.lit.var() == l.var();
                               });
      REQUIRE(node != rec.graph.nodes.end());
      CHECK(node->lit == -l);  // falsified under the conflicting trail
      if (node->level == rec.decision_level) ++at_conflict_level;
    }
    CHECK(at_conflict_level == 1);
  }
}

TEST_CASE("no learned clause repeats a database clause") {
  Formula op = generate_op(8);
  Result r = solve(op);
  auto canon = [](const Clause& c) { return testutil::sorted(c); };
  std::vector<Clause> seen;
  for (const Clause& c : op.clauses) seen.push_back(canon(c));
  for (const Clause& learned : r.learned) {
    Clause key = canon(learned);
    CHECK(std::find(seen.begin(), seen.end(), key) == seen.end());
    seen.push_back(key);
  }
}

TEST_CASE("verdicts agree with the brute-force oracle on random 3-CNFs") {
  Rng rng(7701);
  int sat = 0, unsat = 0;
  for (int i = 0; i < 200; ++i) {
    Formula f = testutil::random_formula(rng, /*max_vars=*/20,
                                         /*max_clauses=*/90);
    Result r = solve(f);
    BruteForceResult expected = brute_force_sat(f);
    REQUIRE(r.verdict == expected.verdict);
    if (r.verdict == Verdict::kSat) {
      ++sat;
      CHECK(evaluate(f, r.model) == Eval::kSatisfied);
      CHECK(r.model.var_count() == f.var_count);
    } else {
      ++unsat;
      REQUIRE(r.final_conflict.has_value());
      CHECK(r.final_conflict->decisions_on_trail == 0);
    }
  }
  // The generator really exercises both outcomes.
  CHECK(sat > 20);
  CHECK(unsat > 20);
}

TEST_CASE("identical runs produce identical results") {
  Formula f = generate_op(9);
  SolverConfig config;
  config.verify_invariants = true;
  Result a = solve(f, config);
  Result b = solve(f, config);
  CHECK(a.learned == b.learned);
  CHECK(a.stats.decisions == b.stats.decisions);
  CHECK(a.stats.propagations == b.stats.propagations);
  CHECK(a.stats.conflicts == b.stats.conflicts);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].kind == b.events[i].kind);
    CHECK(a.events[i].lit == b.events[i].lit);
    CHECK(a.events[i].reason == b.events[i].reason);
  }
}

TEST_CASE("float and exact modes take the same decisions at decay 0.25") {
  SolverConfig exact;
  exact.verify_invariants = true;
  SolverConfig fl;
  fl.score_mode = ScoreMode::kFloat;
  fl.decay = 0.25;
  fl.verify_invariants = true;

  Formula f = generate_op(8);
  Result a = solve(f, exact);
  Result b = solve(f, fl);
  CHECK(a.learned == b.learned);
  auto decisions = [](const Result& r) {
    std::vector<Lit> out;
    for (const TraceEvent& e : r.events)
      if (e.kind == TraceEvent::Kind::kDecision) out.push_back(e.lit);
    return out;
  };
  CHECK(decisions(a) == decisions(b));
}

TEST_CASE("focus check flags a synthetic out-of-clause decision") {
  std::vector<TraceEvent> events;
  TraceEvent learn;
  learn.kind = TraceEvent::Kind::kLearned;
  learn.clause = mk({1, 2});
  events.push_back(learn);

  TraceEvent decide;
  decide.kind = TraceEvent::Kind::kDecision;
  decide.lit = Lit::negative(3);  // 1 and 2 still unassigned
  decide.level = 1;
  events.push_back(decide);

  auto violations = assert_focus_lemma(events, 3);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].decided == Lit::negative(3));

  // Deciding inside the clause is fine.
  events[1].lit = Lit::negative(2);
  CHECK(assert_focus_lemma(events, 3).empty());

  // With no learned clause at all the check is vacuous.
  std::vector<TraceEvent> bare{events[1]};
  CHECK(assert_focus_lemma(bare, 3).empty());
}

TEST_CASE("equal-score check flags a half-bumped clause") {
  // After {x1} then {x1, x2}, the histories diverge inside the second
  // clause: x1 has an extra older bump.
  std::vector<Clause> learned{mk({1}), mk({1, 2})};
  for (ScoreMode mode : {ScoreMode::kExact, ScoreMode::kFloat}) {
    auto violations = assert_equal_scores(learned, mode, 0.5, 2);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].conflict_index == 2);
    CHECK(violations[0].offender == 2);
  }
  // A clean rerun of the same clause keeps scores equal.
  std::vector<Clause> clean{mk({1, 2}), mk({1, 2})};
  CHECK(assert_equal_scores(clean, ScoreMode::kExact, 0.5, 2).empty());
}

TEST_CASE("verification mode reports no violations on a real run") {
  SolverConfig config;
  config.verify_invariants = true;
  Result r = solve(generate_op(10), config);
  CHECK(r.focus_violations.empty());
  CHECK(r.score_violations.empty());
}
