#pragma once

#include <cassert>
#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {

inline constexpr int kNoReason = -1;

struct TrailEntry {
  Lit lit;        // the literal made true
  int level = 0;  // decision level at assignment time
  int reason = kNoReason;  // antecedent clause, kNoReason for decisions
};

// Assignment stack with decision levels and antecedents: the solver's
// ground truth. Each variable appears at most once; levels are
// nondecreasing along the stack.
class Trail {
 public:
  explicit Trail(int var_count)
      : values_(static_cast<std::size_t>(var_count) + 1, Value::kUnassigned),
        level_(static_cast<std::size_t>(var_count) + 1, -1),
        reason_(static_cast<std::size_t>(var_count) + 1, kNoReason),
        position_(static_cast<std::size_t>(var_count) + 1, -1),
        level_start_{0} {}

  int var_count() const { return static_cast<int>(values_.size()) - 1; }
  int size() const { return static_cast<int>(entries_.size()); }
  const TrailEntry& operator[](int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }

  int decision_level() const {
    return static_cast<int>(level_start_.size()) - 1;
  }

  Value value(Var v) const { return values_[static_cast<std::size_t>(v)]; }
  Value value(Lit l) const {
    Value v = value(l.var());
    return l.is_positive() ? v : negate(v);
  }
  bool assigned(Var v) const { return value(v) != Value::kUnassigned; }

  int level(Var v) const { return level_[static_cast<std::size_t>(v)]; }
  int reason(Var v) const { return reason_[static_cast<std::size_t>(v)]; }
  int position(Var v) const { return position_[static_cast<std::size_t>(v)]; }

  int level_start(int level) const {
    return level_start_[static_cast<std::size_t>(level)];
  }

  void assign(Lit l, int reason) {
    Var v = l.var();
    assert(!assigned(v));
    values_[v] = l.is_positive() ? Value::kTrue : Value::kFalse;
    level_[v] = decision_level();
    reason_[v] = reason;
    position_[v] = size();
    entries_.push_back({l, decision_level(), reason});
  }

  void decide(Lit l) {
    level_start_.push_back(size());
    assign(l, kNoReason);
  }

  // Restart truncation: drop everything above level 0.
  void backtrack_to_level_zero() {
    int keep = level_start_[1 <= decision_level() ? 1 : 0];
    if (decision_level() == 0) return;
    for (int i = size() - 1; i >= keep; --i) {
      Var v = entries_[static_cast<std::size_t>(i)].lit.var();
      values_[v] = Value::kUnassigned;
      level_[v] = -1;
      reason_[v] = kNoReason;
      position_[v] = -1;
    }
    entries_.resize(static_cast<std::size_t>(keep));
    level_start_.resize(1);
  }

  Assignment to_assignment() const {
    Assignment a(var_count());
    for (const TrailEntry& e : entries_) a.set(e.lit, true);
    return a;
  }

 private:
  std::vector<TrailEntry> entries_;
  std::vector<Value> values_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> position_;
  std::vector<int> level_start_;  // level_start_[k] = trail index of level k
};

}  // namespace opsat
