#include "opsat/dpll.hpp"

#include <algorithm>
#include <vector>

namespace opsat {
namespace {

class DpllSearch {
 public:
  explicit DpllSearch(const Formula& formula)
      : formula_(formula),
        values_(static_cast<std::size_t>(formula.var_count) + 1,
                Value::kUnassigned),
        occurrences_(2 * (static_cast<std::size_t>(formula.var_count) + 1)),
        false_count_(formula.clauses.size(), 0),
        true_count_(formula.clauses.size(), 0) {
    for (std::size_t ci = 0; ci < formula.clauses.size(); ++ci)
      for (Lit l : formula.clauses[ci])
        occurrences_[static_cast<std::size_t>(l.index())].push_back(
            static_cast<int>(ci));
  }

  DpllStats run() {
    stats_ = DpllStats{};
    for (const Clause& c : formula_.clauses)
      if (c.empty()) return stats_;  // UNSAT, zero nodes

    // Propagate the input's unit clauses before the first decision.
    std::vector<int> units;
    for (std::size_t ci = 0; ci < formula_.clauses.size(); ++ci)
      if (formula_.clauses[ci].size() == 1)
        units.push_back(static_cast<int>(ci));
    if (bcp(units) && search(1, 0)) stats_.verdict = Verdict::kSat;
    return stats_;
  }

 private:
  // The lowest-index unassigned variable never decreases along a branch, so
  // the scan resumes from the parent's branch variable.
  bool search(Var from, int depth) {
    Var v = from;
    while (v <= formula_.var_count && values_[static_cast<std::size_t>(v)] !=
                                          Value::kUnassigned)
      ++v;
    if (v > formula_.var_count) return true;  // total assignment, no conflict

    for (bool truth : {false, true}) {
      ++stats_.node_count;
      stats_.max_depth = std::max(stats_.max_depth, depth + 1);
      std::size_t mark = trail_.size();
      std::vector<int> units;
      Lit decision = truth ? Lit::positive(v) : Lit::negative(v);
      if (assign(decision, units) && bcp(units) && search(v + 1, depth + 1))
        return true;
      undo_to(mark);
    }
    return false;
  }

  bool assign(Lit l, std::vector<int>& units) {
    values_[static_cast<std::size_t>(l.var())] =
        l.is_positive() ? Value::kTrue : Value::kFalse;
    trail_.push_back(l);
    for (int ci : occurrences_[static_cast<std::size_t>(l.index())])
      ++true_count_[static_cast<std::size_t>(ci)];
    bool ok = true;
    for (int ci : occurrences_[static_cast<std::size_t>((-l).index())]) {
      int fc = ++false_count_[static_cast<std::size_t>(ci)];
      if (true_count_[static_cast<std::size_t>(ci)] > 0) continue;
      int size =
          static_cast<int>(formula_.clauses[static_cast<std::size_t>(ci)].size());
      if (fc == size)
        ok = false;
      else if (fc == size - 1)
        units.push_back(ci);
    }
    return ok;
  }

  bool bcp(std::vector<int>& units) {
    for (std::size_t qhead = 0; qhead < units.size(); ++qhead) {
      const std::size_t ci = static_cast<std::size_t>(units[qhead]);
      const Clause& c = formula_.clauses[ci];
      if (true_count_[ci] > 0) continue;
      if (false_count_[ci] == static_cast<int>(c.size())) return false;
      for (Lit l : c) {
        if (values_[static_cast<std::size_t>(l.var())] == Value::kUnassigned) {
          if (!assign(l, units)) return false;
          break;
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Lit l = trail_.back();
      trail_.pop_back();
      values_[static_cast<std::size_t>(l.var())] = Value::kUnassigned;
      for (int ci : occurrences_[static_cast<std::size_t>(l.index())])
        --true_count_[static_cast<std::size_t>(ci)];
      for (int ci : occurrences_[static_cast<std::size_t>((-l).index())])
        --false_count_[static_cast<std::size_t>(ci)];
    }
  }

  const Formula& formula_;
  std::vector<Value> values_;
  std::vector<std::vector<int>> occurrences_;
  std::vector<int> false_count_;
  std::vector<int> true_count_;
  std::vector<Lit> trail_;
  DpllStats stats_;
};

}  // namespace

DpllStats solve_dpll(const Formula& formula) {
  validate(formula);
  return DpllSearch(formula).run();
}

}  // namespace opsat
