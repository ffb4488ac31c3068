#include <stdexcept>
#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {
namespace {

// Depth-first sweep over the assignment space in variable order, false
// branch first. A branch is abandoned as soon as some clause has every
// literal false; pruned branches contain no models, so the search is still
// exhaustive. Per-clause false/true counters are maintained incrementally
// through occurrence lists to keep each step cheap.
class Enumerator {
 public:
  explicit Enumerator(const Formula& formula)
      : formula_(formula),
        assignment_(formula.var_count),
        occurrences_(2 * (formula.var_count + 1)),
        false_count_(formula.clauses.size(), 0),
        true_count_(formula.clauses.size(), 0) {
    for (std::size_t ci = 0; ci < formula.clauses.size(); ++ci)
      for (Lit l : formula.clauses[ci])
        occurrences_[l.index()].push_back(static_cast<int>(ci));
  }

  bool search(Var v) {
    if (v > formula_.var_count) return true;  // no clause falsified anywhere
    for (bool truth : {false, true}) {
      Lit assigned = truth ? Lit::positive(v) : Lit::negative(v);
      if (set(assigned)) {
        if (search(v + 1)) return true;
      }
      unset(assigned);
    }
    return false;
  }

  const Assignment& assignment() const { return assignment_; }

  bool has_empty_clause() const {
    for (const Clause& c : formula_.clauses)
      if (c.empty()) return true;
    return false;
  }

 private:
  // Applies the assignment; returns false if it falsifies some clause.
  bool set(Lit l) {
    assignment_.set(l, true);
    for (int ci : occurrences_[l.index()]) ++true_count_[ci];
    bool ok = true;
    for (int ci : occurrences_[(-l).index()]) {
      ++false_count_[ci];
      if (true_count_[ci] == 0 &&
          false_count_[ci] == static_cast<int>(formula_.clauses[ci].size()))
        ok = false;
    }
    return ok;
  }

  void unset(Lit l) {
    assignment_.set(l.var(), Value::kUnassigned);
    for (int ci : occurrences_[l.index()]) --true_count_[ci];
    for (int ci : occurrences_[(-l).index()]) --false_count_[ci];
  }

  const Formula& formula_;
  Assignment assignment_;
  std::vector<std::vector<int>> occurrences_;
  std::vector<int> false_count_;
  std::vector<int> true_count_;
};

}  // namespace

BruteForceResult brute_force_sat(const Formula& formula) {
  if (formula.var_count > kBruteForceVarLimit)
    throw std::invalid_argument("brute_force_sat: formula exceeds " +
                                std::to_string(kBruteForceVarLimit) +
                                " variables");
  validate(formula);

  Enumerator e(formula);
  if (e.has_empty_clause()) return {Verdict::kUnsat, Assignment()};
  if (e.search(1)) return {Verdict::kSat, e.assignment()};
  return {Verdict::kUnsat, Assignment()};
}

}  // namespace opsat
