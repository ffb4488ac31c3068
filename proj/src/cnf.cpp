#include "opsat/cnf.hpp"

#include <stdexcept>

namespace opsat {

Eval evaluate_clause(const Clause& clause, const Assignment& assignment) {
  bool open = false;
  for (Lit l : clause) {
    switch (assignment.value(l)) {
      case Value::kTrue:
        return Eval::kSatisfied;
      case Value::kUnassigned:
        open = true;
        break;
      case Value::kFalse:
        break;
    }
  }
  return open ? Eval::kUndetermined : Eval::kFalsified;
}

Eval evaluate(const Formula& formula, const Assignment& assignment) {
  bool open = false;
  for (const Clause& c : formula.clauses) {
    switch (evaluate_clause(c, assignment)) {
      case Eval::kFalsified:
        return Eval::kFalsified;
      case Eval::kUndetermined:
        open = true;
        break;
      case Eval::kSatisfied:
        break;
    }
  }
  return open ? Eval::kUndetermined : Eval::kSatisfied;
}

bool has_duplicate_var(const Clause& clause) {
  for (std::size_t i = 0; i < clause.size(); ++i)
    for (std::size_t j = i + 1; j < clause.size(); ++j)
      if (clause[i].var() == clause[j].var()) return true;
  return false;
}

void validate(const Formula& formula) {
  for (std::size_t ci = 0; ci < formula.clauses.size(); ++ci) {
    const Clause& c = formula.clauses[ci];
    for (Lit l : c) {
      if (l.var() < 1 || l.var() > formula.var_count)
        throw std::invalid_argument("clause " + std::to_string(ci + 1) +
                                    ": literal out of range");
    }
    if (has_duplicate_var(c))
      throw std::invalid_argument("clause " + std::to_string(ci + 1) +
                                  ": variable occurs twice");
  }
}

std::string to_string(Lit l) { return std::to_string(l.to_dimacs()); }

std::string to_string(const Clause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " ";
    out += to_string(c[i]);
  }
  out += ")";
  return out;
}

}  // namespace opsat
