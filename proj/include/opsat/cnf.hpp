#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opsat {

// Variables are 1-based, matching DIMACS numbering.
using Var = int;

// A literal is a variable plus a polarity, packed so that the raw code can
// index watch lists and per-literal tables directly. Negation flips the low
// bit, so it is an involution by construction.
class Lit {
 public:
  Lit() = default;

  static Lit positive(Var v) { return Lit(2 * v); }
  static Lit negative(Var v) { return Lit(2 * v + 1); }
  static Lit from_dimacs(int value) {
    return value > 0 ? positive(value) : negative(-value);
  }

  Var var() const { return code_ >> 1; }
  bool is_positive() const { return (code_ & 1) == 0; }
  int to_dimacs() const { return is_positive() ? var() : -var(); }

  // Dense index for per-literal arrays (size 2 * (var_count + 1)).
  int index() const { return code_; }

  Lit operator-() const { return Lit(code_ ^ 1); }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

 private:
  explicit Lit(int code) : code_(code) {}
  std::int32_t code_ = 0;  // 2 * var + (negative ? 1 : 0); 0 = invalid
};

// Literal order inside a clause is significant and preserved everywhere.
using Clause = std::vector<Lit>;

struct Formula {
  int var_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Formula&, const Formula&) = default;
};

enum class Value : std::uint8_t { kFalse, kTrue, kUnassigned };

inline Value negate(Value v) {
  if (v == Value::kUnassigned) return v;
  return v == Value::kTrue ? Value::kFalse : Value::kTrue;
}

// Total or partial assignment over the variables of one formula.
struct Assignment {
  Assignment() = default;
  explicit Assignment(int var_count)
      : values(static_cast<std::size_t>(var_count) + 1, Value::kUnassigned) {}

  int var_count() const { return static_cast<int>(values.size()) - 1; }
  Value value(Var v) const { return values[static_cast<std::size_t>(v)]; }
  Value value(Lit l) const {
    Value v = value(l.var());
    return l.is_positive() ? v : negate(v);
  }
  void set(Var v, Value val) { values[static_cast<std::size_t>(v)] = val; }
  void set(Lit l, bool truth) {
    set(l.var(), truth == l.is_positive() ? Value::kTrue : Value::kFalse);
  }

  std::vector<Value> values;  // index 0 unused
};

enum class Eval { kSatisfied, kFalsified, kUndetermined };

Eval evaluate_clause(const Clause& clause, const Assignment& assignment);
Eval evaluate(const Formula& formula, const Assignment& assignment);

// True if some variable occurs twice in the clause, with either polarity.
// The solver core assumes duplicate-free clauses, so such inputs are
// rejected at load.
bool has_duplicate_var(const Clause& clause);

// Throws std::invalid_argument if a literal is out of range or a clause
// mentions a variable twice (including tautologies).
void validate(const Formula& formula);

enum class Verdict { kSat, kUnsat };

struct BruteForceResult {
  Verdict verdict = Verdict::kUnsat;
  Assignment model;  // total satisfying assignment when verdict == kSat
};

inline constexpr int kBruteForceVarLimit = 26;

// Exhaustive satisfiability oracle, used as ground truth in tests. Searches
// the full assignment space in variable order with false before true, so a
// satisfiable formula yields a deterministic model. Refuses formulas above
// kBruteForceVarLimit variables.
BruteForceResult brute_force_sat(const Formula& formula);

std::string to_string(Lit l);
std::string to_string(const Clause& c);

}  // namespace opsat
