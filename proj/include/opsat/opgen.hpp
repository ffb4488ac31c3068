#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {

// Bijective mapping between the n(n-1) ordering-principle variables P(i,j)
// (row i, column j, i != j) and 1-based solver variables, laid out in
// column-major order: P(2,1), ..., P(n,1), P(1,2), ..., P(n,2), ...,
// P(1,n), ..., P(n-1,n). Smaller variable index therefore means earlier in
// the tie-break order.
class OpCodec {
 public:
  explicit OpCodec(int n);  // n >= 2

  int n() const { return n_; }
  int var_count() const { return n_ * (n_ - 1); }

  Var encode(int row, int column) const;
  std::pair<int, int> decode(Var v) const;  // (row, column)

 private:
  int n_;
};

// The variables of one column in ascending row order, skipping the diagonal.
// Always has n-1 entries; for column 1 the first entry encodes P(2,1).
struct OrderedLiteralSequence {
  int column = 0;
  std::vector<Var> vars;
};

OrderedLiteralSequence ordered_literal_sequence(const OpCodec& codec,
                                                int column);

// C(column, length): the positive disjunction of the first `length`
// variables of the column's sequence, 1 <= length <= n-1.
Clause prefix_clause(const OpCodec& codec, int column, int length);

// Identifies a prefix clause by its coordinates.
struct PrefixRef {
  int column = 0;
  int length = 0;

  friend bool operator==(const PrefixRef&, const PrefixRef&) = default;
};

// The ordering principle instance over n elements: transitivity clauses
// A(i,j,k) = -P(i,j) v -P(j,k) v P(i,k) in lexicographic (i,j,k) order over
// distinct triples, then antisymmetry B(i,j) = -P(i,j) v -P(j,i) once per
// unordered pair with i < j, then non-minimality D(j) = OR_i P(i,j) for
// j = 1..n with rows ascending. Clause counts are n(n-1)(n-2), n(n-1)/2,
// and n. Unsatisfiable for every n >= 2.
Formula generate_op(int n);

// Symbolic name of the clause at `original_index` in generate_op(n)'s
// output: "A(i,j,k)", "B(i,j)" or "D(j)".
std::string op_clause_symbol(const OpCodec& codec, int original_index);

// Matches a clause against the prefix-clause family by literal set; returns
// its coordinates if it is some C(j,k).
std::optional<PrefixRef> match_prefix_clause(const OpCodec& codec,
                                             const Clause& clause);

// Returns n if the formula is structurally identical to generate_op(n).
std::optional<int> detect_op_instance(const Formula& formula);

}  // namespace opsat
