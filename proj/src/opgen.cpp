#include "opsat/opgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace opsat {

OpCodec::OpCodec(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("OpCodec: n must be at least 2");
}

Var OpCodec::encode(int row, int column) const {
  if (row < 1 || row > n_ || column < 1 || column > n_ || row == column)
    throw std::invalid_argument("OpCodec::encode: invalid (row, column)");
  int rank = row < column ? row : row - 1;
  return (column - 1) * (n_ - 1) + rank;
}

std::pair<int, int> OpCodec::decode(Var v) const {
  if (v < 1 || v > var_count())
    throw std::invalid_argument("OpCodec::decode: variable out of range");
  int column = (v - 1) / (n_ - 1) + 1;
  int rank = (v - 1) % (n_ - 1) + 1;
  int row = rank < column ? rank : rank + 1;
  return {row, column};
}

OrderedLiteralSequence ordered_literal_sequence(const OpCodec& codec,
                                                int column) {
  if (column < 1 || column > codec.n())
    throw std::invalid_argument("ordered_literal_sequence: column out of range");
  OrderedLiteralSequence seq;
  seq.column = column;
  seq.vars.reserve(codec.n() - 1);
  for (int row = 1; row <= codec.n(); ++row)
    if (row != column) seq.vars.push_back(codec.encode(row, column));
  return seq;
}

Clause prefix_clause(const OpCodec& codec, int column, int length) {
  if (length < 1 || length > codec.n() - 1)
    throw std::invalid_argument("prefix_clause: length out of range");
  OrderedLiteralSequence seq = ordered_literal_sequence(codec, column);
  Clause c;
  c.reserve(length);
  for (int k = 0; k < length; ++k) c.push_back(Lit::positive(seq.vars[k]));
  return c;
}

Formula generate_op(int n) {
  if (n < 2) throw std::invalid_argument("generate_op: n must be at least 2");
  OpCodec codec(n);
  Formula f;
  f.var_count = codec.var_count();
  f.clauses.reserve(n * (n - 1) * (n - 2) + n * (n - 1) / 2 + n);

  // Transitivity.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        f.clauses.push_back({Lit::negative(codec.encode(i, j)),
                             Lit::negative(codec.encode(j, k)),
                             Lit::positive(codec.encode(i, k))});
      }
    }
  // Antisymmetry, once per unordered pair.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      f.clauses.push_back({Lit::negative(codec.encode(i, j)),
                           Lit::negative(codec.encode(j, i))});
  // Non-minimality.
  for (int j = 1; j <= n; ++j) {
    Clause d;
    d.reserve(n - 1);
    for (int i = 1; i <= n; ++i)
      if (i != j) d.push_back(Lit::positive(codec.encode(i, j)));
    f.clauses.push_back(std::move(d));
  }
  return f;
}

std::string op_clause_symbol(const OpCodec& codec, int original_index) {
  const int n = codec.n();
  const int a_count = n * (n - 1) * (n - 2);
  const int b_count = n * (n - 1) / 2;
  if (original_index < 0 || original_index >= a_count + b_count + n)
    throw std::invalid_argument("op_clause_symbol: index out of range");

  if (original_index < a_count) {
    int per_i = (n - 1) * (n - 2);
    int i = original_index / per_i + 1;
    int rem = original_index % per_i;
    int jpos = rem / (n - 2);  // 0-based among columns != i
    int kpos = rem % (n - 2);
    int j = jpos + 1 + (jpos + 1 >= i ? 1 : 0);
    int k = 0, seen = 0;
    for (int cand = 1; cand <= n; ++cand) {
      if (cand == i || cand == j) continue;
      if (seen++ == kpos) {
        k = cand;
        break;
      }
    }
    return "A(" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")";
  }
  int rem = original_index - a_count;
  if (rem < b_count) {
    for (int i = 1; i <= n; ++i) {
      int row_pairs = n - i;
      if (rem < row_pairs)
        return "B(" + std::to_string(i) + "," + std::to_string(i + 1 + rem) +
               ")";
      rem -= row_pairs;
    }
  }
  return "D(" + std::to_string(rem - b_count + 1) + ")";
}

std::optional<PrefixRef> match_prefix_clause(const OpCodec& codec,
                                             const Clause& clause) {
  if (clause.empty() || clause.size() > static_cast<std::size_t>(codec.n() - 1))
    return std::nullopt;
  int column = 0;
  for (Lit l : clause) {
    if (!l.is_positive()) return std::nullopt;
    if (l.var() < 1 || l.var() > codec.var_count()) return std::nullopt;
    int c = codec.decode(l.var()).second;
    if (column == 0)
      column = c;
    else if (c != column)
      return std::nullopt;
  }
  Clause expected =
      prefix_clause(codec, column, static_cast<int>(clause.size()));
  Clause sorted = clause;
  std::sort(sorted.begin(), sorted.end());
  std::sort(expected.begin(), expected.end());
  if (sorted != expected) return std::nullopt;
  return PrefixRef{column, static_cast<int>(clause.size())};
}

std::optional<int> detect_op_instance(const Formula& formula) {
  // var_count = n(n-1) for some integer n >= 2.
  int n = 2;
  while (n * (n - 1) < formula.var_count) ++n;
  if (n * (n - 1) != formula.var_count || formula.var_count == 0)
    return std::nullopt;
  std::size_t expected_clauses = static_cast<std::size_t>(n) * (n - 1) * (n - 2) +
                                 static_cast<std::size_t>(n) * (n - 1) / 2 + n;
  if (formula.clauses.size() != expected_clauses) return std::nullopt;
  if (formula == generate_op(n)) return n;
  return std::nullopt;
}

}  // namespace opsat
