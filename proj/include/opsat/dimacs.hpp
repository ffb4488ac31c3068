#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "opsat/cnf.hpp"

namespace opsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Reads DIMACS CNF: 'c' comment lines, a "p cnf <vars> <clauses>" header,
// then zero-terminated clauses. Clause and literal order is preserved
// exactly. Throws ParseError (naming the offending line) on a malformed
// header, out-of-range literals, a clause without its terminating 0, a
// clause count that disagrees with the header, or a clause mentioning a
// variable twice.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);

// Inverse of parse_dimacs: parse_dimacs(emit_dimacs(f)) == f.
std::string emit_dimacs(const Formula& formula);

}  // namespace opsat
