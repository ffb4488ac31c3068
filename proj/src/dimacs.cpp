#include "opsat/dimacs.hpp"

#include <sstream>
#include <vector>

namespace opsat {
namespace {

bool is_comment_or_blank(const std::string& line) {
  std::size_t at = line.find_first_not_of(" \t\r");
  return at == std::string::npos || line[at] == 'c';
}

int parse_int(int line_number, const std::string& token) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_number, "expected integer, got '" + token + "'");
  }
  if (pos != token.size())
    throw ParseError(line_number, "expected integer, got '" + token + "'");
  return value;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
  std::string line;
  int line_number = 0;

  // Header: first line that is neither blank nor a comment.
  int var_count = 0, clause_count = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError(line_number + 1, "missing 'p cnf' header");
    ++line_number;
    if (is_comment_or_blank(line)) continue;
    std::istringstream header(line);
    std::string p, cnf, extra;
    if (!(header >> p >> cnf) || p != "p" || cnf != "cnf")
      throw ParseError(line_number, "malformed header: expected 'p cnf'");
    std::string vars_token, clauses_token;
    if (!(header >> vars_token >> clauses_token))
      throw ParseError(line_number, "malformed header: missing counts");
    var_count = parse_int(line_number, vars_token);
    clause_count = parse_int(line_number, clauses_token);
    if (var_count < 0 || clause_count < 0)
      throw ParseError(line_number, "malformed header: negative count");
    if (header >> extra)
      throw ParseError(line_number, "malformed header: trailing '" + extra +
                                        "'");
    break;
  }

  Formula formula;
  formula.var_count = var_count;
  Clause current;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_comment_or_blank(line)) continue;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      int value = parse_int(line_number, token);
      if (value == 0) {
        if (has_duplicate_var(current))
          throw ParseError(line_number, "clause contains a variable twice");
        formula.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (value > var_count || value < -var_count)
          throw ParseError(line_number, "literal out of range: " + token);
        current.push_back(Lit::from_dimacs(value));
      }
    }
  }
  if (!current.empty())
    throw ParseError(line_number, "clause missing terminating 0");
  if (static_cast<int>(formula.clauses.size()) != clause_count)
    throw ParseError(line_number,
                     "header declares " + std::to_string(clause_count) +
                         " clauses, found " +
                         std::to_string(formula.clauses.size()));
  return formula;
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string emit_dimacs(const Formula& formula) {
  std::string out = "p cnf " + std::to_string(formula.var_count) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const Clause& c : formula.clauses) {
    for (Lit l : c) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

}  // namespace opsat
