#pragma once

#include <cstdint>

#include "opsat/cnf.hpp"

namespace opsat {

struct DpllStats {
  Verdict verdict = Verdict::kUnsat;
  std::int64_t node_count = 0;  // decisions explored, both branches
  int max_depth = 0;
};

// Reference DPLL: chronological backtracking with unit propagation and no
// learning. Branches on the lowest-index unassigned variable, false branch
// first, so node counts are deterministic and, on ordering-principle
// instances, the branching order equals the solver's column-major
// tie-break. Used to measure how far plain tree search falls behind clause
// learning.
DpllStats solve_dpll(const Formula& formula);

}  // namespace opsat
