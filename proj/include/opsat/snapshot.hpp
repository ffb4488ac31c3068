#pragma once

#include <vector>

#include "opsat/cnf.hpp"

namespace opsat {

// Pseudo node index used as the target of conflict-clause edges.
inline constexpr int kConflictNode = -1;

struct SnapshotNode {
  Lit lit;        // the literal as assigned on the trail
  int level = 0;
};

struct SnapshotEdge {
  int from = 0;        // node index
  int to = 0;          // node index or kConflictNode
  int reason = 0;      // clause reference labelling the edge
};

// Implication graph at conflict time, restricted to the conflict's
// ancestors through reason edges (implied-but-unpropagated literals do not
// appear). Every non-decision node's in-edges come from exactly one reason
// clause whose other literals are all predecessor nodes.
struct ImplicationGraphSnapshot {
  std::vector<SnapshotNode> nodes;  // in trail order
  std::vector<SnapshotEdge> edges;
  int conflict_clause = -1;         // clause reference
  int uip_node = -1;                // node index, -1 for level-0 conflicts
  // The first-UIP cut: true marks the reason side (the UIP itself, every
  // node before it on the trail, and all lower levels).
  std::vector<bool> reason_side;
};

}  // namespace opsat
