#include "opsat/proofs.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace opsat {

RupChecker::RupChecker(const Formula& context)
    : var_count_(context.var_count),
      occurrences_(2 * (static_cast<std::size_t>(context.var_count) + 1)),
      values_(static_cast<std::size_t>(context.var_count) + 1,
              Value::kUnassigned) {
  for (const Clause& c : context.clauses) add_clause(c);
}

void RupChecker::add_clause(const Clause& clause) {
  int id = static_cast<int>(clauses_.size());
  clauses_.push_back(clause);
  false_count_.push_back(0);
  true_count_.push_back(0);
  if (clause.empty()) has_empty_clause_ = true;
  if (clause.size() == 1) unit_at_rest_.push_back(id);
  for (Lit l : clause) occurrences_[static_cast<std::size_t>(l.index())].push_back(id);
}

// Applies the assignment and queues clauses this turns into units. Returns
// false if some clause loses its last non-false literal.
bool RupChecker::assign(Lit l, std::vector<int>& unit_queue) {
  values_[static_cast<std::size_t>(l.var())] =
      l.is_positive() ? Value::kTrue : Value::kFalse;
  trail_.push_back(l);
  for (int ci : occurrences_[static_cast<std::size_t>(l.index())])
    ++true_count_[static_cast<std::size_t>(ci)];
  bool ok = true;
  for (int ci : occurrences_[static_cast<std::size_t>((-l).index())]) {
    int fc = ++false_count_[static_cast<std::size_t>(ci)];
    if (true_count_[static_cast<std::size_t>(ci)] > 0) continue;
    int size = static_cast<int>(clauses_[static_cast<std::size_t>(ci)].size());
    if (fc == size)
      ok = false;
    else if (fc == size - 1)
      unit_queue.push_back(ci);
  }
  return ok;
}

void RupChecker::undo_all() {
  for (auto it = trail_.rbegin(); it != trail_.rend(); ++it) {
    Lit l = *it;
    values_[static_cast<std::size_t>(l.var())] = Value::kUnassigned;
    for (int ci : occurrences_[static_cast<std::size_t>(l.index())])
      --true_count_[static_cast<std::size_t>(ci)];
    for (int ci : occurrences_[static_cast<std::size_t>((-l).index())])
      --false_count_[static_cast<std::size_t>(ci)];
  }
  trail_.clear();
}

bool RupChecker::check(const Clause& clause) {
  if (has_empty_clause_) return true;
  bool conflict = false;
  std::vector<int> unit_queue = unit_at_rest_;

  // Assert the clause's negation.
  for (Lit l : clause) {
    if (conflict) break;
    switch (values_[static_cast<std::size_t>(l.var())]) {
      case Value::kUnassigned:
        if (!assign(-l, unit_queue)) conflict = true;
        break;
      case Value::kTrue:
      case Value::kFalse:
        // Repeated variable among the negated literals: a tautologous
        // candidate clause is trivially RUP, a duplicate literal changes
        // nothing.
        if (values_[static_cast<std::size_t>(l.var())] ==
            (l.is_positive() ? Value::kTrue : Value::kFalse))
          conflict = true;
        break;
    }
  }

  // Unit propagation to fixpoint, FIFO over the queued clauses.
  for (std::size_t qhead = 0; !conflict && qhead < unit_queue.size(); ++qhead) {
    const std::size_t ci = static_cast<std::size_t>(unit_queue[qhead]);
    const Clause& c = clauses_[ci];
    if (true_count_[ci] > 0) continue;
    if (false_count_[ci] == static_cast<int>(c.size())) {
      conflict = true;  // falsified while waiting in the queue
      break;
    }
    for (Lit l : c) {
      if (values_[static_cast<std::size_t>(l.var())] == Value::kUnassigned) {
        if (!assign(l, unit_queue)) conflict = true;
        break;
      }
    }
  }

  undo_all();
  return conflict;
}

bool check_rup(const Clause& clause, const Formula& context) {
  RupChecker checker(context);
  return checker.check(clause);
}

ProofLog ProofLog::from_result(const Result& result) {
  ProofLog log;
  log.additions = result.learned;
  for (const ConflictRecord& r : result.records)
    log.conflict_indices.push_back(r.conflict_index);
  return log;
}

std::string export_drat(const ProofLog& log) {
  std::string out;
  for (const Clause& c : log.additions) {
    for (Lit l : c) {
      out += std::to_string(l.to_dimacs());
      out += ' ';
    }
    out += "0\n";
  }
  out += "0\n";
  return out;
}

std::string export_drat(const Result& result) {
  if (result.verdict != Verdict::kUnsat)
    throw std::logic_error("export_drat: run did not end unsatisfiable");
  return export_drat(ProofLog::from_result(result));
}

ImplicationGraphSnapshot snapshot_conflict(const Trail& trail,
                                           const ClauseDb& db,
                                           int conflict_ref,
                                           std::optional<Lit> uip) {
  ImplicationGraphSnapshot snapshot;
  snapshot.conflict_clause = conflict_ref;

  // Collect the conflict's ancestors through reason edges.
  std::vector<char> visited(static_cast<std::size_t>(trail.var_count()) + 1, 0);
  std::vector<Var> stack;
  for (Lit l : db[conflict_ref]) stack.push_back(l.var());
  while (!stack.empty()) {
    Var v = stack.back();
    stack.pop_back();
    if (visited[static_cast<std::size_t>(v)]) continue;
    visited[static_cast<std::size_t>(v)] = 1;
    int reason = trail.reason(v);
    if (reason == kNoReason) continue;
    for (Lit q : db[reason])
      if (q.var() != v) stack.push_back(q.var());
  }

  // Nodes in trail order, so output is deterministic and reads like the run.
  std::vector<int> node_of(static_cast<std::size_t>(trail.var_count()) + 1, -1);
  for (int i = 0; i < trail.size(); ++i) {
    Var v = trail[i].lit.var();
    if (!visited[static_cast<std::size_t>(v)]) continue;
    node_of[static_cast<std::size_t>(v)] =
        static_cast<int>(snapshot.nodes.size());
    snapshot.nodes.push_back({trail[i].lit, trail[i].level});
  }

  // In-edges per implied node, then the conflict clause's edges.
  for (std::size_t ni = 0; ni < snapshot.nodes.size(); ++ni) {
    const SnapshotNode& node = snapshot.nodes[ni];
    int reason = trail.reason(node.lit.var());
    if (reason == kNoReason) continue;
    for (Lit q : db[reason]) {
      if (q.var() == node.lit.var()) continue;
      snapshot.edges.push_back(
          {node_of[static_cast<std::size_t>(q.var())], static_cast<int>(ni),
           reason});
    }
  }
  for (Lit q : db[conflict_ref])
    snapshot.edges.push_back({node_of[static_cast<std::size_t>(q.var())],
                              kConflictNode, conflict_ref});

  snapshot.reason_side.assign(snapshot.nodes.size(), false);
  if (uip) {
    snapshot.uip_node = node_of[static_cast<std::size_t>(uip->var())];
    // Reason side: the UIP, everything before it on the trail, and all
    // lower levels. Conflict side: conflict-level nodes past the UIP.
    int uip_pos = trail.position(uip->var());
    int conflict_level = trail[trail.size() - 1].level;
    for (std::size_t ni = 0; ni < snapshot.nodes.size(); ++ni) {
      const SnapshotNode& node = snapshot.nodes[ni];
      snapshot.reason_side[ni] = node.level < conflict_level ||
                                 trail.position(node.lit.var()) <= uip_pos;
    }
  }
  return snapshot;
}

namespace {

std::string lit_label(Lit l, const DotOptions& options) {
  std::string sign = l.is_positive() ? "" : "-";
  if (options.codec) {
    auto [row, column] = options.codec->decode(l.var());
    return sign + "P_{" + std::to_string(row) + "," + std::to_string(column) +
           "}";
  }
  return sign + "x" + std::to_string(l.var());
}

std::string clause_label(int ref, const DotOptions& options) {
  if (!options.codec) return "#" + std::to_string(ref);
  if (ref < options.original_count)
    return op_clause_symbol(*options.codec, ref);
  int li = ref - options.original_count;
  if (li < static_cast<int>(options.learned.size())) {
    if (auto prefix = match_prefix_clause(*options.codec,
                                          options.learned[li]))
      return "C(" + std::to_string(prefix->column) + "," +
             std::to_string(prefix->length) + ")";
  }
  return "L" + std::to_string(li + 1);
}

}  // namespace

std::string export_dot(const ImplicationGraphSnapshot& snapshot,
                       const DotOptions& options) {
  std::string out = "digraph implication_graph {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=box];\n";
  for (std::size_t ni = 0; ni < snapshot.nodes.size(); ++ni) {
    const SnapshotNode& node = snapshot.nodes[ni];
    out += "  n" + std::to_string(ni) + " [label=\"" +
           lit_label(node.lit, options) + "@" + std::to_string(node.level) +
           "\"";
    if (static_cast<int>(ni) == snapshot.uip_node)
      out += ", color=red, penwidth=2";
    out += "];\n";
  }
  out += "  conflict [label=\"CONFLICT\", shape=octagon];\n";
  if (snapshot.uip_node >= 0) {
    out += "  subgraph cluster_reason_side {\n";
    out += "    style=dashed;\n    color=red;\n    label=\"1UIP cut\";\n";
    for (std::size_t ni = 0; ni < snapshot.nodes.size(); ++ni)
      if (snapshot.reason_side[ni]) out += "    n" + std::to_string(ni) + ";\n";
    out += "  }\n";
  }
  for (const SnapshotEdge& e : snapshot.edges) {
    out += "  n" + std::to_string(e.from) + " -> ";
    out += e.to == kConflictNode ? "conflict" : "n" + std::to_string(e.to);
    out += " [label=\"" + clause_label(e.reason, options) + "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

nlohmann::json base_event(const char* kind, int level) {
  nlohmann::json j;
  j["kind"] = kind;
  j["level"] = level;
  j["literal"] = nullptr;
  j["reason"] = nullptr;
  j["conflict_index"] = nullptr;
  return j;
}

}  // namespace

void JsonTraceWriter::on_decision(Lit decision, int level) {
  nlohmann::json j = base_event("decision", level);
  j["literal"] = decision.to_dimacs();
  out_ << j.dump() << '\n';
}

void JsonTraceWriter::on_propagation(Lit implied, int level, int reason) {
  nlohmann::json j = base_event("propagation", level);
  j["literal"] = implied.to_dimacs();
  j["reason"] = reason;
  out_ << j.dump() << '\n';
}

void JsonTraceWriter::on_conflict(int clause, int level, int conflict_index) {
  nlohmann::json j = base_event("conflict", level);
  j["reason"] = clause;
  j["conflict_index"] = conflict_index;
  out_ << j.dump() << '\n';
}

}  // namespace opsat
