#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldst/graph.hpp"

namespace ldst {

// One directed traversal step: `edge` traversed from tail to head.
struct TraversalItem {
  int tail;
  int head;
  int edge;

  friend bool operator==(const TraversalItem&, const TraversalItem&) = default;
};

// An edge DFS: an ordering of all edges as directed items such that after
// each item the traversal continues from the current head if it still has
// untraversed incident edges, and otherwise resumes from the latest earlier
// head that does.
struct EdgeDfsList {
  std::vector<TraversalItem> items;
  int start_vertex = 0;
};

// Work counters for the linear-time contract.
struct DfsStats {
  std::int64_t cursor_advances = 0;
  std::int64_t stack_pops = 0;
};

// Deterministic edge DFS: among untraversed incident edges the one at the
// lowest adjacency position is taken. Fails if the traversal cannot cover
// every edge (disconnected input, or the start vertex's residual edges
// become unreachable under the backtracking rule).
EdgeDfsList compute_edge_dfs(const Graph& g, int start, DfsStats* stats = nullptr);

enum class DfsViolation {
  none,
  item_endpoints,  // an item is not an orientation of its own edge
  coverage,        // an edge repeated or missing
  traversal,       // cross/backtrack rule broken
};

struct DfsValidation {
  bool ok = true;
  DfsViolation violation = DfsViolation::none;
  std::size_t index = 0;  // offending item, 0-based
  std::string detail;
};

// Total check of an arbitrary candidate list; violations are results, not
// exceptions.
DfsValidation validate_edge_dfs(const Graph& g, const EdgeDfsList& list);

enum class StepKind : std::uint8_t { cross, backtrack };

struct StepClassification {
  std::vector<StepKind> steps;      // steps[i]: transition from item i to i+1
  std::vector<int> final_vertices;  // sorted, deduplicated
};

// Labels each consecutive pair of items and collects final vertices (heads
// immediately before a backtrack, plus the last head). Expects a list that
// validates.
StepClassification classify_steps(const EdgeDfsList& list);

}  // namespace ldst
