#pragma once

#include <cstdint>
#include <vector>

#include "ldst/edge_dfs.hpp"
#include "ldst/graph.hpp"

namespace ldst {

struct SpanningTree {
  int root = 0;
  std::vector<int> tree_edges;     // edge ids, in addition order
  std::vector<int> parent_vertex;  // -1 for the root
  std::vector<int> parent_edge;    // -1 for the root
  std::vector<int> deg_t;
};

struct TreeAddition {
  int item_index;  // position in the traversal list
  int edge;
  int new_vertex;
};

struct BuilderTrace {
  std::vector<TreeAddition> additions;
  std::int64_t enqueue_count = 0;  // 2m on every completed run
  std::int64_t dequeue_count = 0;
};

struct BuildResult {
  SpanningTree tree;
  BuilderTrace trace;
};

// Grows the tree from `root` by scanning a FIFO queue of traversal items:
// dequeue (u,v); if u is outside the tree and v inside, the edge joins the
// tree and every item touching u is enqueued; otherwise the item is
// discarded. Expects a validated list on a 2-edge-connected graph; a drained
// queue short of n vertices raises QueueExhaustedError. `checked` turns on
// per-step invariant assertions (acyclicity, discard safety) and validates
// the list first.
BuildResult build_spanning_tree(const Graph& g, const EdgeDfsList& list, int root,
                                bool checked = false);

}  // namespace ldst
