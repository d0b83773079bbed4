#pragma once

#include <string>
#include <vector>

#include "ldst/edge_dfs.hpp"
#include "ldst/graph.hpp"
#include "ldst/tree_builder.hpp"

namespace ldst {

bool is_connected(const Graph& g);

// Sorted ids of all bridge edges, via one iterative low-link DFS. The edge
// used to enter a vertex is skipped by id, not by endpoint, so parallel
// edges are never reported as bridges.
std::vector<int> find_bridges(const Graph& g);

// Connected, n >= 2, and bridgeless.
bool is_two_edge_connected(const Graph& g);

// Number of edges with exactly one endpoint in `subset`. The subset must be
// a nonempty proper subset of the vertices, without duplicates. On a
// 2-edge-connected graph the result is always >= 2.
int check_partition_cut(const Graph& g, const std::vector<int>& subset);

struct TreeValidation {
  bool ok = true;
  std::string reason;
};

// Structural check: n-1 distinct valid edge ids, acyclic (hence spanning and
// connected), deg_t consistent, and, when parent links are present, every
// vertex reaches the root through them.
TreeValidation validate_spanning_tree(const Graph& g, const SpanningTree& t);

struct OrientationStats {
  std::vector<int> in_count;
  std::vector<int> out_count;
  std::vector<char> balanced_ok;
  bool all_balanced = true;
};

// Per-vertex head/tail counts of a validated list. A vertex is balanced when
// in <= out + 1 for odd degree and in <= out for even degree.
OrientationStats orientation_stats(const Graph& g, const EdgeDfsList& list);

struct DegreeRow {
  int vertex;
  int deg_g;
  int deg_t;
  int bound;  // ceil(deg_g/2) + 1
  int slack;  // bound - deg_t
};

struct DegreeReport {
  std::vector<DegreeRow> rows;
  int worst_slack = 0;
  bool ok = true;
};

// Validates the tree, then reports per-vertex degrees against the budget.
DegreeReport check_degree_bound(const Graph& g, const SpanningTree& t);

// Experimental: whether the orientation induced by the list (each item an
// arc tail->head) is strongly connected. Observed to hold for computed
// traversals of 2-edge-connected graphs; not a guaranteed invariant.
bool orientation_strongly_connected(const Graph& g, const EdgeDfsList& list);

}  // namespace ldst
