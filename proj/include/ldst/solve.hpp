#pragma once

#include <optional>

#include "ldst/graph.hpp"
#include "ldst/tree_builder.hpp"
#include "ldst/verify.hpp"

namespace ldst {

struct SolveOptions {
  int start = 0;
  std::optional<int> root;  // defaults to start
  bool force = false;       // skip the 2-edge-connectivity check
  bool checked = false;     // per-step invariant assertions in the builder
};

struct LowDegreeResult {
  SpanningTree tree;
  DegreeReport report;
  bool trivial = false;  // n == 1: single-vertex tree, nothing to build
};

// End-to-end: verify 2-edge-connectivity (unless forced), compute the edge
// DFS from `start`, build the tree, and certify deg_T(v) <= ceil(deg(v)/2)+1
// for every vertex.
LowDegreeResult low_degree_spanning_tree(const Graph& g, const SolveOptions& opts = {});

}  // namespace ldst
