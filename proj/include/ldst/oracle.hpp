#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ldst/graph.hpp"

namespace ldst {

// FNV-1a of the canonical serialization, as 16 hex digits.
std::string graph_hash_hex(const Graph& g);

// Matrix-tree count via fraction-free integer elimination of the reduced
// Laplacian (parallel edges contribute multiplicity). Exact; throws
// std::overflow_error if the count does not fit in 64 bits. n <= 64.
std::uint64_t count_spanning_trees(const Graph& g);

// Emits every spanning tree exactly once as a vector of edge ids (edge-subset
// identity: parallel edges yield distinct trees). Guarded: n <= 12 and
// count <= 1e7.
void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<int>&)>& emit);

struct OracleVerdict {
  std::string graph_hash;
  std::uint64_t trees_enumerated = 0;
  // max over trees of the minimum per-vertex slack; absent if no tree exists
  std::optional<int> best_worst_slack;
  // worst slack of the tree the main algorithm builds; absent when the input
  // is not 2-edge-connected
  std::optional<int> algorithm_worst_slack;
  bool theorem_holds = false;  // some tree has every slack >= 0
};

// Full enumeration verdict for one instance, independent of the main
// algorithm's path except for the algorithm_worst_slack column.
OracleVerdict oracle_check(const Graph& g);

struct SweepSummary {
  int max_n = 0;
  std::uint64_t edge_subsets_examined = 0;
  int graphs_processed = 0;  // 2-edge-connected graphs fully checked
  std::uint64_t starts_checked = 0;
  int failures = 0;  // always 0: any failure aborts with the graph serialized
};

// Every simple graph on 2..max_n vertices (edge-subset bitmask), filtered to
// 2-edge-connected ones. For each: all spanning trees are enumerated and the
// existence of a budget-respecting tree asserted; then, from every start
// vertex, the edge DFS is computed and validated, orientation balance
// checked, the tree built in checked mode, validated, degree-bounded, the
// queue accounting verified, and the tree matched against the enumerated
// set. max_n <= 6.
SweepSummary exhaustive_small_sweep(
    int max_n,
    const std::function<void(const Graph&, const OracleVerdict&)>& per_graph = {});

}  // namespace ldst
