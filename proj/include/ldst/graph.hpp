#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldst {

struct AdjEntry {
  int neighbor;
  int edge;
};

// Undirected multigraph on vertices 0..n-1. An edge's identity is its index
// in the edge list; parallel edges are allowed, self-loops are not.
// Adjacency is a CSR layout in edge-insertion order, shared between copies.
// Immutable once constructed.
class Graph {
 public:
  Graph() : Graph(0, {}) {}
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const AdjEntry> adjacency(int v) const;
  int degree(int v) const { return static_cast<int>(adjacency(v).size()); }

  // whole-CSR views for linear-time consumers
  std::span<const int> row_offsets() const {  // n+1 entries
    return {offsets_.get(), static_cast<std::size_t>(n_) + 1};
  }
  std::span<const AdjEntry> all_entries() const {
    return {entries_.get(), 2 * edges_.size()};
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::shared_ptr<const int[]> offsets_;
  std::shared_ptr<const AdjEntry[]> entries_;
};

// Text format: header `p <n> <m>`, then one `e <u> <v>` line per edge, LF
// line endings. Lines starting with `c` are comments and may appear
// anywhere. Parse errors carry 1-based line numbers.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// ceil(deg(v)/2) + 1: the tree-degree budget of vertex v.
int degree_ceiling_bound(const Graph& g, int v);

}  // namespace ldst
