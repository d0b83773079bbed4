#pragma once

#include <string>
#include <string_view>

#include "ldst/edge_dfs.hpp"
#include "ldst/tree_builder.hpp"
#include "ldst/verify.hpp"

namespace ldst {

// Tree text format: header `t <root> <n>`, then n-1 lines `e <u> <v>
// <edge-id>` in addition order (u is the vertex the edge attached), then
// `c degrees:` followed by one `d <v> <deg_T> <bound>` line per vertex.
std::string serialize_tree(const SpanningTree& tree, const DegreeReport& report);

// Reads the `t` header and `e` lines back against a known graph; `c` and `d`
// lines are skipped. Degrees are recomputed from the edges.
SpanningTree parse_tree(const Graph& g, std::string_view text);

// Traversal dump: header `l <count>`, then one `<tail> <head> <edge-id>`
// line per item.
std::string serialize_dfs(const EdgeDfsList& list);

}  // namespace ldst
