#include "ldst/edge_dfs.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "hugepage.hpp"
#include "ldst/errors.hpp"

namespace ldst {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(what) + " out of range");
}

}  // namespace

namespace {

// per-vertex adjacency window: next scan position and row end in the CSR
struct RowCursor {
  int next;
  int end;
};

}  // namespace

EdgeDfsList compute_edge_dfs(const Graph& g, int start, DfsStats* stats) {
  check_vertex(g, start, "start vertex");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m == 0) throw PreconditionError("edge DFS undefined on an empty edge set");

  EdgeDfsList list;
  list.start_vertex = start;
  list.items.reserve(static_cast<std::size_t>(m));

  const int* offsets = g.row_offsets().data();
  const AdjEntry* entries = g.all_entries().data();

  detail::HugeBuffer<RowCursor> cursor(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cursor[v] = {offsets[v], offsets[v + 1]};

  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  detail::HugeBuffer<std::uint64_t> traversed(words);
  for (std::size_t w = 0; w < words; ++w) traversed[w] = 0;
  auto is_traversed = [&](int e) {
    return (traversed[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1;
  };

  // Arrival heads, one push per item. Exhausted heads are popped lazily, so
  // the live top is always the latest arrival that still has an untraversed
  // incident edge.
  detail::HugeBuffer<int> arrivals(static_cast<std::size_t>(m));
  std::size_t arrivals_top = 0;

  std::int64_t advances = 0;
  std::int64_t pops = 0;

  // scans the row window forward over traversed edges; returns scan position
  auto scan = [&](RowCursor& rc) {
    int p = rc.next;
    while (p < rc.end && is_traversed(entries[p].edge)) {
      ++p;
      ++advances;
    }
    rc.next = p;
    return p;
  };

  int current = start;
  int produced = 0;
  while (produced < m) {
    RowCursor& rc = cursor[current];
    const int p = scan(rc);
    if (p < rc.end) {
      const AdjEntry entry = entries[p];
      rc.next = p + 1;
      ++advances;
      traversed[static_cast<std::size_t>(entry.edge) >> 6] |= std::uint64_t{1}
                                                              << (entry.edge & 63);
      list.items.push_back({current, entry.neighbor, entry.edge});
      arrivals[arrivals_top++] = entry.neighbor;
      ++produced;
      current = entry.neighbor;
      continue;
    }
    int resume = -1;
    while (arrivals_top > 0) {
      const int head = arrivals[arrivals_top - 1];
      RowCursor& hc = cursor[head];
      if (scan(hc) < hc.end) {
        resume = head;
        break;
      }
      --arrivals_top;
      ++pops;
    }
    if (resume < 0) {
      std::ostringstream msg;
      msg << "edge DFS stuck after " << list.items.size() << " of " << m
          << " edges; the graph is disconnected or the remaining edges are "
             "unreachable from start vertex "
          << start;
      throw PreconditionError(msg.str());
    }
    current = resume;
  }

  if (stats) {
    stats->cursor_advances = advances;
    stats->stack_pops = pops;
  }
  return list;
}

DfsValidation validate_edge_dfs(const Graph& g, const EdgeDfsList& list) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto& items = list.items;

  auto fail = [](DfsViolation which, std::size_t index, std::string detail) {
    return DfsValidation{false, which, index, std::move(detail)};
  };

  // an item must be an orientation of its own edge
  for (std::size_t i = 0; i < items.size(); ++i) {
    const TraversalItem& it = items[i];
    if (it.edge < 0 || it.edge >= m || it.tail < 0 || it.tail >= n || it.head < 0 ||
        it.head >= n)
      return fail(DfsViolation::item_endpoints, i, "item references ids outside the graph");
    const auto [a, b] = g.edge(it.edge);
    const bool matches = (it.tail == a && it.head == b) || (it.tail == b && it.head == a);
    if (!matches)
      return fail(DfsViolation::item_endpoints, i,
                  "item endpoints {" + std::to_string(it.tail) + ", " +
                      std::to_string(it.head) + "} do not match edge " +
                      std::to_string(it.edge));
  }
  if (!items.empty() && list.start_vertex != items.front().tail)
    return fail(DfsViolation::item_endpoints, 0,
                "start_vertex does not match the first item's tail");

  // every edge exactly once
  std::vector<char> seen(m, 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (seen[items[i].edge])
      return fail(DfsViolation::coverage, i,
                  "edge " + std::to_string(items[i].edge) + " traversed twice");
    seen[items[i].edge] = 1;
  }
  if (static_cast<int>(items.size()) != m) {
    int missing = -1;
    for (int e = 0; e < m; ++e)
      if (!seen[e]) {
        missing = e;
        break;
      }
    return fail(DfsViolation::coverage, items.size(),
                "edge " + std::to_string(missing) + " never traversed");
  }

  // cross while the current head has untraversed edges, otherwise backtrack
  // to the latest earlier head that does
  std::vector<int> untraversed(n);
  for (int v = 0; v < n; ++v) untraversed[v] = g.degree(v);
  std::vector<int> arrivals;
  arrivals.reserve(items.size());
  for (std::size_t j = 0; j < items.size(); ++j) {
    const TraversalItem& it = items[j];
    --untraversed[it.tail];
    --untraversed[it.head];
    arrivals.push_back(static_cast<int>(j));
    if (j + 1 == items.size()) break;
    const TraversalItem& next = items[j + 1];
    if (untraversed[it.head] > 0) {
      if (next.tail != it.head)
        return fail(DfsViolation::traversal, j + 1,
                    "vertex " + std::to_string(it.head) +
                        " still has untraversed edges, but the next tail is " +
                        std::to_string(next.tail));
    } else {
      while (!arrivals.empty() && untraversed[items[arrivals.back()].head] == 0)
        arrivals.pop_back();
      if (arrivals.empty())
        return fail(DfsViolation::traversal, j + 1,
                    "no earlier arrival has untraversed edges to backtrack to");
      const int target = items[arrivals.back()].head;
      if (next.tail != target)
        return fail(DfsViolation::traversal, j + 1,
                    "backtrack must resume at vertex " + std::to_string(target) +
                        ", but the next tail is " + std::to_string(next.tail));
    }
  }
  return {};
}

StepClassification classify_steps(const EdgeDfsList& list) {
  if (list.items.empty()) throw std::invalid_argument("cannot classify an empty traversal");
  const auto& items = list.items;
  StepClassification out;
  out.steps.reserve(items.size() - 1);
  for (std::size_t i = 0; i + 1 < items.size(); ++i) {
    const bool cross = items[i].head == items[i + 1].tail;
    out.steps.push_back(cross ? StepKind::cross : StepKind::backtrack);
    if (!cross) out.final_vertices.push_back(items[i].head);
  }
  out.final_vertices.push_back(items.back().head);
  std::sort(out.final_vertices.begin(), out.final_vertices.end());
  out.final_vertices.erase(std::unique(out.final_vertices.begin(), out.final_vertices.end()),
                           out.final_vertices.end());
  return out;
}

}  // namespace ldst
