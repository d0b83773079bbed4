#include "ldst/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <new>
#include <sstream>
#include <stdexcept>

#include "ldst/edge_dfs.hpp"
#include "ldst/generators.hpp"
#include "ldst/tree_builder.hpp"

namespace ldst {

namespace {

std::int64_t median_ns(std::vector<std::int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  return k % 2 == 1 ? xs[k / 2] : (xs[k / 2 - 1] + xs[k / 2]) / 2;
}

}  // namespace

BenchReport run_bench(const std::vector<int>& edge_targets, std::uint64_t seed, int reps) {
  if (edge_targets.empty()) throw std::invalid_argument("at least one edge target required");
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  for (std::size_t i = 0; i < edge_targets.size(); ++i) {
    if (edge_targets[i] < 9) throw std::invalid_argument("edge targets must be >= 9");
    if (i > 0 && edge_targets[i] <= edge_targets[i - 1])
      throw std::invalid_argument("edge targets must be strictly ascending");
  }

  using clock = std::chrono::steady_clock;
  auto ns = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
  };

  BenchReport report;
  for (const int target : edge_targets) {
    try {
      const int n = target / 3;
      const int extra = target - n;
      const Graph g = gen_random_2ec(n, extra, seed);

      std::vector<std::int64_t> dfs_ns, build_ns, total_ns;
      dfs_ns.reserve(reps);
      build_ns.reserve(reps);
      total_ns.reserve(reps);
      std::int64_t enqueues = 0;
      for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        const EdgeDfsList list = compute_edge_dfs(g, 0);
        const auto t1 = clock::now();
        const BuildResult built = build_spanning_tree(g, list, 0);
        const auto t2 = clock::now();
        dfs_ns.push_back(ns(t1 - t0));
        build_ns.push_back(ns(t2 - t1));
        total_ns.push_back(ns(t2 - t0));
        enqueues = built.trace.enqueue_count;
      }
      report.rows.push_back({n, g.edge_count(), seed, median_ns(dfs_ns),
                             median_ns(build_ns), median_ns(total_ns), enqueues});
    } catch (const std::bad_alloc&) {
      report.row_errors.push_back("m=" + std::to_string(target) + ": allocation failure");
    }
  }

  if (report.rows.size() >= 2) {
    // least-squares slope of log t_total against log m
    const std::size_t k = report.rows.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchRow& row : report.rows) {
      const double x = std::log(static_cast<double>(row.m));
      const double y = std::log(static_cast<double>(std::max<std::int64_t>(row.t_total_ns, 1)));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double denom = k * sxx - sx * sx;
    if (denom > 0) report.slope = (k * sxy - sx * sy) / denom;
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "n,m,seed,t_dfs_ns,t_build_ns,t_total_ns,enqueues\n";
  for (const BenchRow& row : report.rows)
    out << row.n << ',' << row.m << ',' << row.seed << ',' << row.t_dfs_ns << ','
        << row.t_build_ns << ',' << row.t_total_ns << ',' << row.enqueues << '\n';
  return out.str();
}

}  // namespace ldst
