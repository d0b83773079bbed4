#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldst {

struct BenchRow {
  int n;
  int m;
  std::uint64_t seed;
  std::int64_t t_dfs_ns;
  std::int64_t t_build_ns;
  std::int64_t t_total_ns;
  std::int64_t enqueues;  // 2m on every row
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<double> slope;  // log-log slope of t_total vs m; needs >= 2 rows
  std::vector<std::string> row_errors;
};

// For each edge target m: generate a random 2-edge-connected graph with
// n = m/3 and extra = m - n, then time the traversal and the build `reps`
// times and keep medians. Generation is excluded from the timings; rows that
// fail to allocate are skipped and reported in row_errors.
BenchReport run_bench(const std::vector<int>& edge_targets, std::uint64_t seed, int reps);

std::string bench_csv(const BenchReport& report);

}  // namespace ldst
