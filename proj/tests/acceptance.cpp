// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-7 drive the library directly; criterion 8 runs the CLI
// binary end to end.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ldst/bench.hpp"
#include "ldst/edge_dfs.hpp"
#include "ldst/errors.hpp"
#include "ldst/generators.hpp"
#include "ldst/graph.hpp"
#include "ldst/io.hpp"
#include "ldst/oracle.hpp"
#include "ldst/solve.hpp"
#include "ldst/tree_builder.hpp"
#include "ldst/verify.hpp"
#include "subprocess.hpp"
#include "test_util.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RandomInstance {
  ldst::Graph graph;
  int start;
  std::optional<int> root;
};

// 1,000 seeded instances with 3 <= n <= 200 and 0 <= extra <= 3n; half of
// them rooted away from the start vertex.
std::vector<RandomInstance> random_instances() {
  std::vector<RandomInstance> out;
  out.reserve(1000);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    const int n = 3 + static_cast<int>(rng() % 198);
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(3 * n + 1));
    const std::uint64_t seed = rng();
    RandomInstance inst{ldst::gen_random_2ec(n, extra, seed),
                        static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
                        std::nullopt};
    if (i % 2 == 1) inst.root = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  // ---- criteria 1 and 2: exhaustive sweep and the existence oracle -------
  {
    Criterion sweep_crit{1, "exhaustive sweep of all 2-edge-connected graphs, n <= 5"};
    Criterion exist_crit{2, "every swept graph has an enumerated tree within budget"};
    const auto t0 = Clock::now();
    try {
      int verdicts = 0;
      int existence_failures = 0;
      const ldst::SweepSummary summary = ldst::exhaustive_small_sweep(
          5, [&](const ldst::Graph&, const ldst::OracleVerdict& verdict) {
            ++verdicts;
            if (!verdict.theorem_holds || !verdict.best_worst_slack ||
                *verdict.best_worst_slack < 0)
              ++existence_failures;
          });
      const double elapsed = seconds_since(t0);
      // the CLI command named by the criterion must agree
      const subprocess::Result cli_run = subprocess::run(
          std::string(LDST_CLI_PATH) + " oracle sweep --max-n 5", "accept1");
      const bool cli_ok = cli_run.exit_code == 0 &&
                          cli_run.err.find("264 graphs") != std::string::npos &&
                          cli_run.err.find("0 failures") != std::string::npos;
      std::ostringstream detail;
      detail << summary.graphs_processed << " graphs, " << summary.starts_checked
             << " start choices, " << summary.failures << " failures, " << elapsed
             << " s, CLI " << (cli_ok ? "agrees" : "DISAGREES");
      sweep_crit.detail = detail.str();
      sweep_crit.pass = summary.graphs_processed == 264 && summary.failures == 0 &&
                        elapsed < 10.0 && cli_ok;
      exist_crit.detail = std::to_string(verdicts) + " verdicts, " +
                          std::to_string(existence_failures) + " without a witness";
      exist_crit.pass = verdicts == 264 && existence_failures == 0;
    } catch (const std::exception& e) {
      sweep_crit.detail = e.what();
      exist_crit.detail = "sweep aborted";
    }
    criteria.push_back(sweep_crit);
    criteria.push_back(exist_crit);
  }

  // ---- criteria 3 and 4: randomized property suite and the degree chain --
  {
    Criterion random_crit{3, "1,000 random instances pass every validator"};
    Criterion chain_crit{4, "deg_T(u) <= in(u)+1 and in(u) <= ceil(deg(u)/2), per vertex"};
    const auto t0 = Clock::now();
    try {
      long long violations = 0;
      long long chain_violations = 0;
      long long vertices_checked = 0;
      for (const RandomInstance& inst : random_instances()) {
        const ldst::Graph& g = inst.graph;
        const ldst::EdgeDfsList list = ldst::compute_edge_dfs(g, inst.start);
        if (!ldst::validate_edge_dfs(g, list).ok) ++violations;
        const ldst::OrientationStats stats = ldst::orientation_stats(g, list);
        if (!stats.all_balanced) ++violations;
        const ldst::BuildResult built =
            ldst::build_spanning_tree(g, list, inst.root.value_or(inst.start));
        if (!ldst::validate_spanning_tree(g, built.tree).ok) ++violations;
        const ldst::DegreeReport report = ldst::check_degree_bound(g, built.tree);
        if (!report.ok) ++violations;
        if (built.trace.enqueue_count != 2LL * g.edge_count()) ++violations;
        for (int v = 0; v < g.vertex_count(); ++v) {
          ++vertices_checked;
          const int ceiling = (g.degree(v) + 1) / 2;
          if (built.tree.deg_t[v] > stats.in_count[v] + 1) ++chain_violations;
          if (stats.in_count[v] > ceiling) ++chain_violations;
        }
      }
      const double elapsed = seconds_since(t0);
      std::ostringstream detail;
      detail << "1000 instances, " << violations << " violations, " << elapsed << " s";
      random_crit.detail = detail.str();
      random_crit.pass = violations == 0 && elapsed < 30.0;
      chain_crit.detail = std::to_string(vertices_checked) + " vertices, " +
                          std::to_string(chain_violations) + " violations";
      chain_crit.pass = chain_violations == 0 && vertices_checked > 0;
    } catch (const std::exception& e) {
      random_crit.detail = e.what();
      chain_crit.detail = "suite aborted";
    }
    criteria.push_back(random_crit);
    criteria.push_back(chain_crit);
  }

  // ---- criterion 5: linear scaling ----------------------------------------
  {
    Criterion crit{5, "bench slope <= 1.15 and adjacent ratios <= 2.5 over doubling sizes"};
    const auto t0 = Clock::now();
    try {
      const std::vector<int> sizes{1 << 17, 1 << 18, 1 << 19, 1 << 20, 1 << 21, 1 << 22};
      const ldst::BenchReport report = ldst::run_bench(sizes, 7, 5);
      const double elapsed = seconds_since(t0);
      bool ok = report.rows.size() == sizes.size() && report.slope.has_value() &&
                elapsed < 120.0;
      double worst_ratio = 0;
      for (std::size_t i = 0; ok && i < report.rows.size(); ++i) {
        if (report.rows[i].enqueues != 2LL * report.rows[i].m) ok = false;
        if (i > 0) {
          const double ratio = static_cast<double>(report.rows[i].t_total_ns) /
                               static_cast<double>(report.rows[i - 1].t_total_ns);
          worst_ratio = std::max(worst_ratio, ratio);
          if (ratio > 2.5) ok = false;
        }
      }
      if (report.slope && *report.slope > 1.15) ok = false;
      std::ostringstream detail;
      detail << "slope " << (report.slope ? *report.slope : -1.0) << ", worst ratio "
             << worst_ratio << ", " << elapsed << " s";
      crit.detail = detail.str();
      crit.pass = ok;
    } catch (const std::exception& e) {
      crit.detail = e.what();
    }
    criteria.push_back(crit);
  }

  // ---- criterion 6: bridge oracle agreement -------------------------------
  {
    Criterion crit{6, "bridge finder agrees with edge-removal brute force, 200 graphs"};
    try {
      std::mt19937_64 rng(777);
      int disagreements = 0;
      for (int trial = 0; trial < 200; ++trial) {
        ldst::Graph g;
        if (trial % 3 == 0) {
          // bridgeless by construction, kept within the m <= 20 budget
          const int n = 3 + static_cast<int>(rng() % 6);
          g = ldst::gen_random_2ec(n, static_cast<int>(rng() % 9), rng());
        } else {
          const int n = 2 + static_cast<int>(rng() % 9);
          const int m = 1 + static_cast<int>(rng() % 20);
          std::vector<std::pair<int, int>> edges;
          for (int e = 0; e < m; ++e) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            while (u == v) v = static_cast<int>(rng() % n);
            edges.emplace_back(u, v);
          }
          g = ldst::Graph(n, std::move(edges));
        }
        if (ldst::find_bridges(g) != test_util::brute_force_bridges(g)) ++disagreements;
      }
      crit.detail = std::to_string(disagreements) + " disagreements";
      crit.pass = disagreements == 0;
    } catch (const std::exception& e) {
      crit.detail = e.what();
    }
    criteria.push_back(crit);
  }

  // ---- criterion 7: tightness witness -------------------------------------
  {
    Criterion crit{7, "every spanning tree of C_3..C_8 has minimum slack exactly 0"};
    try {
      bool ok = true;
      long long trees = 0;
      for (int n = 3; n <= 8 && ok; ++n) {
        const ldst::Graph cycle = ldst::gen_cycle(n);
        std::vector<int> deg(n);
        ldst::enumerate_spanning_trees(cycle, [&](const std::vector<int>& t) {
          ++trees;
          std::fill(deg.begin(), deg.end(), 0);
          for (const int e : t) {
            const auto [u, v] = cycle.edge(e);
            ++deg[u];
            ++deg[v];
          }
          int min_slack = n;
          for (int v = 0; v < n; ++v)
            min_slack =
                std::min(min_slack, ldst::degree_ceiling_bound(cycle, v) - deg[v]);
          if (min_slack != 0) ok = false;
        });
      }
      crit.detail = std::to_string(trees) + " trees enumerated";
      crit.pass = ok && trees == 3 + 4 + 5 + 6 + 7 + 8;
    } catch (const std::exception& e) {
      crit.detail = e.what();
    }
    criteria.push_back(crit);
  }

  // ---- criterion 8: precondition rejection through the CLI ----------------
  {
    Criterion crit{8, "bridged corpus rejected by `solve` with exit 3 and a real bridge"};
    try {
      const std::vector<std::pair<std::string, ldst::Graph>> corpus = {
          {"single edge", ldst::Graph(2, {{0, 1}})},
          {"path of three", ldst::Graph(3, {{0, 1}, {1, 2}})},
          {"star", ldst::Graph(4, {{0, 1}, {0, 2}, {0, 3}})},
          {"path of five", ldst::Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})},
          {"two triangles with a bridge",
           ldst::Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}})},
          {"cycle with a pendant",
           ldst::Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})},
          {"caterpillar tree",
           ldst::Graph(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}})},
      };
      int failures = 0;
      std::string first_failure;
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [label, g] = corpus[i];
        const std::string path = "accept_neg_" + std::to_string(i) + ".graph";
        subprocess::spit(path, ldst::serialize_graph(g));
        const subprocess::Result run =
            subprocess::run(std::string(LDST_CLI_PATH) + " solve -i " + path, "accept8");
        bool case_ok = run.exit_code == 3;
        // the named bridge must be a real one
        const std::string marker = "bridge edge ";
        const std::size_t at = run.err.find(marker);
        if (at == std::string::npos) {
          case_ok = false;
        } else {
          const int named = std::atoi(run.err.c_str() + at + marker.size());
          const std::vector<int> oracle = test_util::brute_force_bridges(g);
          if (!std::binary_search(oracle.begin(), oracle.end(), named)) case_ok = false;
        }
        if (!case_ok) {
          ++failures;
          if (first_failure.empty())
            first_failure = label + " (exit " + std::to_string(run.exit_code) + ")";
        }
        std::remove(path.c_str());
      }
      crit.detail = std::to_string(corpus.size()) + " graphs, " +
                    std::to_string(failures) + " failures" +
                    (first_failure.empty() ? "" : "; first: " + first_failure);
      crit.pass = failures == 0;
    } catch (const std::exception& e) {
      crit.detail = e.what();
    }
    criteria.push_back(crit);
  }

  bool all_pass = true;
  for (const Criterion& crit : criteria) {
    all_pass = all_pass && crit.pass;
    std::printf("[%s] criterion %d: %s — %s\n", crit.pass ? "PASS" : "FAIL", crit.id,
                crit.name.c_str(), crit.detail.c_str());
  }
  return all_pass ? 0 : 1;
}
