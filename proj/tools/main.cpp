#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ldst/bench.hpp"
#include "ldst/edge_dfs.hpp"
#include "ldst/errors.hpp"
#include "ldst/generators.hpp"
#include "ldst/graph.hpp"
#include "ldst/io.hpp"
#include "ldst/oracle.hpp"
#include "ldst/solve.hpp"
#include "ldst/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ldst::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ldst::ParseError("cannot open " + path + " for writing");
  out << data;
  if (!out) throw ldst::ParseError("failed writing " + path);
}

std::string verdict_csv_row(const ldst::OracleVerdict& verdict) {
  std::ostringstream row;
  row << verdict.graph_hash << ',' << verdict.trees_enumerated << ',';
  if (verdict.best_worst_slack) row << *verdict.best_worst_slack;
  row << ',';
  if (verdict.algorithm_worst_slack) row << *verdict.algorithm_worst_slack;
  row << ',' << (verdict.theorem_holds ? 1 : 0) << '\n';
  return row.str();
}

constexpr const char* kVerdictHeader = "graph_hash,trees,best_worst_slack,alg_worst_slack,theorem_holds\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-degree spanning trees of 2-edge-connected graphs"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand(
      "solve", "build a spanning tree with deg_T(v) <= ceil(deg(v)/2)+1 at every vertex");
  std::string solve_input, solve_output;
  int solve_start = 0;
  int solve_root = -1;
  bool solve_force = false;
  bool solve_checked = false;
  solve->add_option("--input,-i", solve_input, "graph file")->required();
  solve->add_option("--output,-o", solve_output, "tree output file (default: stdout)");
  solve->add_option("--start", solve_start, "traversal start vertex (default 0)");
  solve->add_option("--root", solve_root, "tree root (default: the start vertex)");
  solve->add_flag("--force", solve_force, "skip the 2-edge-connectivity check");
  solve->add_flag("--checked", solve_checked, "enable per-step invariant assertions");

  auto* verify = app.add_subcommand("verify", "check a tree file against its graph");
  std::string verify_input, verify_tree, verify_output;
  verify->add_option("--input,-i", verify_input, "graph file")->required();
  verify->add_option("--tree,-t", verify_tree, "tree file")->required();
  verify->add_option("--output,-o", verify_output, "degree report CSV (default: stdout)");

  auto* dfs = app.add_subcommand("dfs", "dump the edge DFS traversal");
  std::string dfs_input, dfs_output;
  int dfs_start = 0;
  dfs->add_option("--input,-i", dfs_input, "graph file")->required();
  dfs->add_option("--output,-o", dfs_output, "traversal output file (default: stdout)");
  dfs->add_option("--start", dfs_start, "traversal start vertex (default 0)");

  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  std::string gen_family_name, gen_output;
  int gen_n = 0;
  int gen_extra = 0;
  int gen_paths = 2;
  int gen_plen = 1;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family_name,
                  "cycle | complete | wheel | hypercube | theta | random-2ec")
      ->required();
  gen->add_option("--n", gen_n, "size (cycle/complete n, wheel rim, hypercube dim, random n)");
  gen->add_option("--extra", gen_extra, "random-2ec: chord count");
  gen->add_option("--seed", gen_seed, "random-2ec: seed");
  gen->add_option("--paths", gen_paths, "theta: number of disjoint paths");
  gen->add_option("--plen", gen_plen, "theta: interior vertices per path");
  gen->add_option("--output,-o", gen_output, "graph output file (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth on small instances");
  oracle->require_subcommand(1);
  auto* sweep = oracle->add_subcommand(
      "sweep", "check every 2-edge-connected simple graph up to max-n vertices");
  int sweep_max_n = 5;
  std::string sweep_output;
  sweep->add_option("--max-n", sweep_max_n, "largest vertex count (<= 6)");
  sweep->add_option("--output,-o", sweep_output, "verdict CSV (default: stdout)");
  auto* check = oracle->add_subcommand("check", "enumerate all spanning trees of one graph");
  std::string check_input, check_output;
  check->add_option("--input,-i", check_input, "graph file")->required();
  check->add_option("--output,-o", check_output, "verdict CSV (default: stdout)");

  auto* bench = app.add_subcommand("bench", "time the solver across graph sizes");
  std::vector<int> bench_sizes{1 << 17, 1 << 18, 1 << 19, 1 << 20, 1 << 21, 1 << 22};
  std::uint64_t bench_seed = 7;
  int bench_reps = 5;
  std::string bench_output;
  bench->add_option("--sizes", bench_sizes, "edge-count targets, ascending")
      ->delimiter(',');
  bench->add_option("--seed", bench_seed, "graph generation seed");
  bench->add_option("--reps", bench_reps, "repetitions per size (median kept)");
  bench->add_option("--output,-o", bench_output, "CSV output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const ldst::Graph g = ldst::parse_graph(read_file(solve_input));
      ldst::SolveOptions opts;
      opts.start = solve_start;
      if (solve_root >= 0) opts.root = solve_root;
      opts.force = solve_force;
      opts.checked = solve_checked;
      const ldst::LowDegreeResult result = ldst::low_degree_spanning_tree(g, opts);
      write_output(solve_output, ldst::serialize_tree(result.tree, result.report));
      std::cerr << "solve: ok; worst slack " << result.report.worst_slack << " over "
                << g.vertex_count() << " vertices\n";
      return 0;
    }

    if (*verify) {
      const ldst::Graph g = ldst::parse_graph(read_file(verify_input));
      const ldst::SpanningTree tree = ldst::parse_tree(g, read_file(verify_tree));
      const ldst::TreeValidation tv = ldst::validate_spanning_tree(g, tree);
      if (!tv.ok) {
        std::cerr << "verify: invalid tree: " << tv.reason << "\n";
        return 1;
      }
      const ldst::DegreeReport report = ldst::check_degree_bound(g, tree);
      std::ostringstream csv;
      csv << "v,deg_g,deg_t,bound,slack\n";
      for (const ldst::DegreeRow& row : report.rows)
        csv << row.vertex << ',' << row.deg_g << ',' << row.deg_t << ',' << row.bound
            << ',' << row.slack << '\n';
      write_output(verify_output, csv.str());
      std::cerr << "verify: " << (report.ok ? "ok" : "DEGREE BOUND VIOLATED")
                << "; worst slack " << report.worst_slack << "\n";
      return report.ok ? 0 : 1;
    }

    if (*dfs) {
      const ldst::Graph g = ldst::parse_graph(read_file(dfs_input));
      const ldst::EdgeDfsList list = ldst::compute_edge_dfs(g, dfs_start);
      write_output(dfs_output, ldst::serialize_dfs(list));
      std::cerr << "dfs: " << list.items.size() << " items from start vertex "
                << dfs_start << "\n";
      return 0;
    }

    if (*gen) {
      const auto family = ldst::family_from_string(gen_family_name);
      if (!family) throw std::invalid_argument("unknown family: " + gen_family_name);
      ldst::GenSpec spec;
      spec.family = *family;
      spec.n = gen_n;
      spec.extra = gen_extra;
      spec.paths = gen_paths;
      spec.path_len = gen_plen;
      spec.seed = gen_seed;
      const ldst::Graph g = ldst::gen_family(spec);
      write_output(gen_output, ldst::serialize_graph(g));
      std::cerr << "gen: " << ldst::family_name(*family) << " with " << g.vertex_count()
                << " vertices, " << g.edge_count() << " edges\n";
      return 0;
    }

    if (*sweep) {
      const auto t0 = std::chrono::steady_clock::now();
      std::ostringstream csv;
      csv << kVerdictHeader;
      const ldst::SweepSummary summary = ldst::exhaustive_small_sweep(
          sweep_max_n, [&](const ldst::Graph&, const ldst::OracleVerdict& verdict) {
            csv << verdict_csv_row(verdict);
          });
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
      write_output(sweep_output, csv.str());
      std::cerr << "sweep: max_n=" << summary.max_n << ", "
                << summary.graphs_processed << " graphs, " << summary.starts_checked
                << " start choices, " << summary.failures << " failures (" << elapsed
                << " ms)\n";
      return 0;
    }

    if (*check) {
      const ldst::Graph g = ldst::parse_graph(read_file(check_input));
      const ldst::OracleVerdict verdict = ldst::oracle_check(g);
      write_output(check_output, std::string(kVerdictHeader) + verdict_csv_row(verdict));
      std::cerr << "oracle: " << verdict.trees_enumerated << " trees, theorem_holds="
                << (verdict.theorem_holds ? "true" : "false") << "\n";
      return 0;
    }

    if (*bench) {
      const ldst::BenchReport report = ldst::run_bench(bench_sizes, bench_seed, bench_reps);
      write_output(bench_output, ldst::bench_csv(report));
      for (const std::string& err : report.row_errors) std::cerr << "bench: " << err << "\n";
      if (report.slope)
        std::cerr << "bench: fitted log-log slope " << *report.slope << "\n";
      return 0;
    }
  } catch (const ldst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ldst::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ldst::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
