// Command-line front end: one subcommand per library operation plus the
// `run` pipeline and `inspect`.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparc/benchmatch.hpp"
#include "sparc/consensus.hpp"
#include "sparc/derivability.hpp"
#include "sparc/mcl.hpp"
#include "sparc/network.hpp"
#include "sparc/pipeline.hpp"
#include "sparc/refine.hpp"
#include "sparc/reports.hpp"

namespace {

using namespace sparc;

std::string g_invocation_hash;

ReportHeader header(std::string kind, std::uint64_t seed = 0) { return {std::move(kind), g_invocation_hash, seed}; }

// Writes to `path`, or standard output when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
}

Network load(const std::string& path, double default_weight) {
  LoadStats st;
  auto g = load_network(path, default_weight, WeightMerge::Max, &st);
  if (st.self_loops > 0) std::cerr << "warning: " << path << ": dropped " << st.self_loops << " self-loop(s)\n";
  return g;
}

ScoreKind parse_score(const std::string& s) {
  if (s == "ce") return ScoreKind::CE;
  if (s == "cs") return ScoreKind::CS;
  if (s == "es") return ScoreKind::ES;
  if (s == "density") return ScoreKind::Density;
  throw ArgumentError("unknown score '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  {
    std::string joined;
    for (int i = 1; i < argc; ++i) joined += std::string(argv[i]) + '\0';
    g_invocation_hash = hex64(fnv1a64(joined));
  }

  CLI::App app{"Protein-complex derivability, SPARC refinement and benchmark evaluation"};
  app.require_subcommand(1);
  double default_weight = 1.0;
  app.add_option("--default-weight", default_weight, "Weight for edge lines without a weight column")
      ->check(CLI::Range(0.0, 1.0));

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Protein/interaction counts and average degree");
  std::vector<std::string> stats_networks;
  std::string stats_out;
  stats_cmd->add_option("--network", stats_networks, "Edge-list file (repeatable)")->required();
  stats_cmd->add_option("--out", stats_out, "JSON output (default stdout)");

  // merge
  auto* merge_cmd = app.add_subcommand("merge", "Union of two networks");
  std::string merge_p, merge_f, merge_out, merge_policy = "max";
  merge_cmd->add_option("--physical", merge_p)->required();
  merge_cmd->add_option("--functional", merge_f)->required();
  merge_cmd->add_option("--policy", merge_policy, "Weight of shared edges")->check(CLI::IsMember({"max", "mean"}));
  merge_cmd->add_option("--out", merge_out);

  // random-net
  auto* random_cmd = app.add_subcommand("random-net", "Uniform random network on the nodes of a given network");
  std::string random_like, random_out;
  double random_degree = -1.0;
  std::uint64_t random_seed = 0;
  random_cmd->add_option("--network", random_like, "Network supplying the node set")->required();
  random_cmd->add_option("--avg-degree", random_degree, "Target average degree (default: that of --network)");
  random_cmd->add_option("--seed", random_seed);
  random_cmd->add_option("--out", random_out);

  // derivability
  auto* deriv_cmd = app.add_subcommand("derivability", "Per-complex CS/ES/CE scores and derivability indices");
  std::string deriv_net, deriv_bench, deriv_out, deriv_label;
  std::size_t deriv_k = 4;
  double deriv_tce = 0.40;
  deriv_cmd->add_option("--network", deriv_net)->required();
  deriv_cmd->add_option("--benchmarks", deriv_bench)->required();
  deriv_cmd->add_option("--k", deriv_k)->check(CLI::PositiveNumber);
  deriv_cmd->add_option("--tce", deriv_tce)->check(CLI::Range(0.0, 1.0));
  deriv_cmd->add_option("--label", deriv_label, "Network label recorded in the report");
  deriv_cmd->add_option("--out", deriv_out);

  // ce-profile
  auto* profile_cmd = app.add_subcommand("ce-profile", "Number of derivable complexes with CE >= t, per threshold");
  std::vector<std::string> profile_nets;
  std::string profile_bench, profile_out;
  std::size_t profile_k = 4;
  std::vector<double> profile_t{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  profile_cmd->add_option("--network", profile_nets, "Edge-list file (repeatable, one column each)")->required();
  profile_cmd->add_option("--benchmarks", profile_bench)->required();
  profile_cmd->add_option("--k", profile_k)->check(CLI::PositiveNumber);
  profile_cmd->add_option("--thresholds", profile_t)->check(CLI::Range(0.0, 1.0));
  profile_cmd->add_option("--out", profile_out);

  // mcl
  auto* mcl_cmd = app.add_subcommand("mcl", "Markov clustering of a network");
  std::string mcl_net, mcl_out;
  MclConfig mcl_config;
  double mcl_loop = 0.0;
  mcl_cmd->add_option("--network", mcl_net)->required();
  mcl_cmd->add_option("--inflation", mcl_config.inflation);
  mcl_cmd->add_option("--expansion", mcl_config.expansion);
  mcl_cmd->add_option("--max-iterations", mcl_config.max_iterations);
  mcl_cmd->add_option("--eps", mcl_config.convergence_eps);
  mcl_cmd->add_option("--prune", mcl_config.prune_threshold);
  mcl_cmd->add_option("--self-loop", mcl_loop, "Fixed self-loop weight (default: max incident weight)");
  mcl_cmd->add_option("--out", mcl_out);

  // sparc
  auto* sparc_cmd = app.add_subcommand("sparc", "Refine clusters with functional interactions");
  std::string sparc_clusters, sparc_p, sparc_f, sparc_result_out, sparc_pred_out;
  SparcConfig sparc_config;
  bool sparc_include_rejected = false;
  sparc_cmd->add_option("--clusters", sparc_clusters)->required();
  sparc_cmd->add_option("--physical", sparc_p)->required();
  sparc_cmd->add_option("--functional", sparc_f)->required();
  sparc_cmd->add_option("--delta", sparc_config.delta)->check(CLI::Range(0.0, 1.0));
  sparc_cmd->add_option("--max-growth", sparc_config.max_growth, "0 = unlimited");
  sparc_cmd->add_option("--min-size", sparc_config.min_output_size);
  sparc_cmd->add_flag("--include-rejected", sparc_include_rejected);
  sparc_cmd->add_flag("--seedless", "Accepted for compatibility; SPARC uses no randomness");
  sparc_cmd->add_option("--out", sparc_result_out, "Accepted/rescued/rejected TSV");
  sparc_cmd->add_option("--predicted", sparc_pred_out, "Predicted-complex catalog");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Match predictions against benchmark complexes");
  std::string eval_bench, eval_pred, eval_net, eval_out, eval_pairs, eval_recall = "derivable";
  MatchConfig match_config;
  eval_cmd->add_option("--benchmarks", eval_bench)->required();
  eval_cmd->add_option("--predictions", eval_pred)->required();
  eval_cmd->add_option("--network", eval_net)->required();
  eval_cmd->add_option("--jmin", match_config.j_min)->check(CLI::Range(0.0, 1.0));
  eval_cmd->add_option("--k", match_config.k)->check(CLI::PositiveNumber);
  eval_cmd->add_option("--recall", eval_recall)->check(CLI::IsMember({"derivable", "all"}));
  eval_cmd->add_option("--out", eval_out, "JSON report");
  eval_cmd->add_option("--pairs", eval_pairs, "TSV of qualifying (benchmark, prediction) pairs");

  // correlate
  auto* corr_cmd = app.add_subcommand("correlate", "Pearson correlation of a derivability score with accuracy");
  std::string corr_bench, corr_pred, corr_net, corr_score = "ce";
  MatchConfig corr_match;
  corr_cmd->add_option("--benchmarks", corr_bench)->required();
  corr_cmd->add_option("--predictions", corr_pred)->required();
  corr_cmd->add_option("--network", corr_net)->required();
  corr_cmd->add_option("--jmin", corr_match.j_min);
  corr_cmd->add_option("--k", corr_match.k);
  corr_cmd->add_option("--score", corr_score)->check(CLI::IsMember({"ce", "cs", "es", "density"}));

  // consensus
  auto* cons_cmd = app.add_subcommand("consensus", "Three-way consensus of predicted complexes");
  std::vector<std::string> cons_in;
  std::string cons_out;
  ConsensusConfig cons_config;
  cons_cmd->add_option("--in", cons_in, "Catalog (exactly three)")->required()->expected(3);
  cons_cmd->add_option("--pair-min", cons_config.pair_overlap_min);
  cons_cmd->add_option("--min-membership", cons_config.min_membership);
  cons_cmd->add_option("--out", cons_out);

  // run
  auto* run_cmd = app.add_subcommand("run", "Full pipeline from a run-config file");
  std::string run_config, run_out;
  std::optional<std::uint64_t> run_seed;
  std::optional<double> run_delta, run_jmin, run_inflation;
  std::optional<std::size_t> run_growth, run_k;
  run_cmd->add_option("--config", run_config)->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--output-dir", run_out);
  run_cmd->add_option("--seed", run_seed);
  run_cmd->add_option("--delta", run_delta);
  run_cmd->add_option("--max-growth", run_growth);
  run_cmd->add_option("--jmin", run_jmin);
  run_cmd->add_option("--k", run_k);
  run_cmd->add_option("--inflation", run_inflation);

  // inspect
  auto* inspect_cmd = app.add_subcommand("inspect", "Summarise a report written by this tool");
  std::string inspect_path;
  inspect_cmd->add_option("report", inspect_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats_cmd) {
      std::vector<std::pair<std::string, NetworkStats>> rows;
      for (const auto& p : stats_networks) rows.emplace_back(p, stats(load(p, default_weight)));
      emit(stats_out, [&](std::ostream& out) { write_stats(rows, header("stats"), out); });
    } else if (*merge_cmd) {
      const auto policy = merge_policy == "mean" ? WeightMerge::Mean : WeightMerge::Max;
      const auto merged = merge_networks(load(merge_p, default_weight), load(merge_f, default_weight), policy);
      emit(merge_out, [&](std::ostream& out) { write_network(merged, out); });
    } else if (*random_cmd) {
      const auto like = load(random_like, default_weight);
      const double degree = random_degree >= 0.0 ? random_degree : stats(like).avg_node_degree;
      const auto g = random_network(like.node_set(), degree, random_seed);
      emit(random_out, [&](std::ostream& out) {
        out << "# seed: " << random_seed << '\n';
        write_network(g, out);
      });
    } else if (*deriv_cmd) {
      const auto report = derivability_report(load(deriv_net, default_weight), load_catalog(deriv_bench), deriv_k,
                                              deriv_tce, deriv_label.empty() ? deriv_net : deriv_label);
      emit(deriv_out, [&](std::ostream& out) { write_derivability(report, header("derivability"), out); });
    } else if (*profile_cmd) {
      const auto catalog = load_catalog(profile_bench);
      std::vector<std::pair<std::string, CeProfile>> columns;
      for (const auto& p : profile_nets) {
        columns.emplace_back(p, ce_profile(load(p, default_weight), catalog, profile_k, profile_t));
      }
      emit(profile_out, [&](std::ostream& out) { write_ce_profile(columns, header("ce-profile"), out); });
    } else if (*mcl_cmd) {
      if (mcl_loop > 0.0) mcl_config.self_loop_weight = mcl_loop;
      const auto result = mcl_cluster(load(mcl_net, default_weight), mcl_config);
      if (!result.converged) {
        std::cerr << "warning: MCL did not converge within " << mcl_config.max_iterations << " iterations\n";
      }
      emit(mcl_out, [&](std::ostream& out) { write_catalog(result.clusters, out); });
    } else if (*sparc_cmd) {
      const auto clusters = load_catalog(sparc_clusters);
      const auto result = sparc::sparc(clusters, load(sparc_p, default_weight), load(sparc_f, default_weight), sparc_config);
      emit(sparc_result_out, [&](std::ostream& out) { write_sparc(result, sparc_config, header("sparc"), out); });
      if (!sparc_pred_out.empty()) {
        save_catalog(predicted_catalog(result, clusters, sparc_config, sparc_include_rejected), sparc_pred_out);
      }
    } else if (*eval_cmd) {
      match_config.recall_denominator =
          eval_recall == "all" ? RecallDenominator::AllBenchmarks : RecallDenominator::Derivable;
      const auto report =
          evaluate(load_catalog(eval_bench), load_catalog(eval_pred), load(eval_net, default_weight), match_config);
      emit(eval_out, [&](std::ostream& out) { write_eval(report, header("eval"), out); });
      if (!eval_pairs.empty()) {
        std::ofstream out(eval_pairs);
        write_pair_matches(report, out);
      }
    } else if (*corr_cmd) {
      const auto g = load(corr_net, default_weight);
      const auto benchmarks = load_catalog(corr_bench);
      const auto deriv = derivability_report(g, benchmarks, corr_match.k, 0.0, corr_net);
      const auto eval = evaluate(benchmarks, load_catalog(corr_pred), g, corr_match);
      std::cout << corr_score << '\t' << format_real(correlate(deriv, eval, parse_score(corr_score))) << '\n';
    } else if (*cons_cmd) {
      std::vector<ComplexSet> sets;
      for (const auto& p : cons_in) sets.push_back(load_catalog(p));
      const auto merged = consensus(sets, cons_config);
      emit(cons_out, [&](std::ostream& out) { write_catalog(merged, out); });
    } else if (*run_cmd) {
      auto config = load_pipeline_config(run_config);
      if (!config.output_dir.empty() && config.output_dir.is_relative()) {
        config.output_dir = config.base_dir / config.output_dir;
      }
      if (!run_out.empty()) config.output_dir = run_out;
      if (run_seed) config.seed = *run_seed;
      if (run_delta) config.sparc.delta = *run_delta;
      if (run_growth) config.sparc.max_growth = *run_growth;
      if (run_jmin) config.match.j_min = *run_jmin;
      if (run_k) config.match.k = *run_k;
      if (run_inflation) config.mcl.inflation = *run_inflation;
      const auto outcome = run_pipeline(config);
      std::cout << "wrote " << outcome.files.size() << " reports to " << config.output_dir.string() << '\n';
    } else if (*inspect_cmd) {
      inspect(std::filesystem::path(inspect_path), std::cout);
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
