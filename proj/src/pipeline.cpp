#include "sparc/pipeline.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sparc/derivability.hpp"
#include "sparc/reports.hpp"

namespace sparc {

namespace fs = std::filesystem;

// --- config ------------------------------------------------------------------

namespace {

template <typename T>
void read_key(const YAML::Node& node, const char* key, T& value) {
  if (!node || !node[key]) return;
  try {
    value = node[key].as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void read_path(const YAML::Node& node, const char* key, fs::path& value) {
  std::string text;
  read_key(node, key, text);
  if (!text.empty()) value = text;
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& yaml_text, const fs::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("run-config: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("run-config must be a mapping");

  PipelineConfig c;
  c.base_dir = base_dir;
  read_key(root, "seed", c.seed);
  read_path(root, "output_dir", c.output_dir);

  const auto networks = root["networks"];
  read_path(networks, "physical", c.physical_path);
  read_path(networks, "functional", c.functional_path);
  read_key(networks, "default_weight", c.default_weight);

  if (const auto b = root["benchmarks"]) {
    if (b.IsScalar()) {
      c.benchmark_paths.emplace_back(b.as<std::string>());
    } else {
      for (const auto& item : b) c.benchmark_paths.emplace_back(item.as<std::string>());
    }
  }

  if (const auto clusters = root["clusters"]) {
    std::string source = "builtin-mcl";
    read_key(clusters, "source", source);
    if (source == "builtin-mcl") {
      c.cluster_source = ClusterSource::BuiltinMcl;
    } else if (source == "file") {
      c.cluster_source = ClusterSource::File;
    } else {
      throw ConfigError("clusters.source must be 'builtin-mcl' or 'file', got '" + source + "'");
    }
    read_path(clusters, "path", c.clusters_path);
  }

  const auto mcl = root["mcl"];
  read_key(mcl, "inflation", c.mcl.inflation);
  read_key(mcl, "expansion", c.mcl.expansion);
  read_key(mcl, "max_iterations", c.mcl.max_iterations);
  read_key(mcl, "convergence_eps", c.mcl.convergence_eps);
  read_key(mcl, "prune_threshold", c.mcl.prune_threshold);
  if (mcl && mcl["self_loop_weight"]) c.mcl.self_loop_weight = mcl["self_loop_weight"].as<double>();

  const auto deriv = root["derivability"];
  read_key(deriv, "t_ce", c.t_ce);
  read_key(deriv, "thresholds", c.profile_thresholds);
  read_key(deriv, "random_control", c.random_control);

  const auto sp = root["sparc"];
  read_key(sp, "delta", c.sparc.delta);
  read_key(sp, "max_growth", c.sparc.max_growth);
  read_key(sp, "min_output_size", c.sparc.min_output_size);
  read_key(sp, "include_rejected", c.include_rejected);

  const auto match = root["match"];
  read_key(match, "j_min", c.match.j_min);
  read_key(match, "k", c.match.k);
  std::string recall = "derivable";
  read_key(match, "recall", recall);
  if (recall == "derivable") {
    c.match.recall_denominator = RecallDenominator::Derivable;
  } else if (recall == "all") {
    c.match.recall_denominator = RecallDenominator::AllBenchmarks;
  } else {
    throw ConfigError("match.recall must be 'derivable' or 'all'");
  }

  if (const auto cons = root["consensus"]) {
    read_key(cons, "pair_overlap_min", c.consensus.pair_overlap_min);
    read_key(cons, "min_membership", c.consensus.min_membership);
    for (const auto& run : cons["runs"]) {
      ScoredRun r;
      read_key(run, "label", r.label);
      read_path(run, "physical", r.physical_path);
      read_path(run, "functional", r.functional_path);
      fs::path clusters;
      read_path(run, "clusters", clusters);
      if (!clusters.empty()) r.clusters_path = clusters;
      if (r.label.empty()) r.label = "run" + std::to_string(c.consensus_runs.size() + 1);
      c.consensus_runs.push_back(std::move(r));
    }
    if (!c.consensus_runs.empty() && c.consensus_runs.size() != 3) {
      throw ConfigError("consensus.runs must list exactly three scored runs");
    }
  }
  return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open run-config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pipeline_config(ss.str(), path.parent_path());
}

std::string canonical_config(const PipelineConfig& c) {
  YAML::Emitter e;
  e << YAML::BeginMap;
  e << YAML::Key << "seed" << YAML::Value << c.seed;
  e << YAML::Key << "networks" << YAML::Value << YAML::BeginMap
    << YAML::Key << "physical" << YAML::Value << c.physical_path.generic_string()
    << YAML::Key << "functional" << YAML::Value << c.functional_path.generic_string()
    << YAML::Key << "default_weight" << YAML::Value << format_real(c.default_weight) << YAML::EndMap;
  e << YAML::Key << "benchmarks" << YAML::Value << YAML::BeginSeq;
  for (const auto& b : c.benchmark_paths) e << b.generic_string();
  e << YAML::EndSeq;
  e << YAML::Key << "clusters" << YAML::Value << YAML::BeginMap
    << YAML::Key << "source" << YAML::Value
    << (c.cluster_source == ClusterSource::BuiltinMcl ? "builtin-mcl" : "file")
    << YAML::Key << "path" << YAML::Value << c.clusters_path.generic_string() << YAML::EndMap;
  e << YAML::Key << "mcl" << YAML::Value << YAML::BeginMap
    << YAML::Key << "inflation" << YAML::Value << format_real(c.mcl.inflation)
    << YAML::Key << "expansion" << YAML::Value << c.mcl.expansion
    << YAML::Key << "max_iterations" << YAML::Value << c.mcl.max_iterations
    << YAML::Key << "convergence_eps" << YAML::Value << format_real(c.mcl.convergence_eps)
    << YAML::Key << "prune_threshold" << YAML::Value << format_real(c.mcl.prune_threshold)
    << YAML::Key << "self_loop_weight" << YAML::Value
    << (c.mcl.self_loop_weight ? format_real(*c.mcl.self_loop_weight) : std::string("max-incident"))
    << YAML::EndMap;
  e << YAML::Key << "derivability" << YAML::Value << YAML::BeginMap
    << YAML::Key << "t_ce" << YAML::Value << format_real(c.t_ce)
    << YAML::Key << "thresholds" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (double t : c.profile_thresholds) e << format_real(t);
  e << YAML::EndSeq << YAML::Key << "random_control" << YAML::Value << c.random_control << YAML::EndMap;
  e << YAML::Key << "sparc" << YAML::Value << YAML::BeginMap
    << YAML::Key << "delta" << YAML::Value << format_real(c.sparc.delta)
    << YAML::Key << "max_growth" << YAML::Value << c.sparc.max_growth
    << YAML::Key << "min_output_size" << YAML::Value << c.sparc.min_output_size
    << YAML::Key << "include_rejected" << YAML::Value << c.include_rejected << YAML::EndMap;
  e << YAML::Key << "match" << YAML::Value << YAML::BeginMap
    << YAML::Key << "j_min" << YAML::Value << format_real(c.match.j_min)
    << YAML::Key << "k" << YAML::Value << c.match.k
    << YAML::Key << "recall" << YAML::Value
    << (c.match.recall_denominator == RecallDenominator::Derivable ? "derivable" : "all") << YAML::EndMap;
  e << YAML::Key << "consensus" << YAML::Value << YAML::BeginMap
    << YAML::Key << "pair_overlap_min" << YAML::Value << format_real(c.consensus.pair_overlap_min)
    << YAML::Key << "min_membership" << YAML::Value << c.consensus.min_membership
    << YAML::Key << "runs" << YAML::Value << YAML::BeginSeq;
  for (const auto& r : c.consensus_runs) {
    e << YAML::BeginMap << YAML::Key << "label" << YAML::Value << r.label
      << YAML::Key << "physical" << YAML::Value << r.physical_path.generic_string()
      << YAML::Key << "functional" << YAML::Value << r.functional_path.generic_string()
      << YAML::Key << "clusters" << YAML::Value << (r.clusters_path ? r.clusters_path->generic_string() : "")
      << YAML::EndMap;
  }
  e << YAML::EndSeq << YAML::EndMap;
  e << YAML::EndMap;
  return std::string(e.c_str()) + "\n";
}

std::string config_hash(const PipelineConfig& config) { return hex64(fnv1a64(canonical_config(config))); }

// --- run -----------------------------------------------------------------------

namespace {

class Bundle {
 public:
  Bundle(fs::path dir, std::string hash, std::uint64_t seed)
      : dir_(std::move(dir)), hash_(std::move(hash)), seed_(seed) {}

  ReportHeader header(std::string kind) const { return {std::move(kind), hash_, seed_}; }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    body(out);
    if (!out) throw std::runtime_error("write failed for " + (dir_ / name).string());
    files_.push_back(name);
  }

  void manifest(const std::string& status, const std::string& failed_stage = {}, const std::string& error = {}) {
    std::ofstream out(dir_ / "MANIFEST.txt", std::ios::binary);
    out << "tool: " << kToolName << ' ' << kToolVersion << '\n'
        << "config_hash: " << hash_ << '\n'
        << "seed: " << seed_ << '\n'
        << "status: " << status << '\n';
    if (!failed_stage.empty()) out << "failed_stage: " << failed_stage << '\n' << "error: " << error << '\n';
    out << "files:\n";
    for (const auto& f : files_) out << "  " << f << '\n';
  }

  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::string hash_;
  std::uint64_t seed_;
  std::vector<std::string> files_;
};

fs::path resolved(const PipelineConfig& c, const fs::path& p) {
  return p.is_absolute() || c.base_dir.empty() ? p : c.base_dir / p;
}

Network load_input(const PipelineConfig& c, const fs::path& p, const char* what) {
  if (p.empty()) throw ConfigError(std::string(what) + " path is not configured");
  const auto full = resolved(c, p);
  if (!fs::exists(full)) throw ConfigError(std::string(what) + " file not found: " + full.string());
  return load_network(full, c.default_weight);
}

// Stem labels for the benchmark catalogs, disambiguated by position.
std::vector<std::string> benchmark_labels(const std::vector<fs::path>& paths) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    std::string label = paths[i].stem().string();
    if (!seen.insert(label).second) label += "_" + std::to_string(i + 1);
    out.push_back(label);
  }
  return out;
}

ComplexSet physical_clusters(const PipelineConfig& c, const Network& physical,
                             const std::optional<fs::path>& override_path) {
  if (override_path) return load_catalog(resolved(c, *override_path));
  if (c.cluster_source == ClusterSource::File) {
    if (c.clusters_path.empty()) throw ConfigError("clusters.path is required when clusters.source is 'file'");
    return load_catalog(resolved(c, c.clusters_path));
  }
  return mcl_cluster(physical, c.mcl).clusters;
}

nlohmann::json correlation_entry(const DerivabilityReport& report, const EvalReport& eval, ScoreKind kind) {
  try {
    return correlate(report, eval, kind);
  } catch (const ArgumentError& e) {
    return nlohmann::json{{"undefined", e.what()}};
  }
}

}  // namespace

PipelineOutcome run_pipeline(const PipelineConfig& config) {
  if (config.output_dir.empty()) throw StageError("setup", "output_dir is not configured");
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw StageError("setup", "cannot create " + config.output_dir.string() + ": " + ec.message());

  Bundle bundle(config.output_dir, config_hash(config), config.seed);
  std::string stage = "load";
  try {
    const Network physical = load_input(config, config.physical_path, "physical network");
    const Network functional = load_input(config, config.functional_path, "functional network");
    const Network augmented = merge_networks(physical, functional);
    std::vector<ComplexSet> benchmarks;
    for (const auto& p : config.benchmark_paths) benchmarks.push_back(load_catalog(resolved(config, p)));
    const auto labels = benchmark_labels(config.benchmark_paths);

    stage = "stats";
    std::vector<std::pair<std::string, const Network*>> nets{
        {"P", &physical}, {"F", &functional}, {"P+F", &augmented}};
    Network random_augmented;
    if (config.random_control) {
      const auto f_stats = stats(functional);
      const Network random = random_network(functional.node_set(), f_stats.avg_node_degree, config.seed);
      random_augmented = merge_networks(physical, random);
      nets.emplace_back("P+Random", &random_augmented);
    }
    std::vector<std::pair<std::string, NetworkStats>> net_stats;
    for (const auto& [label, g] : nets) net_stats.emplace_back(label, stats(*g));
    bundle.write("stats.json", [&](std::ostream& out) { write_stats(net_stats, bundle.header("stats"), out); });

    stage = "derivability";
    std::vector<DerivabilityReport> physical_reports;
    for (std::size_t b = 0; b < benchmarks.size(); ++b) {
      std::vector<std::pair<std::string, CeProfile>> profile;
      for (const auto& [label, g] : nets) {
        auto report = derivability_report(*g, benchmarks[b], config.match.k, config.t_ce, label);
        std::string tag = label == "P+F" ? "PF" : label == "P+Random" ? "PR" : label;
        bundle.write("derivability_" + labels[b] + "_" + tag + ".tsv", [&](std::ostream& out) {
          write_derivability(report, bundle.header("derivability"), out);
        });
        profile.emplace_back(label, ce_profile(*g, benchmarks[b], config.match.k, config.profile_thresholds));
        if (label == "P") physical_reports.push_back(std::move(report));
      }
      bundle.write("ce_profile_" + labels[b] + ".tsv",
                   [&](std::ostream& out) { write_ce_profile(profile, bundle.header("ce-profile"), out); });
    }

    stage = "cluster";
    const ComplexSet clusters = physical_clusters(config, physical, std::nullopt);
    bundle.write("clusters.tsv", [&](std::ostream& out) { write_catalog(clusters, out); });

    stage = "sparc";
    const SparcResult refined = sparc_augmented(clusters, physical, augmented, config.sparc);
    const ComplexSet predicted = predicted_catalog(refined, clusters, config.sparc, config.include_rejected);
    bundle.write("sparc.tsv",
                 [&](std::ostream& out) { write_sparc(refined, config.sparc, bundle.header("sparc"), out); });
    bundle.write("predicted.tsv", [&](std::ostream& out) { write_catalog(predicted, out); });

    stage = "evaluate";
    std::vector<EvalReport> physical_evals;
    for (std::size_t b = 0; b < benchmarks.size(); ++b) {
      for (const auto& [tag, preds] : {std::pair<std::string, const ComplexSet*>{"physical", &clusters},
                                       std::pair<std::string, const ComplexSet*>{"sparc", &predicted}}) {
        const auto eval = evaluate(benchmarks[b], *preds, physical, config.match);
        const std::string base = "eval_" + labels[b] + "_" + tag;
        bundle.write(base + ".json", [&](std::ostream& out) { write_eval(eval, bundle.header("eval"), out); });
        bundle.write(base + "_pairs.tsv", [&](std::ostream& out) { write_pair_matches(eval, out); });
        if (tag == "physical") physical_evals.push_back(eval);
      }
    }

    stage = "correlate";
    for (std::size_t b = 0; b < benchmarks.size(); ++b) {
      nlohmann::json doc{{"header", {{"tool", kToolName}, {"version", kToolVersion}, {"kind", "correlation"},
                                     {"config_hash", config_hash(config)}, {"seed", config.seed}}},
                         {"network", "P"},
                         {"predictions", "physical"},
                         {"pearson",
                          {{"ce", correlation_entry(physical_reports[b], physical_evals[b], ScoreKind::CE)},
                           {"cs", correlation_entry(physical_reports[b], physical_evals[b], ScoreKind::CS)},
                           {"es", correlation_entry(physical_reports[b], physical_evals[b], ScoreKind::ES)},
                           {"density",
                            correlation_entry(physical_reports[b], physical_evals[b], ScoreKind::Density)}}}};
      bundle.write("correlation_" + labels[b] + ".json", [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
    }

    if (!config.consensus_runs.empty()) {
      stage = "consensus";
      std::vector<ComplexSet> scored;
      for (const auto& run : config.consensus_runs) {
        const Network p = load_input(config, run.physical_path, "scored physical network");
        const Network f = load_input(config, run.functional_path, "scored functional network");
        const ComplexSet run_clusters = physical_clusters(config, p, run.clusters_path);
        const SparcResult r = sparc(run_clusters, p, f, config.sparc);
        scored.push_back(predicted_catalog(r, run_clusters, config.sparc, config.include_rejected));
        bundle.write("predicted_" + run.label + ".tsv", [&](std::ostream& out) { write_catalog(scored.back(), out); });
      }
      const ComplexSet merged = consensus(scored, config.consensus);
      bundle.write("consensus.tsv", [&](std::ostream& out) { write_catalog(merged, out); });
      for (std::size_t b = 0; b < benchmarks.size(); ++b) {
        const auto eval = evaluate(benchmarks[b], merged, physical, config.match);
        bundle.write("eval_" + labels[b] + "_consensus.json",
                     [&](std::ostream& out) { write_eval(eval, bundle.header("eval"), out); });
      }
    }
  } catch (const std::exception& e) {
    bundle.manifest("incomplete", stage, e.what());
    throw StageError(stage, e.what());
  }
  bundle.manifest("complete");
  return {bundle.files()};
}

}  // namespace sparc
