#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparc/benchmatch.hpp"
#include "sparc/consensus.hpp"
#include "sparc/mcl.hpp"
#include "sparc/refine.hpp"

namespace sparc {

/// An error raised inside a named pipeline stage.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what)
      : std::runtime_error("stage '" + stage + "' failed: " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// One differently scored (physical, functional) pair feeding consensus.
struct ScoredRun {
  std::string label;
  std::filesystem::path physical_path;
  std::filesystem::path functional_path;
  std::optional<std::filesystem::path> clusters_path;  // unset: same source as the main run
};

enum class ClusterSource { BuiltinMcl, File };

struct PipelineConfig {
  std::filesystem::path physical_path;
  std::filesystem::path functional_path;
  std::vector<std::filesystem::path> benchmark_paths;
  ClusterSource cluster_source = ClusterSource::BuiltinMcl;
  std::filesystem::path clusters_path;
  double default_weight = 1.0;
  MclConfig mcl;
  SparcConfig sparc;
  MatchConfig match;
  ConsensusConfig consensus;
  std::vector<ScoredRun> consensus_runs;  // empty or exactly three
  double t_ce = 0.40;
  std::vector<double> profile_thresholds{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  bool random_control = true;
  bool include_rejected = false;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;
  /// Directory that relative input paths are resolved against.
  std::filesystem::path base_dir;
};

/// Parses the YAML run-config. Relative paths resolve against `base_dir`.
PipelineConfig parse_pipeline_config(const std::string& yaml_text, const std::filesystem::path& base_dir = {});
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Canonical YAML form of the config, minus output_dir. Its hash is the
/// config_hash recorded in every report.
std::string canonical_config(const PipelineConfig& config);
std::string config_hash(const PipelineConfig& config);

struct PipelineOutcome {
  std::vector<std::string> files;  // written, relative to output_dir, in order
};

/// Runs cluster -> SPARC -> evaluate (-> consensus) and writes the report
/// bundle into config.output_dir. On failure a MANIFEST marked incomplete
/// is written and StageError is thrown.
PipelineOutcome run_pipeline(const PipelineConfig& config);

}  // namespace sparc
