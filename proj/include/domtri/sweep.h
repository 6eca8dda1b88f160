#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "domtri/analysis.h"

namespace domtri {

/// Flat "key = value" config. Integer lists accept "a..b", "a,b,c" or a
/// single value. Unknown keys are parse errors.
///
///     seed = 1
///     families = diamond_chain, three_tree
///     three_tree.n = 4..40
///     three_tree.reps = 2
struct SweepConfig {
  std::uint64_t seed = 1;
  std::vector<std::string> families;

  std::vector<int> diamond_chain_k{2, 3, 4};
  std::vector<int> k4_chain_k{2, 3, 4, 5};
  std::vector<int> three_tree_n{4, 8, 12, 16, 20, 24, 28, 30};
  int three_tree_reps = 2;
  std::vector<int> eulerian_t{1, 2, 3, 4, 5, 6, 7, 8};
  int eulerian_reps = 5;
  std::vector<int> random_n{4, 8, 12, 16, 20, 24, 30};
  int random_reps = 2;
  int random_flips = 200;
  std::vector<int> near_n{4, 8, 12, 16, 20, 24};
  int near_reps = 2;
  std::vector<int> min_degree5_n{12, 14, 16, 18, 20};
  int min_degree5_reps = 1;
  int min_degree5_budget = 4000;
  std::vector<int> odd_degree_n{12, 16, 20, 24};
  int odd_degree_reps = 1;
  int odd_degree_budget = 4000;
  std::vector<int> connected_n{6, 10, 14, 18};
  int connected_reps = 2;
  int connected_removals = 6;
  std::vector<std::string> named{"triangle", "k4", "octahedron", "icosahedron"};

  AnalysisOptions oracle;
  int threads = 1;
  bool timings = false;
  std::string structured_path;
  std::string tabular_path;

  /// Canonical text; parse_sweep_config(to_text()) reproduces the config.
  std::string to_text() const;
};

const std::vector<std::string>& known_families();

SweepConfig parse_sweep_config(std::string_view text);
SweepConfig read_sweep_config(const std::filesystem::path& path);

/// Replaces the seed with DOMTRI_SEED when that variable is set.
/// Throws ParseError on a malformed value.
void apply_seed_override(SweepConfig& cfg);

/// Generates every graph of the configured families, in config order.
std::vector<GraphItem> build_corpus(const SweepConfig& cfg);

/// Analyses the corpus on cfg.threads workers; output keeps corpus order.
std::vector<BoundReport> run_sweep(const SweepConfig& cfg);
std::vector<BoundReport> analyze_all(const std::vector<GraphItem>& items, const AnalysisOptions& options,
                                     int threads);

}  // namespace domtri
