#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "signet/harness.hpp"

namespace signet {

// Parses the JSON config file at `path`; throws ConfigError on a missing
// file or malformed JSON.
nlohmann::json load_config_json(const std::filesystem::path& path);

// Builds a validated experiment from a config object. Keys:
//   n, graph {mode, arcs | graphs | files}, q_all | q, alpha, beta, model,
//   b {kind, c, gamma, values, tail}, d {...}, T, trials, seed, stride, K,
//   initial {kind, values | lo,hi | c0}, criteria {eps, tail_window,
//   divergence_threshold, sep}, require [assumption ids], name.
// Relative graph file paths resolve against base_dir.
ExperimentConfig config_from_json(const nlohmann::json& j,
                                  const std::filesystem::path& base_dir = {});

// Config object reproducing cfg (graphs inlined as arc lists); feeding it
// back through config_from_json yields an equivalent experiment.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

// Applies one dotted-path assignment like "d.c=0.3" (an optional leading
// "env." is accepted and stripped). The value is parsed as JSON when
// possible and kept as a raw string otherwise.
void apply_override(nlohmann::json& config, const std::string& assignment);

// Full experiment report: verdict tallies, per-trial results, assumption
// report, window-constants report, attention sums, and the config echo.
nlohmann::json summary_to_json(const ExperimentSummary& summary,
                               const nlohmann::json& config_echo);

// Deterministic serialization used for all emitted JSON files.
std::string dump_json(const nlohmann::json& j);

}  // namespace signet
