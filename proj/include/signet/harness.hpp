#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "signet/analysis.hpp"
#include "signet/assumptions.hpp"
#include "signet/dynamics.hpp"
#include "signet/schedule.hpp"
#include "signet/trajectory.hpp"

namespace signet {

// How each trial's initial state vector is produced.
struct InitialSpec {
  enum class Kind { explicit_values, uniform, two_block };
  Kind kind = Kind::uniform;
  std::vector<double> values;  // explicit_values
  double lo = 0.0;             // uniform bounds
  double hi = 1.0;
  double c0 = 1.0;             // two_block: block 1 starts at 0, block 2 at c0
};

struct ExperimentConfig {
  ExperimentConfig(GraphSchedule schedule, AttentionSchedule b, AttentionSchedule d)
      : schedule(std::move(schedule)), b(std::move(b)), d(std::move(d)) {}

  std::string name = "custom";
  GraphSchedule schedule;
  AttentionSchedule b;  // positive-attention means b_t
  AttentionSchedule d;  // negative-attention means d_t
  int window_k = 1;     // K for the window-union structural checks
  DynamicsParams params;
  std::int64_t horizon = 1;  // T: steps per trial
  int trials = 1;
  std::uint64_t seed = 0;
  std::int64_t stride = 1;  // recording stride for trajectories
  InitialSpec initial;
  ClassificationCriteria criteria;
  std::vector<int> required_assumptions;  // ids the config claims to satisfy

  int node_count() const { return schedule.node_count(); }
  // Structural validation that does not need the assumption report.
  void validate() const;
};

struct GapReport {
  bool tracked = false;  // only meaningful for two-block partitions
  bool nondecreasing = false;
  double initial = 0.0;
  double final = 0.0;
};

struct TrialResult {
  int trial_index = 0;
  Verdict verdict;
  Termination termination = Termination::completed;
  std::int64_t last_t = 0;
  double final_spread = 0.0;
  GapReport gap;
};

struct VerdictTally {
  std::int64_t count = 0;
  double frequency = 0.0;
  double std_error = 0.0;  // binomial standard error sqrt(f(1-f)/trials)
};

struct ExperimentSummary {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;
  std::array<VerdictTally, 5> tally{};  // indexed by VerdictKind
  std::vector<TrialResult> trial_results;
  AssumptionReport assumptions;
  bool required_ok = true;  // all ids in required_assumptions hold
  std::vector<int> required_assumptions;
  std::optional<TheoremConstants> constants;  // absent when alpha is out of range
  std::int64_t constants_windows = 0;
  double b_partial_sum = 0.0;  // sums of the attention means over the horizon
  double d_partial_sum = 0.0;
  bool b_summable = false;
  bool d_summable = false;

  const VerdictTally& tally_for(VerdictKind kind) const {
    return tally[static_cast<std::size_t>(kind)];
  }
  std::int64_t count(VerdictKind kind) const { return tally_for(kind).count; }
  double frequency(VerdictKind kind) const { return tally_for(kind).frequency; }
  // Reporting lattice: converged counts as the strongest verdict, so it is
  // included in both coarser tallies below.
  double frequency_deviation_or_stronger() const;
  double frequency_clustered_or_converged() const;
};

struct RunOptions {
  int threads = 1;  // 0 picks the hardware concurrency (capped at 8)
  // Called once per finished trial, serialized by a mutex; trials may finish
  // out of order when threads > 1.
  std::function<void(const TrialResult&, const Trajectory&)> trajectory_sink;
};

// One seeded trial: derive the trial rng, draw the initial state, then
// sample -> step until the horizon or an early stop. Deterministic given
// (cfg.seed, trial_index).
Trajectory run_trial(const ExperimentConfig& cfg, const PositiveClusterPartition& part,
                     int trial_index);

// Validates, checks assumptions, runs all trials, classifies and aggregates.
// Throws ConfigError when the schedule is not sign consistent (no partition).
ExperimentSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

// Canned experiment configurations reproducing the main regimes:
//   thm1a        static two-cluster graph, decaying d: state convergence
//   thm1b        two cliques + bipartite negative, constant d: divergence
//   thm2         positive spanning tree, rare negative events: deviation consensus
//   thm3         negative weakly-connected graph, scarce b: divergence
//   thm4         periodic two-cluster schedule, decaying d: clustering
//   flip-compare thm1b topology for contrasting the two update models
ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Bisection for the largest constant value of the schedule named by `knob`
// ("b" or "d") at which `target` still occurs with frequency >= min_frequency.
// Assumes the frequency is monotone decreasing in the value; lo must satisfy
// the predicate. Each probe runs `probe_trials` trials.
double locate_attention_threshold(const ExperimentConfig& base, const std::string& knob,
                                  VerdictKind target, double min_frequency, double lo, double hi,
                                  int rounds, int probe_trials);

// Per-trial trajectory table: t,h,H,spread,theta_1..theta_Tp,B,D,m_edges.
// Event columns are empty on final rows (no outgoing step).
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace signet
