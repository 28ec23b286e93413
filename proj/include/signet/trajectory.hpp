#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signet/analysis.hpp"
#include "signet/dynamics.hpp"
#include "signet/signed_graph.hpp"

namespace signet {

// State magnitude at which a trial is cut short before double precision
// overflows; runs that hit it are reported as diverged.
inline constexpr double kMagnitudeGuard = 1e12;

enum class Termination {
  completed,         // reached the horizon
  spread_threshold,  // spread exceeded the configured divergence threshold
  magnitude_guard,   // a state magnitude exceeded kMagnitudeGuard
  nonfinite_state,   // an update overflowed to inf/nan
};

std::string to_string(Termination term);

// One recorded slot: the metrics of the state at time t plus the events that
// were applied when stepping from it. Event fields are -1 on a final slot
// (no outgoing step).
struct SlotRecord {
  std::int64_t t = 0;
  SpreadMetrics metrics;
  int b_bit = -1;
  int d_bit = -1;
  int m_edges = -1;
};

// Statistics over the tail window: every step from start_t onward.
struct TailStats {
  std::int64_t start_t = 0;
  std::int64_t steps = 0;
  std::vector<double> node_min;    // per node, over the tail
  std::vector<double> node_max;
  std::vector<double> block_mean;  // per block, averaged over the tail
  double spread_max = 0.0;
  double block_spread_max = 0.0;

  double max_node_oscillation() const;
  double block_separation() const;  // max pairwise gap between block means
};

struct Trajectory {
  std::vector<SlotRecord> slots;  // slot 0 always present; strictly increasing t
  TailStats tail;
  Termination termination = Termination::completed;
  std::int64_t last_t = 0;  // time of the last observed state
  double peak_spread = 0.0;
  std::int64_t horizon = 0;
  std::int64_t stride = 1;
  int block_count = 0;
  // For two-block partitions: tracking of the gap min(block 2) - max(block 1).
  bool gap_tracked = false;
  bool gap_nondecreasing = true;
  double initial_gap = 0.0;
  double final_gap = 0.0;
};

// Streaming recorder for one trial. Call observe() for each state a step is
// taken from (with the sampled events), observe_final() for a state the run
// stops at, then finish(). Records slot 0, every stride-th slot, and the
// final slot; accumulates tail statistics over every step t >= tail_start().
class TrajectoryBuilder {
 public:
  TrajectoryBuilder(PositiveClusterPartition part, std::int64_t horizon, std::int64_t stride,
                    const ClassificationCriteria& crit);

  std::int64_t tail_start() const { return tail_start_; }

  void observe(const StateVector& s, const SpreadMetrics& m, int b_bit, int d_bit, int m_edges);
  void observe_final(const StateVector& s, const SpreadMetrics& m, Termination term);
  // Ends the trajectory at the last observed slot (used when the step out of
  // it produced non-finite states); forces that slot into the record.
  void abort_after_last(Termination term);

  Trajectory finish();

 private:
  void accumulate(const StateVector& s, const SpreadMetrics& m);

  PositiveClusterPartition part_;
  Trajectory traj_;
  std::vector<double> block_mean_sum_;
  std::int64_t tail_start_ = 0;
  SlotRecord last_slot_;       // most recent observation, for abort_after_last
  bool last_recorded_ = false;
  bool finished_ = false;
};

// Runs a precomputed state sequence (states[t] is the state at slot t)
// through the same recording and early-stop logic a live trial uses.
Trajectory build_trajectory(const std::vector<std::vector<double>>& states,
                            const PositiveClusterPartition& part, std::int64_t stride,
                            const ClassificationCriteria& crit);

}  // namespace signet
