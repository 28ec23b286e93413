#include "signet/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signet/errors.hpp"

namespace signet {

namespace {

// Tolerance for the two-block gap monotonicity flag: the update is monotone
// in exact arithmetic, so only rounding-scale dips are forgiven.
double gap_tolerance(double gap) { return 1e-9 * std::max(1.0, std::abs(gap)); }

// Steps covered by the tail window. An explicit tail_window counts recorded
// slots (so stride does not change the verdict); the default covers the last
// 10% of the horizon, at least 1000 steps, at most the whole run.
std::int64_t tail_length_steps(std::int64_t horizon, std::int64_t stride,
                               const ClassificationCriteria& crit) {
  if (crit.tail_window > 0) return std::min(crit.tail_window * stride, horizon + 1);
  return std::clamp<std::int64_t>(std::max<std::int64_t>(horizon / 10, 1000),
                                  std::int64_t{1}, horizon + 1);
}

}  // namespace

std::string to_string(Termination term) {
  switch (term) {
    case Termination::completed: return "completed";
    case Termination::spread_threshold: return "spread-threshold";
    case Termination::magnitude_guard: return "magnitude-guard";
    case Termination::nonfinite_state: return "nonfinite-state";
  }
  return "unknown";
}

double TailStats::max_node_oscillation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < node_min.size(); ++i)
    worst = std::max(worst, node_max[i] - node_min[i]);
  return worst;
}

double TailStats::block_separation() const {
  if (block_mean.size() < 2) return 0.0;
  const auto [lo, hi] = std::minmax_element(block_mean.begin(), block_mean.end());
  return *hi - *lo;
}

TrajectoryBuilder::TrajectoryBuilder(PositiveClusterPartition part, std::int64_t horizon,
                                     std::int64_t stride, const ClassificationCriteria& crit)
    : part_(std::move(part)) {
  if (horizon < 1) throw ConfigError("horizon must be >= 1");
  if (stride < 1) throw ConfigError("recording stride must be >= 1");
  traj_.horizon = horizon;
  traj_.stride = stride;
  traj_.block_count = part_.block_count();
  traj_.gap_tracked = part_.block_count() == 2;
  tail_start_ = horizon + 1 - tail_length_steps(horizon, stride, crit);
  const std::size_t n = part_.block_index.size();
  traj_.tail.start_t = tail_start_;
  traj_.tail.node_min.assign(n, std::numeric_limits<double>::infinity());
  traj_.tail.node_max.assign(n, -std::numeric_limits<double>::infinity());
  block_mean_sum_.assign(static_cast<std::size_t>(part_.block_count()), 0.0);
}

void TrajectoryBuilder::accumulate(const StateVector& s, const SpreadMetrics& m) {
  traj_.last_t = s.t;
  traj_.peak_spread = std::max(traj_.peak_spread, m.spread);

  if (traj_.gap_tracked) {
    const double gap = m.block_min[1] - m.block_max[0];
    if (s.t == 0) {
      traj_.initial_gap = gap;
    } else if (gap < traj_.final_gap - gap_tolerance(traj_.final_gap)) {
      traj_.gap_nondecreasing = false;
    }
    traj_.final_gap = gap;
  }

  if (s.t < tail_start_) return;
  auto& tail = traj_.tail;
  ++tail.steps;
  tail.spread_max = std::max(tail.spread_max, m.spread);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    tail.node_min[i] = std::min(tail.node_min[i], s.values[i]);
    tail.node_max[i] = std::max(tail.node_max[i], s.values[i]);
  }
  for (double theta : m.block_spread)
    tail.block_spread_max = std::max(tail.block_spread_max, theta);
  for (std::size_t j = 0; j < part_.blocks.size(); ++j) {
    double sum = 0.0;
    for (int node : part_.blocks[j]) sum += s.values[static_cast<std::size_t>(node - 1)];
    block_mean_sum_[j] += sum / static_cast<double>(part_.blocks[j].size());
  }
}

void TrajectoryBuilder::observe(const StateVector& s, const SpreadMetrics& m, int b_bit,
                                int d_bit, int m_edges) {
  accumulate(s, m);
  last_slot_ = SlotRecord{s.t, m, b_bit, d_bit, m_edges};
  last_recorded_ = s.t % traj_.stride == 0;
  if (last_recorded_) traj_.slots.push_back(last_slot_);
}

void TrajectoryBuilder::observe_final(const StateVector& s, const SpreadMetrics& m,
                                      Termination term) {
  accumulate(s, m);
  traj_.slots.push_back(SlotRecord{s.t, m, -1, -1, -1});
  last_recorded_ = true;
  traj_.termination = term;
}

void TrajectoryBuilder::abort_after_last(Termination term) {
  if (!last_recorded_) traj_.slots.push_back(last_slot_);
  last_recorded_ = true;
  traj_.termination = term;
}

Trajectory TrajectoryBuilder::finish() {
  if (finished_) throw ConfigError("trajectory builder finished twice");
  finished_ = true;
  auto& tail = traj_.tail;
  tail.block_mean.assign(block_mean_sum_.size(), 0.0);
  if (tail.steps > 0) {
    for (std::size_t j = 0; j < block_mean_sum_.size(); ++j)
      tail.block_mean[j] = block_mean_sum_[j] / static_cast<double>(tail.steps);
  }
  if (tail.steps == 0) {
    std::fill(tail.node_min.begin(), tail.node_min.end(), 0.0);
    std::fill(tail.node_max.begin(), tail.node_max.end(), 0.0);
  }
  return std::move(traj_);
}

Trajectory build_trajectory(const std::vector<std::vector<double>>& states,
                            const PositiveClusterPartition& part, std::int64_t stride,
                            const ClassificationCriteria& crit) {
  if (states.empty()) throw ConfigError("state sequence must be non-empty");
  const std::int64_t horizon = static_cast<std::int64_t>(states.size()) - 1;
  TrajectoryBuilder builder(part, std::max<std::int64_t>(horizon, 1), stride, crit);
  StateVector s;
  for (std::int64_t t = 0; t <= horizon; ++t) {
    s.values = states[static_cast<std::size_t>(t)];
    s.t = t;
    const SpreadMetrics m = spread_metrics(s, part);
    if (t == horizon) {
      builder.observe_final(s, m, Termination::completed);
      break;
    }
    if (m.spread > crit.divergence_threshold) {
      builder.observe_final(s, m, Termination::spread_threshold);
      break;
    }
    if (std::max(std::abs(m.min_state), std::abs(m.max_state)) > kMagnitudeGuard) {
      builder.observe_final(s, m, Termination::magnitude_guard);
      break;
    }
    builder.observe(s, m, 0, 0, 0);
  }
  return builder.finish();
}

}  // namespace signet
