#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signet/dynamics.hpp"
#include "signet/schedule.hpp"
#include "signet/signed_graph.hpp"

namespace signet {

struct Trajectory;  // defined in trajectory.hpp

// Instantaneous extremes of a state vector, overall and per partition block.
struct SpreadMetrics {
  double min_state = 0.0;  // h
  double max_state = 0.0;  // H
  double spread = 0.0;     // H - h
  std::vector<double> block_min;
  std::vector<double> block_max;
  std::vector<double> block_spread;  // theta_j per partition block
};

SpreadMetrics spread_metrics(const StateVector& s, const PositiveClusterPartition& part);

// The contraction/expansion constants the convergence statements are phrased
// in, evaluated per length-K0 window m = 0..window_count-1 with K0 = (2n-3)K:
//   x[m] = (p_*^{n-1} rho_*^{K0} / 2) * prod_t b_t (1 - d_t)
//   y[m] = (1 + 2 beta (n-1))^{K0} * (1 - prod_t (1 - d_t))
//   j[m] = prod_t b_t
//   w[m] = sum_t d_t
struct TheoremConstants {
  double rho_star = 0.0;     // min{alpha, 1 - (n-1) alpha}
  double lambda_star = 0.0;  // 1 - (n-1) alpha
  std::int64_t k0 = 0;
  std::vector<double> x, y, j, w;

  // True when x[m]-y[m] stays within [0,1] for every computed window.
  bool x_minus_y_in_unit_interval() const;
  // Smallest x[m]-y[m]; a value bounded away from zero certifies that the
  // series sum_m (x[m]-y[m]) grows without bound.
  double min_x_minus_y() const;
  double min_j() const;
  double sum_x_minus_y() const;
  double sum_w() const;
  // w[m]/j[m] at the first/last computed window (0 when j vanishes there).
  double first_w_over_j() const;
  double last_w_over_j() const;
};

// Requires alpha in the open interval (0, 1/(n-1)) and window_count >= 1.
TheoremConstants theorem_constants(int n, int window_k, double alpha, double beta, double p_star,
                                   const AttentionSchedule& b, const AttentionSchedule& d,
                                   std::int64_t window_count);

enum class VerdictKind { converged, deviation_consensus, clustered, diverged, undecided };

std::string to_string(VerdictKind kind);

// Finite-horizon certificates for the asymptotic verdicts. tail_window is
// measured in recorded slots; 0 picks the default of the last 10% of slots,
// at least 1000. sep = 0 picks the default 10*eps.
struct ClassificationCriteria {
  double eps = 1e-6;
  std::int64_t tail_window = 0;
  double divergence_threshold = 1e6;
  double sep = 0.0;

  double resolved_sep() const { return sep > 0.0 ? sep : 10.0 * eps; }
};

// The tail statistics a verdict was based on, kept for reporting.
struct VerdictEvidence {
  std::int64_t tail_start = 0;  // first time slot in the tail window
  std::int64_t tail_steps = 0;  // steps accumulated into the tail statistics
  double max_node_oscillation = 0.0;
  double tail_spread_max = 0.0;
  double tail_block_spread_max = 0.0;
  std::vector<double> block_tail_means;
  double block_separation = 0.0;  // max pairwise gap between block tail means
  double peak_spread = 0.0;       // largest spread seen over the whole run
};

struct Verdict {
  VerdictKind kind = VerdictKind::undecided;
  VerdictEvidence evidence;
};

// Priority order: diverged (spread ever above the threshold, or the run was
// cut short by non-finite or runaway states), then converged (every node's
// oscillation over the tail stays below eps), then deviation-consensus (the
// spread stays below eps over the tail even if nodes drift together), then
// clustered (>= 2 blocks, every block's tail spread below eps, and two block
// tail means separated by more than sep), else undecided.
Verdict classify_trajectory(const Trajectory& traj, const PositiveClusterPartition& part,
                            const ClassificationCriteria& crit);

}  // namespace signet
