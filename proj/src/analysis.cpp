#include "signet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signet/errors.hpp"
#include "signet/trajectory.hpp"

namespace signet {

SpreadMetrics spread_metrics(const StateVector& s, const PositiveClusterPartition& part) {
  SpreadMetrics m;
  const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
  m.min_state = *lo;
  m.max_state = *hi;
  m.spread = m.max_state - m.min_state;
  m.block_min.reserve(part.blocks.size());
  m.block_max.reserve(part.blocks.size());
  m.block_spread.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    double bmin = std::numeric_limits<double>::infinity();
    double bmax = -std::numeric_limits<double>::infinity();
    for (int node : block) {
      const double v = s.values[static_cast<std::size_t>(node - 1)];
      bmin = std::min(bmin, v);
      bmax = std::max(bmax, v);
    }
    m.block_min.push_back(bmin);
    m.block_max.push_back(bmax);
    m.block_spread.push_back(bmax - bmin);
  }
  return m;
}

bool TheoremConstants::x_minus_y_in_unit_interval() const {
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double v = x[m] - y[m];
    if (v < 0.0 || v > 1.0) return false;
  }
  return true;
}

double TheoremConstants::min_x_minus_y() const {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < x.size(); ++m) worst = std::min(worst, x[m] - y[m]);
  return worst;
}

double TheoremConstants::min_j() const {
  return j.empty() ? 0.0 : *std::min_element(j.begin(), j.end());
}

double TheoremConstants::sum_x_minus_y() const {
  double sum = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m) sum += x[m] - y[m];
  return sum;
}

double TheoremConstants::sum_w() const {
  double sum = 0.0;
  for (double v : w) sum += v;
  return sum;
}

double TheoremConstants::first_w_over_j() const {
  if (w.empty() || j.front() == 0.0) return 0.0;
  return w.front() / j.front();
}

double TheoremConstants::last_w_over_j() const {
  if (w.empty() || j.back() == 0.0) return 0.0;
  return w.back() / j.back();
}

TheoremConstants theorem_constants(int n, int window_k, double alpha, double beta, double p_star,
                                   const AttentionSchedule& b, const AttentionSchedule& d,
                                   std::int64_t window_count) {
  if (n < 3) throw ConfigError("theorem constants need n >= 3");
  if (window_k < 1) throw ConfigError("window length K must be >= 1");
  if (window_count < 1) throw ConfigError("need at least one window of constants");
  if (!(alpha > 0.0) || !(alpha < 1.0 / (n - 1))) throw InvalidAlphaError(alpha, n);

  TheoremConstants c;
  c.lambda_star = 1.0 - alpha * (n - 1);
  c.rho_star = std::min(alpha, c.lambda_star);
  c.k0 = static_cast<std::int64_t>(2 * n - 3) * window_k;

  const double front = std::pow(p_star, n - 1) * std::pow(c.rho_star, static_cast<double>(c.k0)) / 2.0;
  const double blowup = std::pow(1.0 + 2.0 * beta * (n - 1), static_cast<double>(c.k0));

  c.x.reserve(static_cast<std::size_t>(window_count));
  c.y.reserve(static_cast<std::size_t>(window_count));
  c.j.reserve(static_cast<std::size_t>(window_count));
  c.w.reserve(static_cast<std::size_t>(window_count));
  for (std::int64_t m = 0; m < window_count; ++m) {
    double prod_b_times = 1.0;   // prod of b_t (1 - d_t)
    double prod_keep = 1.0;      // prod of (1 - d_t)
    double prod_b = 1.0;         // prod of b_t
    double sum_d = 0.0;
    for (std::int64_t t = m * c.k0; t < (m + 1) * c.k0; ++t) {
      const double bt = b.value_at(t);
      const double dt = d.value_at(t);
      prod_b_times *= bt * (1.0 - dt);
      prod_keep *= 1.0 - dt;
      prod_b *= bt;
      sum_d += dt;
    }
    c.x.push_back(front * prod_b_times);
    c.y.push_back(blowup * (1.0 - prod_keep));
    c.j.push_back(prod_b);
    c.w.push_back(sum_d);
  }
  return c;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::converged: return "converged";
    case VerdictKind::deviation_consensus: return "deviation-consensus";
    case VerdictKind::clustered: return "clustered";
    case VerdictKind::diverged: return "diverged";
    case VerdictKind::undecided: return "undecided";
  }
  return "unknown";
}

Verdict classify_trajectory(const Trajectory& traj, const PositiveClusterPartition& part,
                            const ClassificationCriteria& crit) {
  Verdict verdict;
  auto& ev = verdict.evidence;
  ev.tail_start = traj.tail.start_t;
  ev.tail_steps = traj.tail.steps;
  ev.max_node_oscillation = traj.tail.max_node_oscillation();
  ev.tail_spread_max = traj.tail.spread_max;
  ev.tail_block_spread_max = traj.tail.block_spread_max;
  ev.block_tail_means = traj.tail.block_mean;
  ev.block_separation = traj.tail.block_separation();
  ev.peak_spread = traj.peak_spread;

  if (traj.termination != Termination::completed ||
      traj.peak_spread > crit.divergence_threshold) {
    verdict.kind = VerdictKind::diverged;
    return verdict;
  }
  if (traj.tail.steps == 0) {
    verdict.kind = VerdictKind::undecided;
    return verdict;
  }
  if (ev.max_node_oscillation < crit.eps) {
    verdict.kind = VerdictKind::converged;
    return verdict;
  }
  if (ev.tail_spread_max < crit.eps) {
    verdict.kind = VerdictKind::deviation_consensus;
    return verdict;
  }
  if (part.block_count() >= 2 && ev.tail_block_spread_max < crit.eps &&
      ev.block_separation > crit.resolved_sep()) {
    verdict.kind = VerdictKind::clustered;
    return verdict;
  }
  verdict.kind = VerdictKind::undecided;
  return verdict;
}

}  // namespace signet
