#include "signet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "signet/errors.hpp"
#include "signet/rng.hpp"
#include "signet/sampling.hpp"

namespace signet {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw ConfigError("failed to format a floating-point value");
  return std::string(buf, ptr);
}

std::vector<double> resolve_initial(const InitialSpec& init, int n,
                                    const PositiveClusterPartition& part, std::mt19937_64& rng) {
  std::vector<double> values(static_cast<std::size_t>(n), 0.0);
  switch (init.kind) {
    case InitialSpec::Kind::explicit_values:
      if (static_cast<int>(init.values.size()) != n)
        throw ConfigError("explicit initial state must list exactly n values");
      return init.values;
    case InitialSpec::Kind::uniform:
      for (double& v : values) v = init.lo + (init.hi - init.lo) * uniform_unit(rng);
      return values;
    case InitialSpec::Kind::two_block: {
      if (part.block_count() != 2)
        throw ConfigError("two-block initial state needs exactly two positive clusters");
      for (int node : part.blocks[1]) values[static_cast<std::size_t>(node - 1)] = init.c0;
      return values;
    }
  }
  throw ConfigError("unhandled initial state kind");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (horizon < 1) throw ConfigError("horizon T must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (stride < 1) throw ConfigError("stride must be >= 1");
  if (window_k < 1) throw ConfigError("window length K must be >= 1");
  if (!(params.alpha > 0.0)) throw ConfigError("alpha must be > 0");
  if (!(params.beta > 0.0)) throw ConfigError("beta must be > 0");
  if (!(criteria.eps > 0.0)) throw ConfigError("criteria.eps must be > 0");
  if (!(criteria.divergence_threshold > 0.0))
    throw ConfigError("criteria.divergence_threshold must be > 0");
  if (criteria.tail_window < 0) throw ConfigError("criteria.tail_window must be >= 0");
  if (criteria.sep < 0.0) throw ConfigError("criteria.sep must be >= 0");
  switch (initial.kind) {
    case InitialSpec::Kind::explicit_values:
      if (static_cast<int>(initial.values.size()) != node_count())
        throw ConfigError("explicit initial state must list exactly n values");
      break;
    case InitialSpec::Kind::uniform:
      if (!(initial.lo <= initial.hi)) throw ConfigError("initial uniform needs lo <= hi");
      break;
    case InitialSpec::Kind::two_block:
      if (!(initial.c0 > 0.0)) throw ConfigError("two-block initial offset c0 must be > 0");
      break;
  }
  for (int id : required_assumptions)
    if (id < 1 || id > 9)
      throw ConfigError("required assumption id out of range: " + std::to_string(id));
}

double ExperimentSummary::frequency_deviation_or_stronger() const {
  return frequency(VerdictKind::converged) + frequency(VerdictKind::deviation_consensus);
}

double ExperimentSummary::frequency_clustered_or_converged() const {
  return frequency(VerdictKind::converged) + frequency(VerdictKind::clustered);
}

Trajectory run_trial(const ExperimentConfig& cfg, const PositiveClusterPartition& part,
                     int trial_index) {
  std::mt19937_64 rng = make_trial_rng(cfg.seed, static_cast<std::uint64_t>(trial_index));
  StateVector state;
  state.values = resolve_initial(cfg.initial, cfg.node_count(), part, rng);
  state.t = 0;

  TrajectoryBuilder builder(part, cfg.horizon, cfg.stride, cfg.criteria);
  InteractionGraph events;
  StateVector next;
  while (true) {
    const SpreadMetrics m = spread_metrics(state, part);
    if (state.t >= cfg.horizon) {
      builder.observe_final(state, m, Termination::completed);
      break;
    }
    if (m.spread > cfg.criteria.divergence_threshold) {
      builder.observe_final(state, m, Termination::spread_threshold);
      break;
    }
    if (std::max(std::abs(m.min_state), std::abs(m.max_state)) > kMagnitudeGuard) {
      builder.observe_final(state, m, Termination::magnitude_guard);
      break;
    }
    sample_interaction_graph(cfg.schedule, state.t, rng, events);
    const bool b_bit = sample_attention(cfg.b, state.t, rng);
    const bool d_bit = sample_attention(cfg.d, state.t, rng);
    builder.observe(state, m, b_bit ? 1 : 0, d_bit ? 1 : 0, static_cast<int>(events.arcs.size()));
    try {
      step_into(state, events, b_bit, d_bit, cfg.params, next);
    } catch (const NonFiniteStateError&) {
      builder.abort_after_last(Termination::nonfinite_state);
      break;
    }
    std::swap(state, next);
  }
  return builder.finish();
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
  cfg.validate();
  AssumptionReport report = check_assumptions(cfg.schedule, cfg.horizon, cfg.window_k);
  if (!report.partition)
    throw ConfigError("experiment needs a sign-consistent schedule (no positive-cluster "
                      "partition without it)");
  const PositiveClusterPartition part = *report.partition;

  ExperimentSummary summary;
  summary.name = cfg.name;
  summary.seed = cfg.seed;
  summary.trials = cfg.trials;
  summary.required_assumptions = cfg.required_assumptions;
  summary.required_ok = report.all_hold(cfg.required_assumptions);
  summary.assumptions = std::move(report);
  summary.b_partial_sum = cfg.b.partial_sum(cfg.horizon);
  summary.d_partial_sum = cfg.d.partial_sum(cfg.horizon);
  summary.b_summable = cfg.b.summable();
  summary.d_summable = cfg.d.summable();

  const int n = cfg.node_count();
  if (cfg.params.alpha > 0.0 && cfg.params.alpha < 1.0 / (n - 1)) {
    const std::int64_t k0 = static_cast<std::int64_t>(2 * n - 3) * cfg.window_k;
    summary.constants_windows = std::max<std::int64_t>(1, cfg.horizon / k0);
    summary.constants = theorem_constants(n, cfg.window_k, cfg.params.alpha, cfg.params.beta,
                                          summary.assumptions.p_star, cfg.b, cfg.d,
                                          summary.constants_windows);
  }

  summary.trial_results.assign(static_cast<std::size_t>(cfg.trials), TrialResult{});

  std::atomic<int> next_trial{0};
  std::mutex sink_mutex;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const int idx = next_trial.fetch_add(1, std::memory_order_relaxed);
        if (idx >= cfg.trials) return;
        Trajectory traj = run_trial(cfg, part, idx);
        TrialResult result;
        result.trial_index = idx;
        result.verdict = classify_trajectory(traj, part, cfg.criteria);
        result.termination = traj.termination;
        result.last_t = traj.last_t;
        result.final_spread = traj.slots.back().metrics.spread;
        result.gap = GapReport{traj.gap_tracked, traj.gap_tracked && traj.gap_nondecreasing,
                               traj.initial_gap, traj.final_gap};
        summary.trial_results[static_cast<std::size_t>(idx)] = result;
        if (options.trajectory_sink) {
          const std::lock_guard<std::mutex> lock(sink_mutex);
          options.trajectory_sink(result, traj);
        }
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };

  int threads = options.threads;
  if (threads == 0)
    threads = std::clamp<int>(static_cast<int>(std::thread::hardware_concurrency()), 1, 8);
  threads = std::clamp(threads, 1, cfg.trials);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads - 1));
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const TrialResult& r : summary.trial_results)
    ++summary.tally[static_cast<std::size_t>(r.verdict.kind)].count;
  for (auto& t : summary.tally) {
    t.frequency = static_cast<double>(t.count) / static_cast<double>(cfg.trials);
    t.std_error = std::sqrt(t.frequency * (1.0 - t.frequency) / static_cast<double>(cfg.trials));
  }
  return summary;
}

double locate_attention_threshold(const ExperimentConfig& base, const std::string& knob,
                                  VerdictKind target, double min_frequency, double lo, double hi,
                                  int rounds, int probe_trials) {
  if (!(lo < hi)) throw ConfigError("bisection needs lo < hi");
  auto frequency_at = [&](double value) {
    ExperimentConfig cfg = base;
    if (knob == "b")
      cfg.b = AttentionSchedule::constant(value);
    else if (knob == "d")
      cfg.d = AttentionSchedule::constant(value);
    else
      throw ConfigError("bisection knob must be \"b\" or \"d\"");
    cfg.trials = probe_trials;
    return run_experiment(cfg).frequency(target);
  };
  if (frequency_at(lo) < min_frequency)
    throw ConfigError("bisection lower bound misses the target frequency");
  if (frequency_at(hi) >= min_frequency) return hi;
  double good = lo, bad = hi;
  for (int r = 0; r < rounds; ++r) {
    const double mid = 0.5 * (good + bad);
    (frequency_at(mid) >= min_frequency ? good : bad) = mid;
  }
  return good;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,h,H,spread";
  for (int j = 1; j <= traj.block_count; ++j) out << ",theta_" << j;
  out << ",B,D,m_edges\n";
  for (const SlotRecord& slot : traj.slots) {
    out << slot.t << ',' << format_double(slot.metrics.min_state) << ','
        << format_double(slot.metrics.max_state) << ',' << format_double(slot.metrics.spread);
    for (double theta : slot.metrics.block_spread) out << ',' << format_double(theta);
    if (slot.m_edges >= 0)
      out << ',' << slot.b_bit << ',' << slot.d_bit << ',' << slot.m_edges;
    else
      out << ",,,";
    out << '\n';
  }
}

}  // namespace signet
