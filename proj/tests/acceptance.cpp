// End-to-end acceptance gate: each criterion prints one [PASS]/[FAIL] line and
// the process exits with the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "signet/analysis.hpp"
#include "signet/assumptions.hpp"
#include "signet/config_io.hpp"
#include "signet/dynamics.hpp"
#include "signet/harness.hpp"
#include "signet/rng.hpp"
#include "signet/sampling.hpp"
#include "signet/signed_graph.hpp"

using namespace signet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

std::vector<std::pair<int, int>> pairs_of(const SignedDigraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const Arc& a : g.arcs()) pairs.emplace_back(a.tail, a.head);
  return pairs;
}

// ---------------------------------------------------------------------------
// 1. Structural analyses agree with brute-force closures on random graphs.
Outcome criterion_graph_oracles() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xAC01);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int mismatches = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = 3 + iter % 5;  // 3..7
    const SignedDigraph g = oracles::random_graph(rng, n, 0.05 + 0.55 * unit(rng));
    const auto pairs = pairs_of(g);

    const PositiveClusterPartition part = positive_cluster_partition(g);
    if (part.blocks != oracles::positive_components(g)) ++mismatches;
    bool index_ok = true;
    for (int block = 0; block < part.block_count(); ++block)
      for (int node : part.blocks[static_cast<std::size_t>(block)])
        index_ok = index_ok && part.block_of(node) == block;
    if (!index_ok) ++mismatches;

    const ConnectivityReport conn = connectivity(g);
    if (conn.strong != oracles::strongly_connected(n, pairs)) ++mismatches;
    if (conn.weak != oracles::weakly_connected(n, pairs)) ++mismatches;
    if (conn.center != oracles::center_node(n, pairs)) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 10.0,
          format("1000 graphs, %d mismatches, %.2fs (budget 10s)", mismatches, elapsed)};
}

// ---------------------------------------------------------------------------
// 2. Per-step invariants over randomized states, graphs, and parameters:
//    (a) with no negative events the state hull never grows (both models),
//    (b) one step widens the spread at most by the factor 1 + 2*beta*(n-1),
//    (c) one step narrows it at most to the factor 1 - 2*(n-1)*alpha,
//    (d) the relative model commutes with translating every state,
//    (e) a step over an empty interaction graph changes nothing (both models).
//    The two bound checks apply to the relative model; the flip rule reacts
//    to absolute positions, so no translation-free bound of this shape can
//    hold for it (see the counterexamples in the dynamics unit tests).
Outcome criterion_step_invariants() {
  std::mt19937_64 rng(0xAC02);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int iterations = 100000;
  long bad_hull = 0, bad_upper = 0, bad_lower = 0, bad_shift = 0, bad_empty = 0;

  for (int iter = 0; iter < iterations; ++iter) {
    const int n = 3 + iter % 6;  // 3..8
    const SignedDigraph g = oracles::random_graph(rng, n, 0.05 + 0.55 * unit(rng));
    const InteractionGraph events = oracles::make_events(n, 0, oracles::random_subset(rng, g, 0.7));
    StateVector s;
    s.values = oracles::random_state(rng, n);
    const double beta = 0.1 + 1.1 * unit(rng);
    const bool B = unit(rng) < 0.5;
    const bool D = unit(rng) < 0.5;
    const UpdateModel model = (iter % 2 == 0) ? UpdateModel::relative : UpdateModel::flip;

    const double lo = *std::min_element(s.values.begin(), s.values.end());
    const double hi = *std::max_element(s.values.begin(), s.values.end());
    const double spread = hi - lo;

    {  // (a) no negative events: the hull is forward invariant
      const DynamicsParams p{unit(rng) / (n - 1), beta, model};
      const StateVector out = step(s, events, B, false, p);
      const double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
      for (double v : out.values)
        if (v < lo - tol || v > hi + tol) {
          ++bad_hull;
          break;
        }
    }
    {  // (b)+(c) spread bounds and (d) translation invariance, relative model
      const DynamicsParams p{0.999 * unit(rng) / (2.0 * (n - 1)), beta, UpdateModel::relative};
      const StateVector out = step(s, events, B, D, p);
      const double out_spread = *std::max_element(out.values.begin(), out.values.end()) -
                                *std::min_element(out.values.begin(), out.values.end());
      const double upper = (1.0 + 2.0 * beta * (n - 1)) * spread;
      const double lower = (1.0 - 2.0 * (n - 1) * p.alpha) * spread;
      const double tol = 1e-12 * std::max(1.0, upper);
      if (out_spread > upper + tol) ++bad_upper;
      if (out_spread < lower - tol) ++bad_lower;

      const double c = -50.0 + 100.0 * unit(rng);
      StateVector shifted = s;
      for (double& v : shifted.values) v += c;
      const StateVector out_shifted = step(shifted, events, B, D, p);
      for (int i = 0; i < n; ++i)
        if (std::abs(out_shifted.values[static_cast<std::size_t>(i)] -
                     (out.values[static_cast<std::size_t>(i)] + c)) > 1e-9) {
          ++bad_shift;
          break;
        }
    }
    {  // (e) empty interaction graph: exact identity
      const InteractionGraph empty = oracles::make_events(n, 0, {});
      const DynamicsParams p{unit(rng) / (n - 1), beta, model};
      const StateVector out = step(s, empty, B, D, p);
      if (out.values != s.values) ++bad_empty;
    }
  }
  const long total = bad_hull + bad_upper + bad_lower + bad_shift + bad_empty;
  return {total == 0,
          format("%d steps: hull=%ld upper=%ld lower=%ld shift=%ld empty=%ld violations",
                 iterations, bad_hull, bad_upper, bad_lower, bad_shift, bad_empty)};
}

// ---------------------------------------------------------------------------
// 3. Static two-cluster topology, decaying negative attention: convergence.
Outcome criterion_convergence() {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentSummary summary = run_experiment(preset("thm1a"));
  const double elapsed = seconds_since(start);
  const double freq = summary.frequency(VerdictKind::converged);
  return {freq >= 0.95 && elapsed < 120.0,
          format("converged %lld/%d (%.3f, need >= 0.95), %.2fs (budget 120s)",
                 static_cast<long long>(summary.count(VerdictKind::converged)), summary.trials,
                 freq, elapsed)};
}

// ---------------------------------------------------------------------------
// 4. Two antagonistic blocks with persistent negative attention: every trial
//    diverges and the block gap never shrinks along the way.
Outcome criterion_divergence_gap() {
  const ExperimentSummary summary = run_experiment(preset("thm1b"));
  const double freq = summary.frequency(VerdictKind::diverged);
  int gap_ok = 0;
  for (const TrialResult& r : summary.trial_results)
    if (r.gap.tracked && r.gap.nondecreasing) ++gap_ok;
  const bool pass = freq == 1.0 && gap_ok == summary.trials;
  return {pass, format("diverged %lld/%d (need all), nondecreasing gap in %d/%d trials",
                       static_cast<long long>(summary.count(VerdictKind::diverged)),
                       summary.trials, gap_ok, summary.trials)};
}

// ---------------------------------------------------------------------------
// 5. Deviation consensus: the window constants must certify the regime before
//    any trial runs (difference within [0,1] and bounded away from zero, so
//    the window series diverges), then the trials must agree.
Outcome criterion_deviation_consensus() {
  const ExperimentConfig cfg = preset("thm2");
  const AssumptionReport report = check_assumptions(cfg.schedule, cfg.horizon, cfg.window_k);
  const int n = cfg.node_count();
  const std::int64_t k0 = static_cast<std::int64_t>(2 * n - 3) * cfg.window_k;
  const std::int64_t windows = std::max<std::int64_t>(1, cfg.horizon / k0);
  const TheoremConstants constants = theorem_constants(
      n, cfg.window_k, cfg.params.alpha, cfg.params.beta, report.p_star, cfg.b, cfg.d, windows);

  if (!constants.x_minus_y_in_unit_interval() || !(constants.min_x_minus_y() > 0.0)) {
    return {false, format("window constants reject the regime: min(x-y)=%.3g, in [0,1]: %s",
                          constants.min_x_minus_y(),
                          constants.x_minus_y_in_unit_interval() ? "yes" : "no")};
  }

  const ExperimentSummary summary = run_experiment(cfg);
  const double freq = summary.frequency_deviation_or_stronger();
  return {freq >= 0.95,
          format("min(x-y)=%.3g over %lld windows (series diverges), "
                 "deviation consensus or stronger %.3f (need >= 0.95)",
                 constants.min_x_minus_y(), static_cast<long long>(windows), freq)};
}

// ---------------------------------------------------------------------------
// 6. Negatively connected topology with scarce positive attention: divergence.
Outcome criterion_negative_divergence() {
  const ExperimentSummary summary = run_experiment(preset("thm3"));
  const double freq = summary.frequency(VerdictKind::diverged);
  return {freq >= 0.95, format("diverged %lld/%d (%.3f, need >= 0.95)",
                               static_cast<long long>(summary.count(VerdictKind::diverged)),
                               summary.trials, freq)};
}

// ---------------------------------------------------------------------------
// 7. Periodic two-cluster schedule: the runs settle into tight clusters (or
//    full convergence), with every block's tail spread below 1e-6.
Outcome criterion_clustering() {
  const ExperimentSummary summary = run_experiment(preset("thm4"));
  const double freq = summary.frequency_clustered_or_converged();
  int tight = 0, settled = 0;
  for (const TrialResult& r : summary.trial_results) {
    const VerdictKind kind = r.verdict.kind;
    if (kind != VerdictKind::clustered && kind != VerdictKind::converged) continue;
    ++settled;
    if (r.verdict.evidence.tail_block_spread_max < 1e-6) ++tight;
  }
  return {freq >= 0.95 && tight == settled,
          format("clustered or converged %.3f (need >= 0.95), tight blocks in %d/%d settled "
                 "trials",
                 freq, tight, settled)};
}

// ---------------------------------------------------------------------------
// 8. Model comparison. With negative attention pinned to zero the two update
//    rules must produce bit-identical state sequences; with the persistent
//    negative attention of the divergence topology the relative rule diverges
//    while the flip rule's verdicts are recorded without any pass threshold.
Outcome criterion_model_comparison() {
  ExperimentConfig quiet = preset("flip-compare");
  quiet.d = AttentionSchedule::constant(0.0);
  const PositiveClusterPartition part = positive_cluster_partition(quiet.schedule.total_graph());

  int mismatched_trials = 0;
  for (int trial = 0; trial < quiet.trials; ++trial) {
    std::mt19937_64 rng_rel = make_trial_rng(quiet.seed, static_cast<std::uint64_t>(trial));
    std::mt19937_64 rng_flip = make_trial_rng(quiet.seed, static_cast<std::uint64_t>(trial));

    StateVector rel, flp;
    rel.values.assign(static_cast<std::size_t>(quiet.node_count()), 0.0);
    for (int node : part.blocks[1]) rel.values[static_cast<std::size_t>(node - 1)] = quiet.initial.c0;
    flp.values = rel.values;

    DynamicsParams p_rel = quiet.params;
    p_rel.model = UpdateModel::relative;
    DynamicsParams p_flp = quiet.params;
    p_flp.model = UpdateModel::flip;

    InteractionGraph ev_rel, ev_flp;
    StateVector next_rel, next_flp;
    bool identical = true;
    for (std::int64_t t = 0; t < quiet.horizon && identical; ++t) {
      rel.t = flp.t = t;
      sample_interaction_graph(quiet.schedule, t, rng_rel, ev_rel);
      sample_interaction_graph(quiet.schedule, t, rng_flip, ev_flp);
      const bool b_rel = sample_attention(quiet.b, t, rng_rel);
      const bool b_flp = sample_attention(quiet.b, t, rng_flip);
      const bool d_rel = sample_attention(quiet.d, t, rng_rel);
      const bool d_flp = sample_attention(quiet.d, t, rng_flip);
      step_into(rel, ev_rel, b_rel, d_rel, p_rel, next_rel);
      step_into(flp, ev_flp, b_flp, d_flp, p_flp, next_flp);
      identical = b_rel == b_flp && d_rel == d_flp && next_rel.values == next_flp.values;
      std::swap(rel, next_rel);
      std::swap(flp, next_flp);
    }
    if (!identical) ++mismatched_trials;
  }

  ExperimentConfig contrast = preset("flip-compare");
  const ExperimentSummary rel_summary = run_experiment(contrast);
  contrast.params.model = UpdateModel::flip;
  const ExperimentSummary flip_summary = run_experiment(contrast);

  const bool pass =
      mismatched_trials == 0 && rel_summary.frequency(VerdictKind::diverged) == 1.0;
  std::string flip_report;
  for (int k = 0; k < 5; ++k) {
    const VerdictKind kind = static_cast<VerdictKind>(k);
    if (flip_summary.count(kind) == 0) continue;
    if (!flip_report.empty()) flip_report += ", ";
    flip_report += format("%s %lld", to_string(kind).c_str(),
                          static_cast<long long>(flip_summary.count(kind)));
  }
  return {pass, format("d=0: %d/%d trials bit-identical; relative diverged %.3f (need 1.0); "
                       "flip recorded: %s",
                       quiet.trials - mismatched_trials, quiet.trials,
                       rel_summary.frequency(VerdictKind::diverged), flip_report.c_str())};
}

// ---------------------------------------------------------------------------
// 9. Determinism of the full reporting path: identical seeds reproduce the
//    serialized summary byte for byte.
Outcome criterion_determinism() {
  const ExperimentConfig cfg = preset("thm1b");
  const nlohmann::json echo = config_to_json(cfg);
  const std::string first = dump_json(summary_to_json(run_experiment(cfg), echo));
  const std::string second = dump_json(summary_to_json(run_experiment(cfg), echo));
  return {!first.empty() && first == second,
          format("summary JSON %zu bytes, reruns %s", first.size(),
                 first == second ? "identical" : "DIFFER")};
}

struct Criterion {
  int id;
  const char* description;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "graph analyses match brute-force references on random graphs",
       criterion_graph_oracles},
      {2, "per-step update invariants hold across randomized steps", criterion_step_invariants},
      {3, "two-cluster topology with decaying negative attention converges",
       criterion_convergence},
      {4, "persistent antagonism always diverges with a nondecreasing gap",
       criterion_divergence_gap},
      {5, "window constants certify deviation consensus and the trials agree",
       criterion_deviation_consensus},
      {6, "negative connectivity with scarce positive attention diverges",
       criterion_negative_divergence},
      {7, "periodic two-cluster schedule settles into tight separated clusters",
       criterion_clustering},
      {8, "update models coincide without negative events and are contrasted under them",
       criterion_model_comparison},
      {9, "rerunning with the same seed reproduces the summary byte for byte",
       criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s — %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.description, outcome.detail.c_str());
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
