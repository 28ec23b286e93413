#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "signet/signed_graph.hpp"

namespace signet {

/// Deterministic time-indexed sequence of signed digraphs: a single static
/// graph or a periodic list, together with per-arc sampling probabilities.
/// Probabilities live in (0,1]; their min acts as the uniform lower bound on
/// arc activation and their max as the upper bound used by the independence
/// assumption.
class GraphSchedule {
 public:
  enum class Mode { fixed, periodic };

  /// Same probability for every arc.
  GraphSchedule(Mode mode, std::vector<SignedDigraph> graphs, double q_all);
  /// Per-arc probabilities keyed by (tail, head); must cover every arc that
  /// occurs anywhere in the schedule.
  GraphSchedule(Mode mode, std::vector<SignedDigraph> graphs,
                std::map<std::pair<int, int>, double> q);

  Mode mode() const { return mode_; }
  int node_count() const { return graphs_.front().node_count(); }
  std::int64_t period() const { return static_cast<std::int64_t>(graphs_.size()); }
  const std::vector<SignedDigraph>& graphs() const { return graphs_; }

  const SignedDigraph& graph_at(std::int64_t t) const;
  double arc_probability(int tail, int head) const;

  bool uses_global_probability() const { return per_arc_.empty(); }
  double global_probability() const { return q_all_; }
  const std::map<std::pair<int, int>, double>& per_arc_probabilities() const { return per_arc_; }

  /// Min / max of the arc probabilities over the whole schedule.
  double min_probability() const { return q_min_; }
  double max_probability() const { return q_max_; }

  /// Union of every graph in the schedule. Throws SignConflictError when the
  /// schedule is not sign consistent.
  SignedDigraph total_graph() const;

 private:
  void scan_probabilities();

  Mode mode_;
  std::vector<SignedDigraph> graphs_;
  double q_all_ = 1.0;
  std::map<std::pair<int, int>, double> per_arc_;
  double q_min_ = 1.0;
  double q_max_ = 1.0;
};

/// Deterministic attention mean sequence b_t or d_t. Evaluated values are
/// clamped to [0,1]; a schedule whose raw values exceed 1 early on is legal
/// and simply saturates.
class AttentionSchedule {
 public:
  enum class Kind { constant, power_decay, explicit_list };

  /// Constant 0 (attention never fires).
  AttentionSchedule() = default;

  static AttentionSchedule constant(double c);
  /// c / (t+1)^gamma
  static AttentionSchedule power_decay(double c, double gamma);
  /// Listed values for t < values.size(), then the constant tail value.
  static AttentionSchedule explicit_list(std::vector<double> values, double tail);

  Kind kind() const { return kind_; }
  double c() const { return c_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& values() const { return values_; }
  double tail() const { return tail_; }

  double raw_value_at(std::int64_t t) const;
  double value_at(std::int64_t t) const;  // clamped to [0,1]

  /// True if some raw value falls outside [0,1] (it will be clamped).
  bool clamps_anywhere() const;

  /// Analytic verdict on whether the infinite sum of values converges.
  bool summable() const;
  /// Sum of clamped values for t in [0, horizon).
  double partial_sum(std::int64_t horizon) const;

 private:
  Kind kind_ = Kind::constant;
  double c_ = 0.0;
  double gamma_ = 0.0;
  std::vector<double> values_;
  double tail_ = 0.0;
};

/// Graph active in slot t (periodic schedules wrap around).
const SignedDigraph& schedule_graph(const GraphSchedule& sched, std::int64_t t);

}  // namespace signet
