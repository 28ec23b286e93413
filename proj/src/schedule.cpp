#include "signet/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "signet/errors.hpp"

namespace signet {

GraphSchedule::GraphSchedule(Mode mode, std::vector<SignedDigraph> graphs, double q_all)
    : mode_(mode), graphs_(std::move(graphs)), q_all_(q_all) {
  scan_probabilities();
}

GraphSchedule::GraphSchedule(Mode mode, std::vector<SignedDigraph> graphs,
                             std::map<std::pair<int, int>, double> q)
    : mode_(mode), graphs_(std::move(graphs)), per_arc_(std::move(q)) {
  scan_probabilities();
}

void GraphSchedule::scan_probabilities() {
  if (graphs_.empty()) throw ConfigError("graph schedule needs at least one graph");
  if (mode_ == Mode::fixed && graphs_.size() != 1)
    throw ConfigError("static schedule takes exactly one graph");
  const int n = graphs_.front().node_count();
  for (const auto& g : graphs_)
    if (g.node_count() != n) throw ConfigError("schedule graphs must share the node count");

  auto check = [](double q) {
    if (!(q > 0.0) || q > 1.0) throw ConfigError("arc probability must lie in (0,1]");
  };

  bool any_arc = false;
  q_min_ = 1.0;
  q_max_ = 0.0;
  for (const auto& g : graphs_) {
    for (const Arc& a : g.arcs()) {
      double q = q_all_;
      if (!per_arc_.empty()) {
        auto it = per_arc_.find({a.tail, a.head});
        if (it == per_arc_.end())
          throw ConfigError("no probability given for arc (" + std::to_string(a.tail) + "," +
                            std::to_string(a.head) + ")");
        q = it->second;
      }
      check(q);
      q_min_ = std::min(q_min_, q);
      q_max_ = std::max(q_max_, q);
      any_arc = true;
    }
  }
  if (!any_arc) {
    check(q_all_);
    q_max_ = q_min_ = q_all_;
  }
}

const SignedDigraph& GraphSchedule::graph_at(std::int64_t t) const {
  if (graphs_.size() == 1) return graphs_.front();
  return graphs_[static_cast<std::size_t>(t % period())];
}

double GraphSchedule::arc_probability(int tail, int head) const {
  if (per_arc_.empty()) return q_all_;
  auto it = per_arc_.find({tail, head});
  if (it == per_arc_.end())
    throw ConfigError("no probability given for arc (" + std::to_string(tail) + "," +
                      std::to_string(head) + ")");
  return it->second;
}

SignedDigraph GraphSchedule::total_graph() const {
  return union_graph(std::span<const SignedDigraph>(graphs_));
}

const SignedDigraph& schedule_graph(const GraphSchedule& sched, std::int64_t t) {
  return sched.graph_at(t);
}

AttentionSchedule AttentionSchedule::constant(double c) {
  AttentionSchedule a;
  a.kind_ = Kind::constant;
  a.c_ = c;
  if (c < 0.0) throw ConfigError("attention constant must be >= 0");
  return a;
}

AttentionSchedule AttentionSchedule::power_decay(double c, double gamma) {
  AttentionSchedule a;
  a.kind_ = Kind::power_decay;
  a.c_ = c;
  a.gamma_ = gamma;
  if (c < 0.0 || gamma < 0.0) throw ConfigError("power-decay attention needs c, gamma >= 0");
  return a;
}

AttentionSchedule AttentionSchedule::explicit_list(std::vector<double> values, double tail) {
  AttentionSchedule a;
  a.kind_ = Kind::explicit_list;
  a.values_ = std::move(values);
  a.tail_ = tail;
  return a;
}

double AttentionSchedule::raw_value_at(std::int64_t t) const {
  switch (kind_) {
    case Kind::constant:
      return c_;
    case Kind::power_decay:
      return c_ / std::pow(static_cast<double>(t) + 1.0, gamma_);
    case Kind::explicit_list:
      if (static_cast<std::size_t>(t) < values_.size()) return values_[static_cast<std::size_t>(t)];
      return tail_;
  }
  return 0.0;
}

double AttentionSchedule::value_at(std::int64_t t) const {
  return std::clamp(raw_value_at(t), 0.0, 1.0);
}

bool AttentionSchedule::clamps_anywhere() const {
  switch (kind_) {
    case Kind::constant:
      return c_ > 1.0;
    case Kind::power_decay:
      return c_ > 1.0;  // raw value is largest at t = 0
    case Kind::explicit_list:
      if (tail_ < 0.0 || tail_ > 1.0) return true;
      return std::any_of(values_.begin(), values_.end(),
                         [](double v) { return v < 0.0 || v > 1.0; });
  }
  return false;
}

bool AttentionSchedule::summable() const {
  switch (kind_) {
    case Kind::constant:
      return c_ == 0.0;
    case Kind::power_decay:
      return c_ == 0.0 || gamma_ > 1.0;
    case Kind::explicit_list:
      return tail_ == 0.0;
  }
  return false;
}

double AttentionSchedule::partial_sum(std::int64_t horizon) const {
  double sum = 0.0;
  for (std::int64_t t = 0; t < horizon; ++t) sum += value_at(t);
  return sum;
}

}  // namespace signet
