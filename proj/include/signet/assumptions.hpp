#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signet/schedule.hpp"
#include "signet/signed_graph.hpp"

namespace signet {

// Results of the nine structural checks (A1..A9) a schedule can be asked to
// satisfy. Window-based checks (A2, A4, A5, A7, A8, A9) examine the union of
// arcs over every window of `window_k` consecutive slots; for a periodic
// schedule the distinct windows are the period's starting offsets, including
// the ones that wrap around the period boundary.
//
//   A1  every scheduled arc has sampling probability > 0 (floor p_*)
//   A2  each window union is strongly connected
//   A3  no ordered pair ever appears with both signs (total graph exists)
//   A4  each window's positive union is strongly connected
//   A5  each window's negative union is strongly connected
//   A6  arcs are sampled independently with a probability cap p^* < 1
//   A7  each window's positive union has a spanning tree (a center node)
//   A8  each window's negative union is weakly connected
//   A9  each window's positive union, restricted to every block of the
//       positive-cluster partition of the total graph, has a spanning tree
struct AssumptionReport {
  std::array<bool, 9> flags{};  // flags[k-1] is the verdict for Ak
  double p_star = 0.0;          // min arc sampling probability
  double p_sup = 0.0;           // max arc sampling probability
  int window_k = 1;
  std::optional<std::pair<int, int>> sign_conflict;    // arc that breaks A3
  std::optional<SignedDigraph> total_graph;            // present iff A3 holds
  std::optional<PositiveClusterPartition> partition;   // partition of the total graph

  bool holds(int id) const { return flags.at(static_cast<std::size_t>(id - 1)); }
  // Number of blocks in the positive-cluster partition (0 when A3 fails).
  int cluster_count() const { return partition ? partition->block_count() : 0; }
  bool all_hold(const std::vector<int>& ids) const;
};

// Short id ("A1".."A9") and a one-line description for report printing.
std::string assumption_name(int id);
std::string assumption_description(int id);

// Evaluates all nine checks for windows of `window_k` slots that start within
// `horizon`. Requires horizon >= window_k >= 1.
AssumptionReport check_assumptions(const GraphSchedule& sched, std::int64_t horizon,
                                   int window_k);

}  // namespace signet
