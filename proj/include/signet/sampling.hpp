#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "signet/schedule.hpp"
#include "signet/signed_graph.hpp"

namespace signet {

// The realized interaction pattern for one time slot: the subset of scheduled
// arcs whose independent coin flips came up, pre-bucketed by sign into
// in-neighbor lists so the update rule can walk them directly.
struct InteractionGraph {
  std::int64_t t = 0;
  int node_count = 0;
  std::vector<Arc> arcs;                   // realized arcs, sorted by (tail, head)
  std::vector<std::vector<int>> pos_in;    // pos_in[i-1] = tails j of realized positive arcs (j, i)
  std::vector<std::vector<int>> neg_in;    // neg_in[i-1] = tails j of realized negative arcs (j, i)

  void reset(std::int64_t slot, int n);
};

// Draws one slot worth of randomness. Arc coins are consumed in the scheduled
// graph's (tail, head) order, one per arc, regardless of the probability, so a
// run's random stream does not depend on whether probabilities are 0 or 1.
void sample_interaction_graph(const GraphSchedule& sched, std::int64_t t, std::mt19937_64& rng,
                              InteractionGraph& out);

InteractionGraph sample_interaction_graph(const GraphSchedule& sched, std::int64_t t,
                                          std::mt19937_64& rng);

// Bernoulli attention bit for one slot; always consumes exactly one draw.
bool sample_attention(const AttentionSchedule& sched, std::int64_t t, std::mt19937_64& rng);

}  // namespace signet
