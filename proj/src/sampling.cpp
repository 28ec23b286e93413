#include "signet/sampling.hpp"

#include "signet/rng.hpp"

namespace signet {

void InteractionGraph::reset(std::int64_t slot, int n) {
  t = slot;
  node_count = n;
  arcs.clear();
  pos_in.resize(static_cast<std::size_t>(n));
  neg_in.resize(static_cast<std::size_t>(n));
  for (auto& v : pos_in) v.clear();
  for (auto& v : neg_in) v.clear();
}

void sample_interaction_graph(const GraphSchedule& sched, std::int64_t t, std::mt19937_64& rng,
                              InteractionGraph& out) {
  const SignedDigraph& g = sched.graph_at(t);
  out.reset(t, g.node_count());
  for (const Arc& a : g.arcs()) {
    const double u = uniform_unit(rng);
    if (u < sched.arc_probability(a.tail, a.head)) {
      out.arcs.push_back(a);
      auto& bucket = (a.sign == Sign::positive) ? out.pos_in : out.neg_in;
      bucket[static_cast<std::size_t>(a.head - 1)].push_back(a.tail);
    }
  }
}

InteractionGraph sample_interaction_graph(const GraphSchedule& sched, std::int64_t t,
                                          std::mt19937_64& rng) {
  InteractionGraph out;
  sample_interaction_graph(sched, t, rng, out);
  return out;
}

bool sample_attention(const AttentionSchedule& sched, std::int64_t t, std::mt19937_64& rng) {
  const double u = uniform_unit(rng);
  return u < sched.value_at(t);
}

}  // namespace signet
