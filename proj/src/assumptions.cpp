#include "signet/assumptions.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "signet/errors.hpp"

namespace signet {

namespace {

using ArcPair = std::pair<int, int>;

// Adjacency over nodes 1..n from a set of ordered pairs, optionally
// symmetrized (for weak-connectivity checks).
std::vector<std::vector<int>> adjacency(int n, const std::set<ArcPair>& pairs, bool symmetric) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [tail, head] : pairs) {
    adj[static_cast<std::size_t>(tail)].push_back(head);
    if (symmetric) adj[static_cast<std::size_t>(head)].push_back(tail);
  }
  return adj;
}

// Count of nodes among `nodes` reachable from `start` walking `adj`
// restricted to `nodes` (empty `nodes` means all of 1..n).
int reachable_count(int start, const std::vector<std::vector<int>>& adj,
                    const std::vector<char>& allowed) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> frontier;
  seen[static_cast<std::size_t>(start)] = 1;
  frontier.push(start);
  int count = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!allowed[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++count;
      frontier.push(w);
    }
  }
  return count;
}

std::vector<char> allow_all(int n) {
  std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
  allowed[0] = 0;
  return allowed;
}

std::vector<char> allow_only(int n, const std::vector<int>& nodes) {
  std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 0);
  for (int v : nodes) allowed[static_cast<std::size_t>(v)] = 1;
  return allowed;
}

bool strongly_connected(int n, const std::set<ArcPair>& pairs) {
  const auto adj = adjacency(n, pairs, /*symmetric=*/false);
  const auto allowed = allow_all(n);
  for (int v = 1; v <= n; ++v)
    if (reachable_count(v, adj, allowed) != n) return false;
  return true;
}

bool has_center(int n, const std::set<ArcPair>& pairs) {
  const auto adj = adjacency(n, pairs, /*symmetric=*/false);
  const auto allowed = allow_all(n);
  for (int v = 1; v <= n; ++v)
    if (reachable_count(v, adj, allowed) == n) return true;
  return false;
}

bool weakly_connected(int n, const std::set<ArcPair>& pairs) {
  const auto adj = adjacency(n, pairs, /*symmetric=*/true);
  return reachable_count(1, adj, allow_all(n)) == n;
}

// Spanning tree within one partition block, using only pairs whose both
// endpoints lie in the block.
bool block_has_center(int n, const std::vector<int>& block, const std::set<ArcPair>& pairs) {
  if (block.size() <= 1) return true;
  const auto adj = adjacency(n, pairs, /*symmetric=*/false);
  const auto allowed = allow_only(n, block);
  const int want = static_cast<int>(block.size());
  for (int v : block)
    if (reachable_count(v, adj, allowed) == want) return true;
  return false;
}

}  // namespace

bool AssumptionReport::all_hold(const std::vector<int>& ids) const {
  return std::all_of(ids.begin(), ids.end(), [this](int id) { return holds(id); });
}

std::string assumption_name(int id) { return "A" + std::to_string(id); }

std::string assumption_description(int id) {
  switch (id) {
    case 1: return "every scheduled arc has sampling probability > 0";
    case 2: return "every window union is strongly connected";
    case 3: return "arc signs are consistent across the schedule";
    case 4: return "every positive window union is strongly connected";
    case 5: return "every negative window union is strongly connected";
    case 6: return "arcs sampled independently with probability cap < 1";
    case 7: return "every positive window union has a spanning tree";
    case 8: return "every negative window union is weakly connected";
    case 9: return "positive window unions span every positive cluster";
    default: throw ConfigError("assumption id out of range: " + std::to_string(id));
  }
}

AssumptionReport check_assumptions(const GraphSchedule& sched, std::int64_t horizon,
                                   int window_k) {
  if (window_k < 1) throw ConfigError("window length K must be >= 1");
  if (horizon < window_k) throw ConfigError("horizon must be at least the window length K");

  AssumptionReport report;
  report.window_k = window_k;
  report.p_star = sched.min_probability();
  report.p_sup = sched.max_probability();
  report.flags[0] = report.p_star > 0.0;  // guaranteed by schedule validation
  report.flags[5] = report.p_sup < 1.0;   // independence holds by construction

  const int n = sched.node_count();

  try {
    SignedDigraph total = sched.total_graph();
    report.partition = positive_cluster_partition(total);
    report.total_graph = std::move(total);
    report.flags[2] = true;
  } catch (const SignConflictError& conflict) {
    report.sign_conflict = {conflict.tail, conflict.head};
    report.flags[2] = false;
  }

  // Window unions depend on the start slot only through (start mod period),
  // so one period of starts covers every window, wraparound included.
  const std::int64_t start_count =
      std::min<std::int64_t>(sched.period(), horizon - window_k + 1);

  bool all_strong = true, pos_strong = true, neg_strong = true;
  bool pos_center = true, neg_weak = true, blocks_span = true;
  for (std::int64_t start = 0; start < start_count; ++start) {
    std::set<ArcPair> all, positive, negative;
    for (int off = 0; off < window_k; ++off) {
      for (const Arc& a : sched.graph_at(start + off).arcs()) {
        all.emplace(a.tail, a.head);
        (a.sign == Sign::positive ? positive : negative).emplace(a.tail, a.head);
      }
    }
    all_strong = all_strong && strongly_connected(n, all);
    pos_strong = pos_strong && strongly_connected(n, positive);
    neg_strong = neg_strong && strongly_connected(n, negative);
    pos_center = pos_center && has_center(n, positive);
    neg_weak = neg_weak && weakly_connected(n, negative);
    if (report.partition) {
      for (const auto& block : report.partition->blocks)
        blocks_span = blocks_span && block_has_center(n, block, positive);
    }
  }

  report.flags[1] = all_strong;
  report.flags[3] = pos_strong;
  report.flags[4] = neg_strong;
  report.flags[6] = pos_center;
  report.flags[7] = neg_weak;
  report.flags[8] = report.flags[2] && blocks_span;
  return report;
}

}  // namespace signet
