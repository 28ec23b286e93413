#include "signet/signed_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "signet/errors.hpp"

namespace signet {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

bool arc_order(const Arc& a, const Arc& b) {
  return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
}

// Reachability by BFS from `start` over an out-adjacency list.
std::vector<bool> reachable_from(int start, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> queue{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

SignedDigraph::SignedDigraph(int node_count, std::vector<Arc> arcs)
    : n_(node_count), arcs_(std::move(arcs)) {
  if (n_ < 3) throw std::invalid_argument("signed digraph needs at least 3 nodes");
  for (const Arc& a : arcs_) {
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_)
      throw std::invalid_argument("arc endpoint outside [1..n]");
    if (a.tail == a.head) throw std::invalid_argument("self-loops are not allowed");
  }
  std::sort(arcs_.begin(), arcs_.end(), arc_order);
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i - 1].tail == arcs_[i].tail && arcs_[i - 1].head == arcs_[i].head)
      throw std::invalid_argument("duplicate ordered pair (" + std::to_string(arcs_[i].tail) +
                                  "," + std::to_string(arcs_[i].head) + ")");
  }
}

std::optional<Sign> SignedDigraph::sign_of(int tail, int head) const {
  Arc probe{tail, head, Sign::positive};
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), probe, arc_order);
  if (it != arcs_.end() && it->tail == tail && it->head == head) return it->sign;
  return std::nullopt;
}

std::vector<std::vector<int>> SignedDigraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const Arc& a : arcs_) adj[static_cast<std::size_t>(a.tail) - 1].push_back(a.head - 1);
  return adj;
}

SignedDigraph subgraph_by_sign(const SignedDigraph& g, Sign sign) {
  std::vector<Arc> kept;
  for (const Arc& a : g.arcs())
    if (a.sign == sign) kept.push_back(a);
  return SignedDigraph(g.node_count(), std::move(kept));
}

PositiveClusterPartition positive_cluster_partition(const SignedDigraph& g) {
  const int n = g.node_count();
  UnionFind uf(n);
  for (const Arc& a : g.arcs())
    if (a.sign == Sign::positive) uf.unite(a.tail - 1, a.head - 1);

  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_root[static_cast<std::size_t>(uf.find(v))].push_back(v + 1);

  PositiveClusterPartition part;
  for (auto& members : by_root)
    if (!members.empty()) part.blocks.push_back(std::move(members));
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  part.block_index.assign(static_cast<std::size_t>(n), -1);
  for (int b = 0; b < part.block_count(); ++b)
    for (int v : part.blocks[static_cast<std::size_t>(b)])
      part.block_index[static_cast<std::size_t>(v) - 1] = b;
  return part;
}

ConnectivityReport connectivity(const SignedDigraph& g) {
  const int n = g.node_count();
  const auto adj = g.out_adjacency();

  ConnectivityReport rep;
  bool all_roots = true;
  for (int v = 0; v < n; ++v) {
    auto seen = reachable_from(v, adj);
    bool reaches_all = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (reaches_all && !rep.center) rep.center = v + 1;
    all_roots = all_roots && reaches_all;
  }
  rep.strong = all_roots;

  UnionFind uf(n);
  for (const Arc& a : g.arcs()) uf.unite(a.tail - 1, a.head - 1);
  int root = uf.find(0);
  rep.weak = true;
  for (int v = 1; v < n; ++v) rep.weak = rep.weak && uf.find(v) == root;
  return rep;
}

SignedDigraph union_graph(std::span<const SignedDigraph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("union_graph needs at least one graph");
  const int n = graphs.front().node_count();
  for (const auto& g : graphs)
    if (g.node_count() != n) throw std::invalid_argument("union_graph: node counts differ");

  std::vector<Arc> merged;
  for (const auto& g : graphs) {
    std::vector<Arc> next;
    next.reserve(merged.size() + g.arc_count());
    auto it = merged.begin();
    for (const Arc& a : g.arcs()) {
      while (it != merged.end() && arc_order(*it, a)) next.push_back(*it++);
      if (it != merged.end() && it->tail == a.tail && it->head == a.head) {
        if (it->sign != a.sign) throw SignConflictError(a.tail, a.head);
        next.push_back(*it++);
      } else {
        next.push_back(a);
      }
    }
    next.insert(next.end(), it, merged.end());
    merged = std::move(next);
  }
  return SignedDigraph(n, std::move(merged));
}

SignedDigraph parse_signed_digraph(std::istream& in) {
  std::string line;
  std::optional<int> n;
  std::vector<Arc> arcs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!n) {
      int value = 0;
      if (fields >> value) n = value;
      continue;
    }
    int tail = 0, head = 0;
    std::string sign;
    if (!(fields >> tail)) continue;  // blank line
    if (!(fields >> head >> sign) || (sign != "+" && sign != "-"))
      throw ConfigError("graph file line " + std::to_string(lineno) +
                        ": expected \"tail head sign\" with sign + or -");
    arcs.push_back({tail, head, sign == "+" ? Sign::positive : Sign::negative});
  }
  if (!n) throw ConfigError("graph file: missing node count line");
  try {
    return SignedDigraph(*n, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("graph file: ") + e.what());
  }
}

SignedDigraph load_signed_digraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open graph file " + path.string());
  return parse_signed_digraph(in);
}

}  // namespace signet
