#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace signet {

enum class Sign : unsigned char { positive, negative };

inline char to_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Directed arc tail -> head carrying a cooperative (+) or antagonistic (-) sign.
struct Arc {
  int tail = 0;
  int head = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple signed digraph on nodes 1..n, n >= 3. No self-loops, and each
/// ordered pair (tail, head) appears at most once. Arcs are kept sorted by
/// (tail, head) so iteration order is deterministic everywhere.
class SignedDigraph {
 public:
  SignedDigraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  bool has_arc(int tail, int head) const { return sign_of(tail, head).has_value(); }
  std::optional<Sign> sign_of(int tail, int head) const;

  /// Out-neighbour adjacency over all arcs regardless of sign.
  std::vector<std::vector<int>> out_adjacency() const;

 private:
  int n_;
  std::vector<Arc> arcs_;  // sorted by (tail, head)
};

/// Partition of 1..n into the weakly connected components of the positive
/// subgraph. Blocks are sorted by smallest member, members ascending.
/// Negative arcs may run within a block.
struct PositiveClusterPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_index;  // block_index[i-1] = block of node i

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int node) const { return block_index[static_cast<std::size_t>(node) - 1]; }
};

struct ConnectivityReport {
  bool strong = false;
  bool weak = false;
  std::optional<int> center;  // smallest node reaching every node, if any
};

/// Graph on the same node set keeping only arcs of the given sign.
SignedDigraph subgraph_by_sign(const SignedDigraph& g, Sign sign);

/// The unique positive cluster partition of g.
PositiveClusterPartition positive_cluster_partition(const SignedDigraph& g);

/// Strong/weak connectivity and an optional center node (spanning-tree root).
/// Every node is reachable from itself.
ConnectivityReport connectivity(const SignedDigraph& g);

/// Union of the arc sets, signs preserved. All graphs must share the node
/// count. Throws SignConflictError if an arc occurs with both signs.
SignedDigraph union_graph(std::span<const SignedDigraph> graphs);

/// Plain-text graph format: first significant line is n, then one
/// "tail head sign" triple per line with sign in {+,-}. Blank lines and
/// '#' comments are ignored.
SignedDigraph parse_signed_digraph(std::istream& in);
SignedDigraph load_signed_digraph(const std::filesystem::path& path);

}  // namespace signet
