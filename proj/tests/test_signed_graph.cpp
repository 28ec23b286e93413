#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "signet/errors.hpp"
#include "signet/signed_graph.hpp"
#include "oracles.hpp"

using namespace signet;

namespace {

Arc arc(int tail, int head, Sign sign) { return Arc{tail, head, sign}; }

SignedDigraph complete_positive(int n) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) arcs.push_back(arc(i, j, Sign::positive));
  return SignedDigraph(n, std::move(arcs));
}

// Two positive 3-cliques {1,2,3}, {4,5,6} joined only by negative arcs.
SignedDigraph two_clique_negative_bridge() {
  std::vector<Arc> arcs;
  for (int base : {0, 3})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) arcs.push_back(arc(base + i, base + j, Sign::positive));
  arcs.push_back(arc(1, 4, Sign::negative));
  arcs.push_back(arc(5, 2, Sign::negative));
  return SignedDigraph(6, std::move(arcs));
}

std::vector<std::pair<int, int>> pairs_of(const SignedDigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : g.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

TEST_CASE("construction validates node count, endpoints, loops, duplicates") {
  CHECK_THROWS_AS(SignedDigraph(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(SignedDigraph(3, {arc(1, 1, Sign::positive)}), std::invalid_argument);
  CHECK_THROWS_AS(SignedDigraph(3, {arc(0, 2, Sign::positive)}), std::invalid_argument);
  CHECK_THROWS_AS(SignedDigraph(3, {arc(1, 4, Sign::positive)}), std::invalid_argument);
  CHECK_THROWS_AS(
      SignedDigraph(3, {arc(1, 2, Sign::positive), arc(1, 2, Sign::negative)}),
      std::invalid_argument);
  CHECK_NOTHROW(SignedDigraph(3, {}));
}

TEST_CASE("arcs are sorted by (tail, head) and sign_of looks them up") {
  SignedDigraph g(3, {arc(2, 3, Sign::negative), arc(1, 2, Sign::positive),
                      arc(2, 1, Sign::negative)});
  CHECK(pairs_of(g) == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 3}});
  CHECK(g.sign_of(1, 2) == Sign::positive);
  CHECK(g.sign_of(2, 3) == Sign::negative);
  CHECK_FALSE(g.sign_of(3, 2).has_value());
  CHECK(g.has_arc(2, 1));
  CHECK_FALSE(g.has_arc(1, 3));
}

TEST_CASE("subgraph_by_sign filters exactly the requested sign") {
  SignedDigraph g(3, {arc(1, 2, Sign::positive), arc(2, 3, Sign::negative)});
  SignedDigraph pos = subgraph_by_sign(g, Sign::positive);
  CHECK(pos.arc_count() == 1);
  CHECK(pos.sign_of(1, 2) == Sign::positive);

  SignedDigraph empty(4, {});
  CHECK(subgraph_by_sign(empty, Sign::negative).arc_count() == 0);

  SignedDigraph all_neg(3, {arc(1, 2, Sign::negative), arc(3, 1, Sign::negative)});
  CHECK(subgraph_by_sign(all_neg, Sign::positive).arc_count() == 0);
  CHECK(subgraph_by_sign(all_neg, Sign::negative).arc_count() == 2);
}

TEST_CASE("positive cluster partition on canonical shapes") {
  SUBCASE("complete positive digraph is one block") {
    auto part = positive_cluster_partition(complete_positive(4));
    REQUIRE(part.block_count() == 1);
    CHECK(part.blocks[0] == std::vector<int>{1, 2, 3, 4});
  }
  SUBCASE("no positive arcs gives singleton blocks") {
    SignedDigraph g(3, {arc(1, 2, Sign::negative)});
    auto part = positive_cluster_partition(g);
    REQUIRE(part.block_count() == 3);
    CHECK(part.blocks[0] == std::vector<int>{1});
    CHECK(part.blocks[1] == std::vector<int>{2});
    CHECK(part.blocks[2] == std::vector<int>{3});
    CHECK(part.block_of(2) == 1);
  }
  SUBCASE("negative bridges do not merge blocks") {
    auto part = positive_cluster_partition(two_clique_negative_bridge());
    REQUIRE(part.block_count() == 2);
    CHECK(part.blocks[0] == std::vector<int>{1, 2, 3});
    CHECK(part.blocks[1] == std::vector<int>{4, 5, 6});
  }
}

TEST_CASE("partition depends only on the positive subgraph") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    SignedDigraph g = oracles::random_graph(rng, 6, 0.4);
    auto base = positive_cluster_partition(g);

    // Rebuild with every non-arc ordered pair filled in as a negative arc.
    std::vector<Arc> arcs = g.arcs();
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (i != j && !g.has_arc(i, j)) arcs.push_back(arc(i, j, Sign::negative));
    auto padded = positive_cluster_partition(SignedDigraph(6, std::move(arcs)));
    CHECK(padded.blocks == base.blocks);
  }
}

TEST_CASE("connectivity on canonical shapes") {
  SUBCASE("directed 3-cycle is strongly connected") {
    SignedDigraph g(3, {arc(1, 2, Sign::positive), arc(2, 3, Sign::positive),
                        arc(3, 1, Sign::positive)});
    auto rep = connectivity(g);
    CHECK(rep.strong);
    CHECK(rep.weak);
    CHECK(rep.center == 1);
  }
  SUBCASE("directed path has a center but is not strong") {
    SignedDigraph g(3, {arc(1, 2, Sign::positive), arc(2, 3, Sign::negative)});
    auto rep = connectivity(g);
    CHECK_FALSE(rep.strong);
    CHECK(rep.weak);
    CHECK(rep.center == 1);
  }
  SUBCASE("isolated node breaks weak connectivity") {
    SignedDigraph g(3, {arc(1, 2, Sign::positive)});
    auto rep = connectivity(g);
    CHECK_FALSE(rep.strong);
    CHECK_FALSE(rep.weak);
    CHECK_FALSE(rep.center.has_value());
  }
}

TEST_CASE("partition and connectivity match brute-force oracles on random graphs") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> size(3, 7);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    SignedDigraph g = oracles::random_graph(rng, n, density(rng));

    auto part = positive_cluster_partition(g);
    REQUIRE(part.blocks == oracles::positive_components(g));

    auto rep = connectivity(g);
    const auto pairs = pairs_of(g);
    REQUIRE(rep.strong == oracles::strongly_connected(n, pairs));
    REQUIRE(rep.weak == oracles::weakly_connected(n, pairs));
    REQUIRE(rep.center == oracles::center_node(n, pairs));

    // Lattice of connectivity notions.
    if (rep.strong) CHECK(rep.center.has_value());
    if (rep.center.has_value()) CHECK(rep.weak);
  }
}

TEST_CASE("union_graph merges arc sets and preserves signs") {
  SignedDigraph a(3, {arc(1, 2, Sign::positive)});
  SignedDigraph b(3, {arc(2, 3, Sign::negative)});
  std::vector<SignedDigraph> both{a, b};
  SignedDigraph u = union_graph(both);
  CHECK(u.arc_count() == 2);
  CHECK(u.sign_of(1, 2) == Sign::positive);
  CHECK(u.sign_of(2, 3) == Sign::negative);

  std::vector<SignedDigraph> twice{a, a};
  CHECK(union_graph(twice).arcs() == a.arcs());
}

TEST_CASE("union_graph reports the conflicting arc") {
  SignedDigraph a(3, {arc(1, 2, Sign::positive)});
  SignedDigraph b(3, {arc(1, 2, Sign::negative)});
  std::vector<SignedDigraph> gs{a, b};
  try {
    union_graph(gs);
    FAIL("expected SignConflictError");
  } catch (const SignConflictError& e) {
    CHECK(e.tail == 1);
    CHECK(e.head == 2);
  }
}

TEST_CASE("union_graph is order insensitive on sign-consistent inputs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    // Sign-consistent by construction: fix one sign per ordered pair up front.
    SignedDigraph master = oracles::random_graph(rng, 5, 0.7);
    auto sample = [&]() {
      std::vector<Arc> arcs = oracles::random_subset(rng, master, 0.5);
      return SignedDigraph(5, std::move(arcs));
    };
    std::vector<SignedDigraph> abc{sample(), sample(), sample()};
    std::vector<SignedDigraph> cba{abc[2], abc[1], abc[0]};
    CHECK(union_graph(abc).arcs() == union_graph(cba).arcs());
    // Associativity: fold left vs fold right.
    std::vector<SignedDigraph> left01{abc[0], abc[1]};
    std::vector<SignedDigraph> left{union_graph(left01), abc[2]};
    std::vector<SignedDigraph> right12{abc[1], abc[2]};
    std::vector<SignedDigraph> right{abc[0], union_graph(right12)};
    CHECK(union_graph(left).arcs() == union_graph(right).arcs());
  }
}

TEST_CASE("graph file parser accepts comments and blank lines") {
  std::istringstream text(
      "# a small signed graph\n"
      "\n"
      "3   # node count\n"
      "1 2 +\n"
      "\n"
      "2 3 -   # trailing comment\n");
  SignedDigraph g = parse_signed_digraph(text);
  CHECK(g.node_count() == 3);
  CHECK(g.sign_of(1, 2) == Sign::positive);
  CHECK(g.sign_of(2, 3) == Sign::negative);
}

TEST_CASE("graph file parser rejects malformed input") {
  std::istringstream bad_sign("3\n1 2 *\n");
  CHECK_THROWS_AS(parse_signed_digraph(bad_sign), ConfigError);

  std::istringstream missing_n("# only comments\n");
  CHECK_THROWS_AS(parse_signed_digraph(missing_n), ConfigError);

  std::istringstream bad_node("3\n1 9 +\n");
  CHECK_THROWS_AS(parse_signed_digraph(bad_node), ConfigError);

  std::istringstream truncated("3\n1 2\n");
  CHECK_THROWS_AS(parse_signed_digraph(truncated), ConfigError);
}

TEST_CASE("load_signed_digraph reads a file and flags missing paths") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "signet_test_graph.txt";
  {
    std::ofstream out(path);
    out << "4\n1 2 +\n3 4 -\n";
  }
  SignedDigraph g = load_signed_digraph(path);
  CHECK(g.node_count() == 4);
  CHECK(g.arc_count() == 2);
  fs::remove(path);

  CHECK_THROWS_AS(load_signed_digraph(path), ConfigError);
}
