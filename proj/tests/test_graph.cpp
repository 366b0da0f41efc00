#include <algorithm>
#include <set>
#include <sstream>

#include "csbm/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace csbm;
using test::make_graph;
using test::random_graph;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (int v = 0; v < g.size(); ++v) {
    for (int u : g.neighbors(v)) {
      if (u > v) out.insert({v, u});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("k_core basics") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k_core(triangle, 2) == VertexSet{0, 1, 2});

  const Graph empty5(5);
  CHECK(k_core(empty5, 1).empty());
  CHECK(k_core(empty5, 3).empty());

  const Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(k_core(path, 2).empty());
  CHECK(k_core(path, 1) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("k_core fixed point and monotonicity") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(30, 150, seed);
    VertexSet prev;
    for (int k = 1; k <= 5; ++k) {
      const VertexSet core = k_core(g, k);
      std::vector<char> in(30, 0);
      for (int v : core) in[v] = 1;
      for (int v : core) {
        int deg = 0;
        for (int u : g.neighbors(v)) deg += in[u];
        CHECK(deg >= k);
      }
      if (k > 1) {
        CHECK(std::includes(prev.begin(), prev.end(), core.begin(), core.end()));
      }
      prev = core;
    }
  }
}

TEST_CASE("induced_subgraph") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto sub = induced_subgraph(triangle, {0, 1});
  CHECK(sub.graph.size() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.to_original == std::vector<int>{0, 1});

  CHECK(induced_subgraph(triangle, {}).graph.size() == 0);

  const Graph cycle = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto path = induced_subgraph(cycle, {0, 1, 2});
  CHECK(path.graph.edge_count() == 2);
  CHECK(path.graph.has_edge(0, 1));
  CHECK(path.graph.has_edge(1, 2));
  CHECK_FALSE(path.graph.has_edge(0, 2));

  const Graph g = random_graph(20, 300, 9);
  VertexSet all(20);
  for (int v = 0; v < 20; ++v) all[v] = v;
  CHECK(edge_set(induced_subgraph(g, all).graph) == edge_set(g));

  CHECK_THROWS(induced_subgraph(triangle, {0, 5}));
}

TEST_CASE("combinators on identity matchings") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph empty3(3);
  const Matching id3 = Matching::identity(3);

  CHECK(edge_set(intersection_graph(triangle, triangle, id3)) ==
        edge_set(triangle));
  CHECK(intersection_graph(triangle, empty3, id3).edge_count() == 0);

  const Graph g1 = make_graph(3, {{0, 1}, {1, 2}});
  const Graph g2 = make_graph(3, {{0, 1}, {0, 2}});
  const Graph inter = intersection_graph(g1, g2, id3);
  CHECK(inter.edge_count() == 1);
  CHECK(inter.has_edge(0, 1));

  const Graph ga = make_graph(3, {{0, 1}});
  const Graph gb = make_graph(3, {{1, 2}});
  const Graph uni = union_graph(ga, gb, id3);
  CHECK(uni.edge_count() == 2);
  CHECK(uni.has_edge(0, 1));
  CHECK(uni.has_edge(1, 2));
  CHECK(union_graph(empty3, empty3, id3).edge_count() == 0);
  CHECK(edge_set(union_graph(triangle, triangle, id3)) == edge_set(triangle));

  CHECK(edge_set(difference_graph(triangle, empty3, id3)) ==
        edge_set(triangle));
  CHECK(difference_graph(triangle, triangle, id3).edge_count() == 0);
  const Graph gc = make_graph(3, {{0, 1}, {1, 2}});
  const Graph gd = make_graph(3, {{1, 2}});
  const Graph diff = difference_graph(gc, gd, id3);
  CHECK(diff.edge_count() == 1);
  CHECK(diff.has_edge(0, 1));
}

TEST_CASE("edge decomposition partitions the union") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 16;
    const Graph g1 = random_graph(n, 250, seed);
    const Graph g2 = random_graph(n, 250, seed + 1000);
    Matching m(n);
    for (int i = 0; i < n; i += 2) m.insert(i, (i + 4) % n);

    const auto uni = edge_set(union_graph(g1, g2, m));
    const auto inter = edge_set(intersection_graph(g1, g2, m));
    const auto d12 = edge_set(difference_graph(g1, g2, m));

    // the reverse difference in G1 labels: in G2 under mu but not in G1
    std::set<std::pair<int, int>> d21;
    for (const auto& e : uni) {
      if (!inter.count(e) && !d12.count(e)) d21.insert(e);
    }
    for (const auto& e : d21) {
      CHECK(g2.has_edge(m.image_of(e.first), m.image_of(e.second)));
      CHECK_FALSE(g1.has_edge(e.first, e.second));
    }
    CHECK(inter.size() + d12.size() + d21.size() == uni.size());
    for (const auto& e : inter) CHECK(d12.count(e) == 0);
  }
}

TEST_CASE("degree and neighbors") {
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.degree(0) == 2);
  CHECK(triangle.neighbors(0) == VertexSet{1, 2});

  const Graph lonely(4);
  CHECK(lonely.degree(2) == 0);
  CHECK(lonely.neighbors(2).empty());

  const Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(star.degree(0) == 4);
}

TEST_CASE("graph validation") {
  CHECK_THROWS(make_graph(3, {{0, 0}}));          // self-loop
  CHECK_THROWS(make_graph(3, {{0, 1}, {1, 0}}));  // duplicate
  CHECK_THROWS(make_graph(3, {{0, 3}}));          // out of range
}

TEST_CASE("matching validation") {
  Matching m(4);
  m.insert(0, 2);
  CHECK_THROWS(m.insert(0, 3));  // member twice
  CHECK_THROWS(m.insert(1, 2));  // image twice
  CHECK_THROWS(m.insert(1, 4));  // out of range
  CHECK(m.size() == 1);
  CHECK(m.members() == VertexSet{0});

  const Matching id = Matching::identity(3);
  CHECK(id.size() == 3);
  CHECK(id.image_of(2) == 2);
}

TEST_CASE("edge list io") {
  const Graph g = random_graph(12, 300, 3);
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph back = read_edge_list(buf);
  CHECK(edge_set(back) == edge_set(g));
  CHECK(back.size() == g.size());

  std::stringstream bad1("3 4\n0 1\n");  // missing header
  CHECK_THROWS(read_edge_list(bad1));
  std::stringstream bad2("n=3\n1 0\n");  // i >= j
  CHECK_THROWS(read_edge_list(bad2));
  std::stringstream bad3("n=3\n0 1\n0 1\n");  // duplicate
  CHECK_THROWS(read_edge_list(bad3));
  std::stringstream bad4("n=3\n0 3\n");  // out of range
  CHECK_THROWS(read_edge_list(bad4));
}
