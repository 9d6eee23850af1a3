#include <doctest.h>

#include <random>

#include "freezetag/graph.hpp"

using namespace freezetag;

namespace {

std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0.0;
    for (const GraphEdge& e : g.neighbors(u)) d[u][e.to] = std::min(d[u][e.to], e.weight);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

WeightedGraph random_graph(std::mt19937_64& rng, int n, double density) {
  WeightedGraph g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) g.add_vertex({u(rng), u(rng)});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < density) g.add_edge(i, j, 0.1 + u(rng));
  return g;
}

}  // namespace

TEST_CASE("edges are undirected and deduplicated") {
  WeightedGraph g;
  for (int i = 0; i < 3; ++i) g.add_vertex({double(i), 0});
  CHECK(g.add_edge(0, 1, 1.0));
  CHECK_FALSE(g.add_edge(1, 0, 1.0));
  CHECK_FALSE(g.add_edge(2, 2, 0.0));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_weight(0, 1) == 1.0);
  CHECK_FALSE(g.edge_weight(0, 2).has_value());
  CHECK(g.max_degree() == 1);
}

TEST_CASE("sorted edges order by weight then ids") {
  WeightedGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex({double(i), 0});
  g.add_edge(2, 3, 1.0);
  g.add_edge(1, 0, 1.0);
  g.add_edge(0, 3, 0.5);
  const auto e = g.sorted_edges();
  REQUIRE(e.size() == 3);
  CHECK((e[0].u == 0 && e[0].v == 3));
  CHECK((e[1].u == 0 && e[1].v == 1));
  CHECK((e[2].u == 2 && e[2].v == 3));
}

TEST_CASE("shortest paths") {
  WeightedGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex({double(i), 0});
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(0, 2, 3.0);
  SUBCASE("same vertex") {
    const ShortestPath p = shortest_path_in_graph(g, 1, 1);
    CHECK(p.length == 0.0);
    CHECK(p.vertices == std::vector<int>{1});
  }
  SUBCASE("direct edge cheapest") {
    const ShortestPath p = shortest_path_in_graph(g, 0, 1);
    CHECK(p.vertices == std::vector<int>{0, 1});
    CHECK(p.length == 1.0);
  }
  SUBCASE("detour beats a heavy edge") {
    const ShortestPath p = shortest_path_in_graph(g, 0, 2);
    CHECK(p.vertices == std::vector<int>{0, 1, 2});
    CHECK(p.length == 2.0);
  }
  SUBCASE("disconnected") {
    const ShortestPath p = shortest_path_in_graph(g, 0, 3);
    CHECK_FALSE(p.connected());
    CHECK(p.vertices.empty());
  }
}

TEST_CASE("relay restriction and lexicographic ties") {
  WeightedGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex({double(i), 0});
  g.add_edge(0, 2, 1.0);
  g.add_edge(2, 3, 1.0);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 3, 1.0);
  DijkstraOptions opts;
  opts.lexicographic_ties = true;
  CHECK(dijkstra(g, 0, opts).path_to(3) == std::vector<int>{0, 1, 3});
  opts.relay = {true, false, true, true};
  CHECK(dijkstra(g, 0, opts).path_to(3) == std::vector<int>{0, 2, 3});
  opts.relay = {true, false, false, true};
  CHECK(dijkstra(g, 0, opts).dist[3] == kInfinity);
  CHECK(dijkstra(g, 0, opts).dist[1] == 1.0);
}

TEST_CASE("dijkstra matches Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = random_graph(rng, 12, 0.3);
    const auto expected = floyd_warshall(g);
    const auto got = all_pairs_distances(g);
    for (int i = 0; i < g.vertex_count(); ++i)
      for (int j = 0; j < g.vertex_count(); ++j) {
        if (expected[i][j] == kInfinity) CHECK(got[i][j] == kInfinity);
        else CHECK(got[i][j] == doctest::Approx(expected[i][j]).epsilon(1e-12));
      }
  }
}

TEST_CASE("complete euclidean graph") {
  const std::vector<Point> pts{{0, 0}, {3, 4}, {6, 8}};
  const WeightedGraph g = complete_euclidean_graph(pts);
  CHECK(g.edge_count() == 3);
  CHECK(*g.edge_weight(0, 2) == doctest::Approx(10.0));
}
