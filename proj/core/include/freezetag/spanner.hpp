#pragma once

#include <span>
#include <vector>

#include "freezetag/graph.hpp"

namespace freezetag {

/// Bounded-degree subgraph used by the awakening strategy.
struct SpannerGraph {
  /// Same vertices as the base graph; edges are a subset of the base edges.
  WeightedGraph graph;
  double t_target = 0.0;
  double t_measured = 0.0;
  int k_measured = 0;
  /// Per vertex, its neighbors ordered by (edge weight, id): u_1(p), u_2(p), ...
  std::vector<std::vector<int>> neighbor_order;
};

struct SpannerReport {
  double t_measured = 1.0;
  int k_measured = 0;
  bool ok = false;
};

bool is_connected(const WeightedGraph& g);

/// Path-greedy t-spanner: edges scanned by ascending weight, kept when the
/// current spanner distance between the endpoints exceeds t times the weight.
/// Throws std::invalid_argument for t <= 1 or a disconnected input.
SpannerGraph greedy_spanner(const WeightedGraph& g, double t);

/// Stretch guaranteed for the nearest-in-cone graph with k cones:
/// 1 / (1 - 2 sin(pi / k)) for k >= 7, unbounded below that.
double theta_stretch_bound(int k);

/// Cone index of direction (dx, dy) among k cones whose first ray is the
/// positive x axis. Directions on a ray go to the lower-indexed cone.
int cone_index(double dx, double dy, int k);

/// Connects every point to its Euclidean-nearest point in each of k cones
/// (ties by id). Intended for point sets with total mutual visibility.
/// Throws std::invalid_argument for k < 2.
SpannerGraph theta_graph(std::span<const Point> points, int k);

/// Measures the stretch of s against base over all vertex pairs (0/0 counts
/// as 1) and the maximum degree.
SpannerReport verify_spanner(const WeightedGraph& base, const SpannerGraph& s);

/// Recomputes neighbor_order from s.graph.
void order_neighbors(SpannerGraph& s);

}  // namespace freezetag
