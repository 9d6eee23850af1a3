#include "freezetag/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace freezetag {

bool is_connected(const WeightedGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const GraphEdge& e : g.neighbors(u)) {
      if (seen[e.to]) continue;
      seen[e.to] = true;
      ++reached;
      stack.push_back(e.to);
    }
  }
  return reached == g.vertex_count();
}

void order_neighbors(SpannerGraph& s) {
  s.neighbor_order.assign(s.graph.vertex_count(), {});
  for (int v = 0; v < s.graph.vertex_count(); ++v) {
    std::vector<GraphEdge> adj = s.graph.neighbors(v);
    std::sort(adj.begin(), adj.end(), [](const GraphEdge& a, const GraphEdge& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.to < b.to;
    });
    for (const GraphEdge& e : adj) s.neighbor_order[v].push_back(e.to);
  }
}

SpannerGraph greedy_spanner(const WeightedGraph& g, double t) {
  if (!(t > 1.0)) throw std::invalid_argument("spanner stretch must exceed 1");
  if (!is_connected(g)) throw std::invalid_argument("greedy spanner needs a connected graph");

  SpannerGraph s;
  s.graph = g.empty_copy();
  s.t_target = t;
  for (const auto& e : g.sorted_edges()) {
    DijkstraOptions opts;
    opts.bound = t * e.weight;
    const double current = dijkstra(s.graph, e.u, opts).dist[e.v];
    if (current > t * e.weight) s.graph.add_edge(e.u, e.v, e.weight);
  }
  order_neighbors(s);
  const SpannerReport report = verify_spanner(g, s);
  s.t_measured = report.t_measured;
  s.k_measured = report.k_measured;
  return s;
}

double theta_stretch_bound(int k) {
  if (k < 7) return kInfinity;
  return 1.0 / (1.0 - 2.0 * std::sin(std::numbers::pi / k));
}

int cone_index(double dx, double dy, int k) {
  double angle = std::atan2(dy, dx);
  if (angle < 0.0) angle += 2.0 * std::numbers::pi;
  const double slot = angle / (2.0 * std::numbers::pi / k);
  const double ray = std::round(slot);
  if (std::abs(slot - ray) < 1e-9) {
    const int r = static_cast<int>(ray);
    return (r == 0 || r == k) ? 0 : r - 1;
  }
  return std::min(static_cast<int>(std::floor(slot)), k - 1);
}

SpannerGraph theta_graph(std::span<const Point> points, int k) {
  if (k < 2) throw std::invalid_argument("theta graph needs at least 2 cones");
  const int n = static_cast<int>(points.size());
  SpannerGraph s;
  for (const Point& p : points) s.graph.add_vertex(p);
  s.t_target = theta_stretch_bound(k);

  for (int p = 0; p < n; ++p) {
    std::vector<int> nearest(k, -1);
    std::vector<double> best(k, kInfinity);
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      const double d = distance(points[p], points[q]);
      // Coincident points have no direction; they share cone 0.
      const int cone = d == 0.0 ? 0 : cone_index(points[q].x - points[p].x, points[q].y - points[p].y, k);
      if (d < best[cone]) {
        best[cone] = d;
        nearest[cone] = q;
      }
    }
    for (int c = 0; c < k; ++c)
      if (nearest[c] >= 0) s.graph.add_edge(p, nearest[c], best[c]);
  }
  order_neighbors(s);
  const SpannerReport report = verify_spanner(complete_euclidean_graph(points), s);
  s.t_measured = report.t_measured;
  s.k_measured = report.k_measured;
  return s;
}

SpannerReport verify_spanner(const WeightedGraph& base, const SpannerGraph& s) {
  SpannerReport r;
  r.k_measured = s.graph.max_degree();
  const auto base_dist = all_pairs_distances(base);
  const auto span_dist = all_pairs_distances(s.graph);
  for (int u = 0; u < base.vertex_count(); ++u) {
    for (int v = u + 1; v < base.vertex_count(); ++v) {
      const double b = base_dist[u][v];
      const double h = span_dist[u][v];
      if (b == kInfinity) continue;
      double ratio = 1.0;
      if (h == kInfinity) ratio = kInfinity;
      else if (b > 0.0) ratio = h / b;
      else if (h > 0.0) ratio = kInfinity;
      r.t_measured = std::max(r.t_measured, ratio);
    }
  }
  r.ok = r.t_measured <= s.t_target + 1e-9;
  return r;
}

}  // namespace freezetag
