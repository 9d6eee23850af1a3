#include "freezetag/geodesic.hpp"

#include <algorithm>
#include <string>

namespace freezetag {

PointOutsideDomain::PointOutsideDomain(std::size_t index)
    : std::invalid_argument("point " + std::to_string(index) + " lies outside the domain"),
      index_(index) {}

double polyline_length(std::span<const Point> waypoints) {
  double len = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i) len += distance(waypoints[i - 1], waypoints[i]);
  return len;
}

WeightedGraph build_visibility_graph(std::span<const Point> points, const PolygonDomain& d,
                                     VertexKind kind) {
  WeightedGraph g;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!point_in_domain(points[i], d)) throw PointOutsideDomain(i);
    g.add_vertex(points[i], kind);
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (is_visible(points[u], points[v], d)) g.add_edge(u, v, distance(points[u], points[v]));
  return g;
}

GeodesicMetric::GeodesicMetric(std::vector<Point> points, PolygonDomain domain)
    : points_(std::move(points)), domain_(std::move(domain)) {
  const int n = size();
  std::vector<Point> all = points_;
  const std::vector<Point> corners = domain_.corners();
  all.insert(all.end(), corners.begin(), corners.end());

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!point_in_domain(all[i], domain_)) throw PointOutsideDomain(i);
    graph_.add_vertex(all[i], static_cast<int>(i) < n ? VertexKind::Robot : VertexKind::SteinerSite);
  }
  for (int u = 0; u < graph_.vertex_count(); ++u)
    for (int v = u + 1; v < graph_.vertex_count(); ++v)
      if (is_visible(all[u], all[v], domain_)) graph_.add_edge(u, v, freezetag::distance(all[u], all[v]));

  DijkstraOptions opts;
  opts.relay.assign(all.size(), false);
  std::fill(opts.relay.begin() + n, opts.relay.end(), true);
  opts.lexicographic_ties = true;

  trees_.reserve(n);
  for (int s = 0; s < n; ++s) trees_.push_back(dijkstra(graph_, s, opts));

  dist_.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = trees_[i].dist[j];
      if (d == kInfinity)
        throw std::logic_error("geodesic graph is disconnected; domain or visibility predicate is broken");
      dist_[i][j] = dist_[j][i] = d;
    }
  }
}

std::vector<int> GeodesicMetric::path_ids(int i, int j) const {
  if (i == j || nearly_equal(points_[i], points_[j])) return {i};
  if (visible(i, j)) return {i, j};
  return trees_[i].path_to(j);
}

GeodesicPath GeodesicMetric::path(int i, int j) const {
  GeodesicPath out;
  for (int v : path_ids(i, j)) out.waypoints.push_back(graph_.vertex(v).point);
  out.length = out.waypoints.size() == 2 ? dist_[i][j] : polyline_length(out.waypoints);
  return out;
}

GeodesicPath GeodesicMetric::visibility_path(int i, int j) const {
  if (visible(i, j)) return {{points_[i]}, 0.0};
  GeodesicPath out = path(i, j);
  out.waypoints.pop_back();
  out.length = polyline_length(out.waypoints);
  return out;
}

double GeodesicMetric::visibility_distance(int i, int j) const {
  return visibility_path(i, j).length;
}

double GeodesicMetric::diameter() const {
  double best = 0.0;
  for (const auto& row : dist_)
    for (double d : row) best = std::max(best, d);
  return best;
}

GeodesicPath geodesic_path(Point a, Point b, const PolygonDomain& d) {
  return GeodesicMetric({a, b}, d).path(0, 1);
}

GeodesicPath gvp(Point a, Point b, const PolygonDomain& d) {
  return GeodesicMetric({a, b}, d).visibility_path(0, 1);
}

double diameter(std::span<const Point> points, const PolygonDomain& d) {
  if (points.empty()) throw std::invalid_argument("diameter of an empty point set");
  return GeodesicMetric({points.begin(), points.end()}, d).diameter();
}

}  // namespace freezetag
