#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "freezetag/geometry.hpp"
#include "freezetag/graph.hpp"

namespace freezetag {

/// Raised when an input point does not lie in the closed domain.
class PointOutsideDomain : public std::invalid_argument {
 public:
  explicit PointOutsideDomain(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Polyline a, r'_1, ..., r'_l, b whose interior waypoints are domain corners.
struct GeodesicPath {
  std::vector<Point> waypoints;
  double length = 0.0;
};

double polyline_length(std::span<const Point> waypoints);

/// Edge (u,v) iff is_visible(u,v); weight is the Euclidean length.
WeightedGraph build_visibility_graph(std::span<const Point> points, const PolygonDomain& d,
                                     VertexKind kind = VertexKind::Robot);

/// Geodesic distances among a fixed point set, with path reconstruction.
///
/// Internally the graph holds the points followed by the domain corners
/// (reflex and hole vertices). Paths may only bend at corners, so the
/// Dijkstra search never relays through another query point.
class GeodesicMetric {
 public:
  GeodesicMetric(std::vector<Point> points, PolygonDomain domain);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const PolygonDomain& domain() const { return domain_; }
  /// Points followed by corners.
  const WeightedGraph& graph() const { return graph_; }

  bool visible(int i, int j) const { return graph_.has_edge(i, j) || i == j; }
  double distance(int i, int j) const { return dist_[i][j]; }
  GeodesicPath path(int i, int j) const;
  /// Graph vertex ids along path(i, j); ids >= size() are corners.
  std::vector<int> path_ids(int i, int j) const;

  /// Shortest travel from point i until point j is visible: empty when the
  /// pair is visible, otherwise the geodesic to its last interior waypoint.
  GeodesicPath visibility_path(int i, int j) const;
  double visibility_distance(int i, int j) const;

  double diameter() const;

 private:
  std::vector<Point> points_;
  PolygonDomain domain_;
  WeightedGraph graph_;
  std::vector<ShortestPathTree> trees_;
  std::vector<std::vector<double>> dist_;
};

GeodesicPath geodesic_path(Point a, Point b, const PolygonDomain& d);
GeodesicPath gvp(Point a, Point b, const PolygonDomain& d);

/// Maximum pairwise geodesic distance; throws std::invalid_argument when empty.
double diameter(std::span<const Point> points, const PolygonDomain& d);

}  // namespace freezetag
