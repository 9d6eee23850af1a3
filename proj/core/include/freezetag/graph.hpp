#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "freezetag/geometry.hpp"

namespace freezetag {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VertexKind { Robot, SteinerSite };

struct GraphVertex {
  Point point;
  VertexKind kind = VertexKind::Robot;
};

struct GraphEdge {
  int to;
  double weight;
};

/// Undirected weighted graph with point-located vertices. Shared by the
/// visibility graph, the geodesic graph view and spanners.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<GraphVertex> vertices);

  int add_vertex(Point p, VertexKind kind = VertexKind::Robot);

  /// Adds the undirected edge (u,v); self-loops and duplicates are ignored.
  /// Returns true when the edge was inserted.
  bool add_edge(int u, int v, double weight);

  bool has_edge(int u, int v) const;
  std::optional<double> edge_weight(int u, int v) const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;

  const GraphVertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& neighbors(int v) const { return adjacency_[v]; }

  struct EdgeRef {
    int u, v;
    double weight;
  };
  /// Each undirected edge once, with u < v, sorted by (weight, u, v).
  std::vector<EdgeRef> sorted_edges() const;

  /// Same vertex set, no edges.
  WeightedGraph empty_copy() const { return WeightedGraph(vertices_); }

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<std::vector<GraphEdge>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Complete graph over points with Euclidean weights.
WeightedGraph complete_euclidean_graph(std::span<const Point> points);

struct ShortestPath {
  std::vector<int> vertices;  // u ... v; empty when disconnected
  double length = kInfinity;
  bool connected() const { return length != kInfinity; }
};

/// Single-source distances and predecessors.
struct ShortestPathTree {
  int source = -1;
  std::vector<double> dist;
  std::vector<int> pred;
  std::vector<int> path_to(int v) const;
};

struct DijkstraOptions {
  /// Vertices other than the source that may relay paths; empty means all.
  std::vector<bool> relay;
  /// Stop expanding once distances exceed this bound.
  double bound = kInfinity;
  /// Break exact ties by the lexicographically smallest vertex-id sequence.
  bool lexicographic_ties = false;
};

ShortestPathTree dijkstra(const WeightedGraph& g, int source, const DijkstraOptions& opts = {});

/// Minimum-weight path between u and v. u == v gives {u}, length 0.
ShortestPath shortest_path_in_graph(const WeightedGraph& g, int u, int v);

/// All-pairs shortest path lengths (n Dijkstra runs).
std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g);

}  // namespace freezetag
