#include "freezetag/graph.hpp"

#include <algorithm>
#include <queue>

namespace freezetag {

WeightedGraph::WeightedGraph(std::vector<GraphVertex> vertices)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {}

int WeightedGraph::add_vertex(Point p, VertexKind kind) {
  vertices_.push_back({p, kind});
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

bool WeightedGraph::add_edge(int u, int v, double weight) {
  if (u == v || has_edge(u, v)) return false;
  adjacency_[u].push_back({v, weight});
  adjacency_[v].push_back({u, weight});
  ++edge_count_;
  return true;
}

bool WeightedGraph::has_edge(int u, int v) const { return edge_weight(u, v).has_value(); }

std::optional<double> WeightedGraph::edge_weight(int u, int v) const {
  for (const GraphEdge& e : adjacency_[u])
    if (e.to == v) return e.weight;
  return std::nullopt;
}

int WeightedGraph::max_degree() const {
  int k = 0;
  for (const auto& adj : adjacency_) k = std::max(k, static_cast<int>(adj.size()));
  return k;
}

std::vector<WeightedGraph::EdgeRef> WeightedGraph::sorted_edges() const {
  std::vector<EdgeRef> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (const GraphEdge& e : adjacency_[u])
      if (u < e.to) out.push_back({u, e.to, e.weight});
  std::sort(out.begin(), out.end(), [](const EdgeRef& a, const EdgeRef& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  return out;
}

WeightedGraph complete_euclidean_graph(std::span<const Point> points) {
  WeightedGraph g;
  for (const Point& p : points) g.add_vertex(p);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) g.add_edge(u, v, distance(points[u], points[v]));
  return g;
}

std::vector<int> ShortestPathTree::path_to(int v) const {
  if (v < 0 || dist[v] == kInfinity) return {};
  std::vector<int> path;
  for (int x = v; x != -1; x = pred[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Absolute slack under which two path lengths count as a tie.
constexpr double kTieEps = 1e-12;

// True when the path to u followed by v is lexicographically smaller than the
// current path to v. Rejects candidates whose path already contains v.
bool lex_better(const ShortestPathTree& t, int u, int v) {
  std::vector<int> cand = t.path_to(u);
  if (std::find(cand.begin(), cand.end(), v) != cand.end()) return false;
  cand.push_back(v);
  const std::vector<int> cur = t.path_to(v);
  return std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end());
}

}  // namespace

ShortestPathTree dijkstra(const WeightedGraph& g, int source, const DijkstraOptions& opts) {
  const int n = g.vertex_count();
  ShortestPathTree t{source, std::vector<double>(n, kInfinity), std::vector<int>(n, -1)};
  std::vector<bool> done(n, false);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  t.dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (done[u] || d > t.dist[u]) continue;
    done[u] = true;
    if (d > opts.bound) break;
    if (u != source && !opts.relay.empty() && !opts.relay[u]) continue;
    for (const GraphEdge& e : g.neighbors(u)) {
      const double nd = d + e.weight;
      if (nd < t.dist[e.to] - (opts.lexicographic_ties ? kTieEps : 0.0)) {
        t.dist[e.to] = nd;
        t.pred[e.to] = u;
        pq.push({nd, e.to});
      } else if (opts.lexicographic_ties && e.to != source && nd <= t.dist[e.to] + kTieEps &&
                 lex_better(t, u, e.to)) {
        t.pred[e.to] = u;
        if (nd < t.dist[e.to]) {
          t.dist[e.to] = nd;
          pq.push({nd, e.to});
        }
      }
    }
  }
  return t;
}

ShortestPath shortest_path_in_graph(const WeightedGraph& g, int u, int v) {
  const ShortestPathTree t = dijkstra(g, u);
  ShortestPath out;
  out.length = t.dist[v];
  out.vertices = t.path_to(v);
  return out;
}

std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g) {
  std::vector<std::vector<double>> out;
  out.reserve(g.vertex_count());
  for (int s = 0; s < g.vertex_count(); ++s) out.push_back(dijkstra(g, s).dist);
  return out;
}

}  // namespace freezetag
