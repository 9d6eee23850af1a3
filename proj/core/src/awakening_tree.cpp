#include "freezetag/awakening_tree.hpp"

#include <algorithm>

namespace freezetag {

namespace {

std::vector<Point> with_corners(const RobotSet& robots, const PolygonDomain& d) {
  std::vector<Point> pts = robots.positions();
  const std::vector<Point> corners = d.corners();
  pts.insert(pts.end(), corners.begin(), corners.end());
  return pts;
}

}  // namespace

TravelTable::TravelTable(const RobotSet& robots, const PolygonDomain& d, Metric metric)
    : metric_(metric), robots_(robots.size()), geo_(with_corners(robots, d), d) {
  const int nodes = geo_.size();
  cost_.assign(nodes, std::vector<double>(robots_, 0.0));
  endpoint_.assign(nodes, std::vector<int>(robots_, 0));
  for (int x = 0; x < nodes; ++x) {
    for (int u = 0; u < robots_; ++u) {
      if (metric_ == Metric::Geodesic) {
        cost_[x][u] = geo_.distance(x, u);
        endpoint_[x][u] = u;
        continue;
      }
      if (geo_.visible(x, u)) {
        cost_[x][u] = 0.0;
        endpoint_[x][u] = x;
        continue;
      }
      const std::vector<int> ids = geo_.path_ids(x, u);
      // ids: x, corners..., u. Corner graph ids start after all query points.
      const int last_corner = ids[ids.size() - 2];
      endpoint_[x][u] = robots_ + (last_corner - nodes);
      cost_[x][u] = geo_.visibility_distance(x, u);
    }
  }
}

std::vector<Point> TravelTable::route(int from_node, int to_robot) const {
  if (metric_ == Metric::Geodesic) return geo_.path(from_node, to_robot).waypoints;
  return geo_.visibility_path(from_node, to_robot).waypoints;
}

AwakeningTree singleton_tree(int root, int robot_count) {
  AwakeningTree t;
  t.root = root;
  t.nodes = {root};
  t.parent.assign(robot_count, -1);
  t.children.assign(robot_count, {});
  t.wake_time.assign(robot_count, kInfinity);
  t.wake_time[root] = 0.0;
  return t;
}

void evaluate_tree(AwakeningTree& tree, const TravelTable& table, const std::vector<double>& ready_delay) {
  std::fill(tree.wake_time.begin(), tree.wake_time.end(), kInfinity);
  tree.wake_time[tree.root] = 0.0;
  tree.depth = 0;
  tree.makespan = 0.0;
  // Preorder walk; a node's wake time is final before its children are timed.
  std::vector<std::pair<int, int>> stack{{tree.root, 0}};
  while (!stack.empty()) {
    const auto [v, depth] = stack.back();
    stack.pop_back();
    tree.depth = std::max(tree.depth, depth);
    tree.makespan = std::max(tree.makespan, tree.wake_time[v]);
    double time = tree.wake_time[v] + (ready_delay.empty() ? 0.0 : ready_delay[v]);
    int at = v;
    for (int c : tree.children[v]) {
      time += table.cost(at, c);
      at = table.endpoint(at, c);
      tree.wake_time[c] = time;
      stack.push_back({c, depth + 1});
    }
  }
}

std::vector<std::vector<TimedPoint>> tree_itineraries(const AwakeningTree& tree, const TravelTable& table,
                                                      const std::vector<double>& ready_delay) {
  std::vector<std::vector<TimedPoint>> out(tree.parent.size());
  for (int v : tree.nodes) {
    if (tree.children[v].empty()) continue;
    double time = tree.wake_time[v] + (ready_delay.empty() ? 0.0 : ready_delay[v]);
    int at = v;
    auto& it = out[v];
    it.push_back({time, table.node_point(v)});
    for (int c : tree.children[v]) {
      const std::vector<Point> path = table.route(at, c);
      for (std::size_t i = 1; i < path.size(); ++i) {
        time += distance(path[i - 1], path[i]);
        it.push_back({time, path[i]});
      }
      // Pin the wake instant to the evaluated time to avoid drift.
      time = tree.wake_time[c];
      if (path.size() > 1) it.back().t = time;
      at = table.endpoint(at, c);
    }
  }
  return out;
}

AwakeningSchedule tree_schedule(const AwakeningTree& tree, const RobotSet& robots, const TravelTable& table) {
  AwakeningSchedule s;
  s.metric = table.metric();
  s.model = MovementModel::Continue;
  s.root = tree.root;
  s.parent = tree.parent;
  s.wake_time = tree.wake_time;
  s.itineraries = tree_itineraries(tree, table);
  for (int v = 0; v < robots.size(); ++v)
    if (s.itineraries[v].empty() && v != tree.root) s.itineraries[v].push_back({s.wake_time[v], robots.position(v)});
  rebuild_children(s);
  finalize_makespans(s, robots);
  s.degenerate = s.metric == Metric::Visibility && robots.size() > 1 && s.makespan_all == 0.0;
  return s;
}

}  // namespace freezetag
