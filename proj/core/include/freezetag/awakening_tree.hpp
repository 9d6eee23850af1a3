#pragma once

#include <vector>

#include "freezetag/geodesic.hpp"
#include "freezetag/schedule.hpp"

namespace freezetag {

/// Travel costs for the continue movement model.
///
/// Nodes are the robots [0, n) followed by the domain corners. A waker at
/// node x reaches robot u at cost(x, u) and ends at endpoint(x, u): u's home
/// under the geodesic metric, the last corner of the geodesic (or x itself
/// when u is already visible) under the visibility metric.
class TravelTable {
 public:
  TravelTable(const RobotSet& robots, const PolygonDomain& d, Metric metric);

  Metric metric() const { return metric_; }
  int robot_count() const { return robots_; }
  int node_count() const { return geo_.size(); }
  Point node_point(int node) const { return geo_.points()[node]; }

  double cost(int from_node, int to_robot) const { return cost_[from_node][to_robot]; }
  int endpoint(int from_node, int to_robot) const { return endpoint_[from_node][to_robot]; }
  /// Waypoints from node_point(from_node) to node_point(endpoint(...)).
  std::vector<Point> route(int from_node, int to_robot) const;

  /// Geodesic distance between two nodes regardless of the wake metric.
  double geodesic(int a, int b) const { return geo_.distance(a, b); }
  const GeodesicMetric& geodesic_metric() const { return geo_; }

 private:
  Metric metric_;
  int robots_;
  GeodesicMetric geo_;
  std::vector<std::vector<double>> cost_;
  std::vector<std::vector<int>> endpoint_;
};

/// Rooted wake tree over a subset of robot ids with explicit child order.
struct AwakeningTree {
  int root = -1;
  std::vector<int> nodes;                  // robot ids in the tree
  std::vector<int> parent;                 // indexed by robot id; -1 root / absent
  std::vector<std::vector<int>> children;  // indexed by robot id, in wake order
  std::vector<double> wake_time;           // indexed by robot id
  int depth = 0;
  double makespan = 0.0;
};

/// Empty tree over `robot_count` ids holding only the root.
AwakeningTree singleton_tree(int root, int robot_count);

/// Recomputes wake times, depth and makespan with the continue model. A node
/// starts waking its children ready_delay[v] after its own wake (empty means
/// no delay), departing from its home.
void evaluate_tree(AwakeningTree& tree, const TravelTable& table,
                   const std::vector<double>& ready_delay = {});

/// Timed motion of every tree node under the continue model, starting at
/// wake_time + ready_delay. Entries for robots outside the tree stay empty.
std::vector<std::vector<TimedPoint>> tree_itineraries(const AwakeningTree& tree, const TravelTable& table,
                                                      const std::vector<double>& ready_delay = {});

/// Full schedule for a tree spanning every robot (continue model).
AwakeningSchedule tree_schedule(const AwakeningTree& tree, const RobotSet& robots, const TravelTable& table);

}  // namespace freezetag
