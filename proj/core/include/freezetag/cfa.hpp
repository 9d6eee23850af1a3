#pragma once

#include <functional>
#include <vector>

#include "freezetag/geodesic.hpp"
#include "freezetag/schedule.hpp"
#include "freezetag/spanner.hpp"

namespace freezetag {

/// Appends a Steiner robot at every reflex or hole vertex that hosts no robot.
RobotSet place_steiner(const PolygonDomain& d, const RobotSet& s);

/// Route a waker follows from its home to the point where it wakes the
/// target. Must start at the waker's home; its length is the trip cost.
using RouteFn = std::function<std::vector<Point>(int waker, int target)>;

/// Default routes: the straight spanner edge (geodesic metric) or no motion at
/// all (visibility metric; spanner edges join mutually visible robots).
RouteFn straight_routes(const RobotSet& s, Metric metric);

/// Constant-factor awakening strategy over a spanner whose vertex i is robot
/// i. A woken robot visits its still-asleep spanner neighbors in
/// neighbor_order, returning home after each wake. A sleeper goes to the
/// waker with the earliest arrival (ties by waker id); later claimants skip
/// it. Throws std::invalid_argument when some robot is unreachable.
AwakeningSchedule cfa_schedule(const RobotSet& s, const SpannerGraph& vt, Metric metric,
                               const RouteFn& route = {});

/// Per-robot and makespan guarantees of the strategy, evaluated on a
/// geodesic-metric schedule.
struct CfaBoundReport {
  double factor = 0.0;          // t * (2k - 1)
  double worst_ratio = 0.0;     // max over original robots of wake / geodesic(s0, s)
  bool per_robot_ok = true;     // wake <= factor * geodesic(s0, s) for every original robot
  double diameter = 0.0;        // geodesic diameter of all robots
  bool makespan_ok = true;      // makespan_all <= factor * diameter
  bool constant_applies = false;  // t = 6 and k <= 7
  bool constant_ok = true;      // wake <= 78 * geodesic(s0, s)
};

/// `metric` must be built over exactly the robot positions of `robots`.
CfaBoundReport check_cfa_bounds(const AwakeningSchedule& s, const RobotSet& robots,
                                const GeodesicMetric& metric, double t_target, int k_measured);

/// Everything the domain-wide strategy produces.
struct CfaSolution {
  RobotSet robots;  // original robots followed by Steiner robots
  GeodesicMetric metric;
  WeightedGraph visibility;
  SpannerGraph spanner;
  AwakeningSchedule schedule;
};

/// Steiner placement, visibility graph, greedy spanner at stretch t, then the
/// awakening strategy.
CfaSolution solve_cfa(const PolygonDomain& d, const RobotSet& s, Metric metric, double t = 6.0);

/// Subgraph of the metric's visibility graph induced by its query points.
WeightedGraph point_visibility_graph(const GeodesicMetric& metric);

}  // namespace freezetag
