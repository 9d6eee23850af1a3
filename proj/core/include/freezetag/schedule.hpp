#pragma once

#include <string>
#include <vector>

#include "freezetag/geometry.hpp"

namespace freezetag {

/// Wake semantics: touch the sleeper, or bring it into line of sight.
enum class Metric { Geodesic, Visibility };

/// How a waker moves between wakes.
enum class MovementModel {
  ReturnHome,  // back to its own start point after every wake
  Continue,    // proceeds from wherever the last wake left it
  Composite,   // return-home inside pixels, continue between them
};

enum class Origin { Original, Steiner };

const char* to_string(Metric m);
const char* to_string(MovementModel m);
const char* to_string(Origin o);
Metric parse_metric(const std::string& s);
MovementModel parse_movement_model(const std::string& s);

struct Robot {
  int id = 0;
  Point position;
  Origin origin = Origin::Original;
};

/// Robots indexed by id (id == position in the vector); the source is original.
struct RobotSet {
  std::vector<Robot> robots;
  int source_id = 0;

  static RobotSet from_points(const std::vector<Point>& points, int source = 0);

  int size() const { return static_cast<int>(robots.size()); }
  std::vector<Point> positions() const;
  int original_count() const;
  Point position(int id) const { return robots[id].position; }
};

struct TimedPoint {
  double t = 0.0;
  Point p;
};

/// Rooted wake tree plus per-robot timed motion.
struct AwakeningSchedule {
  Metric metric = Metric::Geodesic;
  MovementModel model = MovementModel::ReturnHome;
  int root = 0;
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;  // per parent, in wake order
  std::vector<double> wake_time;
  std::vector<std::vector<TimedPoint>> itineraries;
  double makespan_all = 0.0;
  double makespan_original = 0.0;
  /// Set when every wake cost nothing because each spanner edge already joins
  /// mutually visible robots (visibility metric).
  bool degenerate = false;

  int size() const { return static_cast<int>(wake_time.size()); }
};

/// Rebuilds children lists (sorted by wake time, then id) from parent.
void rebuild_children(AwakeningSchedule& s);
/// Sets makespan_all / makespan_original from wake_time.
void finalize_makespans(AwakeningSchedule& s, const RobotSet& robots);

/// Distance the awakening process travels before the robot wakes (unit
/// speed, so its wake time). Throws std::out_of_range for unknown ids.
double awakedist(const AwakeningSchedule& s, int robot_id);

/// Position of a robot at time t according to its itinerary; its home
/// before the first entry and the last entry after the itinerary ends.
Point position_at(const AwakeningSchedule& s, const RobotSet& robots, int robot_id, double t);

struct ScheduleViolation {
  std::string kind;  // spanning, causality, wake, speed, containment, makespan
  int robot = -1;
  std::string message;
};

/// Empty iff the schedule is physically consistent for this robot set and
/// domain.
std::vector<ScheduleViolation> validate_schedule(const AwakeningSchedule& s, const RobotSet& robots,
                                                 const PolygonDomain& d);

}  // namespace freezetag
