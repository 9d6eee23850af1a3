#include "freezetag/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace freezetag {

namespace {
constexpr double kTimeTol = 1e-7;
constexpr double kTouchTol = 1e-6;
}  // namespace

const char* to_string(Metric m) { return m == Metric::Geodesic ? "geodesic" : "visibility"; }

const char* to_string(MovementModel m) {
  switch (m) {
    case MovementModel::ReturnHome: return "return-home";
    case MovementModel::Continue: return "continue";
    case MovementModel::Composite: return "composite";
  }
  return "unknown";
}

const char* to_string(Origin o) { return o == Origin::Original ? "original" : "steiner"; }

Metric parse_metric(const std::string& s) {
  if (s == "geodesic") return Metric::Geodesic;
  if (s == "visibility") return Metric::Visibility;
  throw std::invalid_argument("unknown metric '" + s + "'");
}

MovementModel parse_movement_model(const std::string& s) {
  if (s == "return-home") return MovementModel::ReturnHome;
  if (s == "continue") return MovementModel::Continue;
  if (s == "composite") return MovementModel::Composite;
  throw std::invalid_argument("unknown movement model '" + s + "'");
}

RobotSet RobotSet::from_points(const std::vector<Point>& points, int source) {
  RobotSet s;
  for (std::size_t i = 0; i < points.size(); ++i)
    s.robots.push_back({static_cast<int>(i), points[i], Origin::Original});
  s.source_id = source;
  return s;
}

std::vector<Point> RobotSet::positions() const {
  std::vector<Point> out;
  out.reserve(robots.size());
  for (const Robot& r : robots) out.push_back(r.position);
  return out;
}

int RobotSet::original_count() const {
  return static_cast<int>(std::count_if(robots.begin(), robots.end(),
                                        [](const Robot& r) { return r.origin == Origin::Original; }));
}

void rebuild_children(AwakeningSchedule& s) {
  s.children.assign(s.size(), {});
  for (int v = 0; v < s.size(); ++v)
    if (s.parent[v] >= 0 && s.parent[v] < s.size()) s.children[s.parent[v]].push_back(v);
  for (auto& ch : s.children)
    std::sort(ch.begin(), ch.end(), [&](int a, int b) {
      return s.wake_time[a] != s.wake_time[b] ? s.wake_time[a] < s.wake_time[b] : a < b;
    });
}

void finalize_makespans(AwakeningSchedule& s, const RobotSet& robots) {
  s.makespan_all = 0.0;
  s.makespan_original = 0.0;
  for (int v = 0; v < s.size(); ++v) {
    s.makespan_all = std::max(s.makespan_all, s.wake_time[v]);
    if (robots.robots[v].origin == Origin::Original)
      s.makespan_original = std::max(s.makespan_original, s.wake_time[v]);
  }
}

double awakedist(const AwakeningSchedule& s, int robot_id) {
  if (robot_id < 0 || robot_id >= s.size())
    throw std::out_of_range("unknown robot id " + std::to_string(robot_id));
  return s.wake_time[robot_id];
}

namespace {

// Every position the robot may occupy at time t (several when zero-duration
// moves share a timestamp).
std::vector<Point> positions_at(const AwakeningSchedule& s, const RobotSet& robots, int id, double t) {
  const auto& it = s.itineraries[id];
  const Point home = robots.position(id);
  if (it.empty() || t < it.front().t - kTimeTol) return {home};
  if (t > it.back().t + kTimeTol) return {it.back().p};
  std::vector<Point> out;
  for (std::size_t i = 0; i < it.size(); ++i) {
    if (std::abs(it[i].t - t) <= kTimeTol) out.push_back(it[i].p);
    if (i + 1 < it.size() && it[i].t < t && t < it[i + 1].t) {
      const double f = (t - it[i].t) / (it[i + 1].t - it[i].t);
      out.push_back(it[i].p + f * (it[i + 1].p - it[i].p));
    }
  }
  return out;
}

std::string fmt(const char* what, int a, int b = -1) {
  std::ostringstream o;
  o << what << " (robot " << a;
  if (b >= 0) o << ", parent " << b;
  o << ")";
  return o.str();
}

}  // namespace

Point position_at(const AwakeningSchedule& s, const RobotSet& robots, int robot_id, double t) {
  return positions_at(s, robots, robot_id, t).front();
}

std::vector<ScheduleViolation> validate_schedule(const AwakeningSchedule& s, const RobotSet& robots,
                                                 const PolygonDomain& d) {
  std::vector<ScheduleViolation> out;
  const int n = robots.size();
  if (s.size() != n || static_cast<int>(s.parent.size()) != n ||
      static_cast<int>(s.itineraries.size()) != n) {
    out.push_back({"spanning", -1, "schedule size does not match the robot set"});
    return out;
  }
  if (s.root != robots.source_id || s.parent[s.root] != -1 || s.wake_time[s.root] != 0.0)
    out.push_back({"spanning", s.root, "tree must be rooted at the source, awake at time 0"});

  // Each non-root robot has exactly one parent and reaches the root.
  for (int v = 0; v < n; ++v) {
    if (v == s.root) continue;
    const int p = s.parent[v];
    if (p < 0 || p >= n) {
      out.push_back({"spanning", v, fmt("robot is never woken", v)});
      continue;
    }
    int steps = 0;
    int x = v;
    while (x != s.root && x >= 0 && steps <= n) {
      x = s.parent[x];
      ++steps;
    }
    if (x != s.root) out.push_back({"spanning", v, fmt("parent chain does not reach the root", v)});
  }
  if (static_cast<int>(s.children.size()) == n) {
    std::vector<int> woken(n, 0);
    for (int p = 0; p < n; ++p)
      for (int c : s.children[p]) {
        if (c < 0 || c >= n || s.parent[c] != p)
          out.push_back({"spanning", c, fmt("children list disagrees with parent", c, p)});
        else
          ++woken[c];
      }
    for (int v = 0; v < n; ++v)
      if (v != s.root && woken[v] != 1)
        out.push_back({"spanning", v, fmt("robot must be woken exactly once", v)});
  }

  for (int v = 0; v < n; ++v) {
    const int p = s.parent[v];
    if (v == s.root || p < 0 || p >= n) continue;
    if (s.wake_time[p] > s.wake_time[v] + kTimeTol) {
      out.push_back({"causality", v, fmt("woken before its waker", v, p)});
      continue;
    }
    const auto candidates = positions_at(s, robots, p, s.wake_time[v]);
    const Point target = robots.position(v);
    const bool woke = std::any_of(candidates.begin(), candidates.end(), [&](Point q) {
      return s.metric == Metric::Geodesic ? distance(q, target) <= kTouchTol : is_visible(q, target, d);
    });
    if (!woke) out.push_back({"wake", v, fmt("waker is not in position at the wake time", v, p)});
  }

  for (int v = 0; v < n; ++v) {
    const auto& it = s.itineraries[v];
    if (it.empty()) continue;
    if (it.front().t < s.wake_time[v] - kTimeTol)
      out.push_back({"causality", v, fmt("robot moves before it is awake", v)});
    if (distance(it.front().p, robots.position(v)) > kTouchTol)
      out.push_back({"itinerary", v, fmt("itinerary does not start at home", v)});
    for (std::size_t i = 1; i < it.size(); ++i) {
      const double dt = it[i].t - it[i - 1].t;
      const double len = distance(it[i - 1].p, it[i].p);
      if (dt < -kTimeTol || len > dt + kTimeTol)
        out.push_back({"speed", v, fmt("itinerary exceeds unit speed", v)});
      if (!is_visible(it[i - 1].p, it[i].p, d))
        out.push_back({"containment", v, fmt("itinerary segment leaves the domain", v)});
    }
  }

  AwakeningSchedule check = s;
  finalize_makespans(check, robots);
  if (std::abs(check.makespan_all - s.makespan_all) > kTimeTol ||
      std::abs(check.makespan_original - s.makespan_original) > kTimeTol)
    out.push_back({"makespan", -1, "reported makespans disagree with wake times"});
  return out;
}

}  // namespace freezetag
