#include "freezetag/cfa.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace freezetag {

RobotSet place_steiner(const PolygonDomain& d, const RobotSet& s) {
  RobotSet out = s;
  for (const Point& corner : d.corners()) {
    const bool hosted = std::any_of(out.robots.begin(), out.robots.end(),
                                    [&](const Robot& r) { return nearly_equal(r.position, corner); });
    if (!hosted) out.robots.push_back({out.size(), corner, Origin::Steiner});
  }
  return out;
}

RouteFn straight_routes(const RobotSet& s, Metric metric) {
  return [&s, metric](int waker, int target) -> std::vector<Point> {
    if (metric == Metric::Visibility) return {s.position(waker)};
    return {s.position(waker), s.position(target)};
  };
}

namespace {

struct Event {
  double time;
  int kind;  // 0 = arrival, 1 = departure; arrivals settle first at equal times
  int robot;
  int target;
  auto key() const { return std::tie(time, kind, robot, target); }
  bool operator>(const Event& o) const { return key() > o.key(); }
};

struct Claim {
  int waker = -1;
  double arrival = kInfinity;
  bool beats(double t, int w) const { return arrival < t || (arrival == t && waker < w); }
};

}  // namespace

AwakeningSchedule cfa_schedule(const RobotSet& s, const SpannerGraph& vt, Metric metric,
                               const RouteFn& route_in) {
  const int n = s.size();
  if (vt.graph.vertex_count() != n)
    throw std::invalid_argument("spanner must have exactly one vertex per robot");
  const RouteFn route = route_in ? route_in : straight_routes(s, metric);

  AwakeningSchedule out;
  out.metric = metric;
  out.model = MovementModel::ReturnHome;
  out.root = s.source_id;
  out.parent.assign(n, -1);
  out.wake_time.assign(n, kInfinity);
  out.itineraries.assign(n, {});

  std::vector<Claim> claims(n);
  std::vector<std::size_t> cursor(n, 0);
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;

  out.wake_time[out.root] = 0.0;
  claims[out.root] = {out.root, 0.0};
  out.itineraries[out.root].push_back({0.0, s.position(out.root)});
  events.push({0.0, 1, out.root, -1});

  while (!events.empty()) {
    const Event ev = events.top();
    events.pop();
    if (ev.kind == 0) {
      if (claims[ev.target].waker == ev.robot && out.wake_time[ev.target] == kInfinity) {
        out.wake_time[ev.target] = ev.time;
        out.parent[ev.target] = ev.robot;
        out.itineraries[ev.target].push_back({ev.time, s.position(ev.target)});
        events.push({ev.time, 1, ev.target, -1});
      }
      continue;
    }

    const int p = ev.robot;
    const auto& order = vt.neighbor_order[p];
    while (cursor[p] < order.size()) {
      const int u = order[cursor[p]++];
      if (out.wake_time[u] != kInfinity) continue;
      const std::vector<Point> path = route(p, u);
      const double cost = polyline_length(path);
      const double arrival = ev.time + cost;
      if (claims[u].beats(arrival, p)) continue;
      claims[u] = {p, arrival};

      auto& it = out.itineraries[p];
      double t = ev.time;
      for (std::size_t i = 1; i < path.size(); ++i) {
        t += distance(path[i - 1], path[i]);
        it.push_back({t, path[i]});
      }
      for (std::size_t i = path.size(); i-- > 1;) {
        t += distance(path[i], path[i - 1]);
        it.push_back({t, path[i - 1]});
      }
      events.push({arrival, 0, p, u});
      events.push({ev.time + 2.0 * cost, 1, p, -1});
      break;
    }
  }

  for (int v = 0; v < n; ++v)
    if (out.wake_time[v] == kInfinity)
      throw std::invalid_argument("spanner is disconnected: robot " + std::to_string(v) +
                                  " is never woken");
  rebuild_children(out);
  finalize_makespans(out, s);
  out.degenerate = metric == Metric::Visibility && n > 1 && out.makespan_all == 0.0;
  return out;
}

CfaBoundReport check_cfa_bounds(const AwakeningSchedule& s, const RobotSet& robots,
                                const GeodesicMetric& metric, double t_target, int k_measured) {
  CfaBoundReport r;
  r.factor = t_target * (2.0 * k_measured - 1.0);
  r.constant_applies = t_target == 6.0 && k_measured <= 7;
  constexpr double kSlack = 1e-9;
  const int src = robots.source_id;
  for (const Robot& robot : robots.robots) {
    if (robot.origin != Origin::Original || robot.id == src) continue;
    const double geo = metric.distance(src, robot.id);
    const double wake = s.wake_time[robot.id];
    if (geo > 0.0) r.worst_ratio = std::max(r.worst_ratio, wake / geo);
    if (wake > r.factor * geo + kSlack) r.per_robot_ok = false;
    if (r.constant_applies && wake > 78.0 * geo + kSlack) r.constant_ok = false;
  }
  r.diameter = metric.diameter();
  r.makespan_ok = s.makespan_all <= r.factor * r.diameter + kSlack;
  return r;
}

WeightedGraph point_visibility_graph(const GeodesicMetric& metric) {
  WeightedGraph g;
  for (int i = 0; i < metric.size(); ++i) g.add_vertex(metric.points()[i], metric.graph().vertex(i).kind);
  for (int u = 0; u < metric.size(); ++u)
    for (const GraphEdge& e : metric.graph().neighbors(u))
      if (e.to < metric.size()) g.add_edge(u, e.to, e.weight);
  return g;
}

CfaSolution solve_cfa(const PolygonDomain& d, const RobotSet& s, Metric metric, double t) {
  RobotSet robots = place_steiner(d, s);
  GeodesicMetric geo(robots.positions(), d);
  WeightedGraph vis;
  for (const Robot& r : robots.robots)
    vis.add_vertex(r.position, r.origin == Origin::Steiner ? VertexKind::SteinerSite : VertexKind::Robot);
  for (const auto& e : point_visibility_graph(geo).sorted_edges()) vis.add_edge(e.u, e.v, e.weight);
  SpannerGraph vt = greedy_spanner(vis, t);
  AwakeningSchedule schedule = cfa_schedule(robots, vt, metric);
  return {std::move(robots), std::move(geo), std::move(vis), std::move(vt), std::move(schedule)};
}

}  // namespace freezetag
