#include "freezetag/ptas.hpp"

#include <algorithm>
#include <boost/geometry.hpp>
#include <boost/geometry/geometries/box.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "freezetag/oracle.hpp"

namespace freezetag {

namespace bg = boost::geometry;

namespace {

using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, /*clockwise=*/false, /*closed=*/false>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;
using BBox = bg::model::box<BPoint>;

constexpr double kMinPixelArea = 1e-14;

template <typename BRing>
Ring to_ring(const BRing& r) {
  Ring out;
  for (const BPoint& p : r) {
    const Point q{p.x(), p.y()};
    if (out.empty() || !nearly_equal(out.back(), q, 1e-15)) out.push_back(q);
  }
  while (out.size() > 1 && nearly_equal(out.front(), out.back(), 1e-15)) out.pop_back();
  return out;
}

BPolygon to_boost(const PolygonDomain& d) {
  BPolygon poly;
  for (const Point& p : d.outer()) poly.outer().push_back(BPoint(p.x, p.y));
  for (const Ring& hole : d.holes()) {
    poly.inners().emplace_back();
    for (const Point& p : hole) poly.inners().back().push_back(BPoint(p.x, p.y));
  }
  return poly;
}

bool ring_is_convex(const Ring& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    if (line_offset(r[i], r[(i + 1) % n], r[(i + 2) % n]) < -kGeomEps) return false;
  return true;
}

double vertex_diameter(const Ring& r) {
  double best = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) best = std::max(best, distance(r[i], r[j]));
  return best;
}

}  // namespace

std::vector<Pixel> pixelize(const PolygonDomain& d, int m) {
  if (m < 1) throw std::invalid_argument("grid resolution must be at least 1");
  const BPolygon domain = to_boost(d);
  const auto box = d.bounding_box();
  const double side = 1.0 / m;
  std::vector<Pixel> out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const BBox cell(BPoint(i * side, j * side), BPoint((i + 1) * side, (j + 1) * side));
      if ((i + 1) * side < box.min_x || i * side > box.max_x || (j + 1) * side < box.min_y ||
          j * side > box.max_y)
        continue;
      BMultiPolygon parts;
      bg::intersection(domain, cell, parts);
      int component = 0;
      for (const BPolygon& part : parts) {
        if (bg::area(part) <= kMinPixelArea) continue;
        Pixel px;
        px.cell_x = i;
        px.cell_y = j;
        px.component = component++;
        px.outer = to_ring(part.outer());
        for (const auto& inner : part.inners()) px.holes.push_back(to_ring(inner));
        px.convex = px.holes.empty() && ring_is_convex(px.outer);
        px.diameter = vertex_diameter(px.outer);
        out.push_back(std::move(px));
      }
    }
  }
  return out;
}

bool pixel_contains(const Pixel& px, Point p) {
  if (classify_in_ring(p, px.outer) == RingSide::Outside) return false;
  for (const Ring& hole : px.holes)
    if (classify_in_ring(p, hole) == RingSide::Inside) return false;
  return true;
}

void assign_members(std::vector<Pixel>& pixels, const RobotSet& s) {
  for (Pixel& px : pixels) px.members.clear();
  for (const Robot& r : s.robots) {
    auto it = std::find_if(pixels.begin(), pixels.end(),
                           [&](const Pixel& px) { return pixel_contains(px, r.position); });
    if (it == pixels.end())
      throw std::invalid_argument("robot " + std::to_string(r.id) + " lies in no pixel");
    it->members.push_back(r.id);
  }
}

void choose_representatives(std::vector<Pixel>& pixels, const RobotSet& s) {
  for (Pixel& px : pixels) {
    px.representative = -1;
    if (px.members.empty()) continue;
    const bool has_source =
        std::find(px.members.begin(), px.members.end(), s.source_id) != px.members.end();
    px.representative = has_source ? s.source_id : *std::min_element(px.members.begin(), px.members.end());
  }
}

namespace {

constexpr double kPruneEps = 1e-12;

// Enumerates ordered trees in breadth-first canonical form: the node at the
// queue head picks an ordered list of children from the unassigned
// representatives, then the head advances. Each ordered tree arises once.
class TreeEnumerator {
 public:
  TreeEnumerator(int root, std::span<const int> reps, const TravelTable& table, const SbatOptions& opts)
      : table_(table), opts_(opts), reps_(reps.begin(), reps.end()), tree_(singleton_tree(root, table.robot_count())) {
    assigned_.assign(table.robot_count(), false);
    depth_.assign(table.robot_count(), 0);
    assigned_[root] = true;
    queue_.push_back(root);
    best_.makespan = kInfinity;
  }

  SbatResult run() {
    expand(0, 0.0);
    SbatResult r;
    r.tree = best_;
    r.trees_evaluated = evaluated_;
    return r;
  }

 private:
  void expand(std::size_t head, double makespan) {
    if (queue_.size() == reps_.size()) {
      ++evaluated_;
      if (makespan < best_.makespan) {
        best_ = tree_;
        best_.makespan = makespan;
        best_.nodes = queue_;
      }
      return;
    }
    if (head == queue_.size()) return;
    const int v = queue_[head];
    pick(head, v, v, tree_.wake_time[v], makespan);
  }

  void pick(std::size_t head, int v, int at, double time, double makespan) {
    expand(head + 1, makespan);
    if (opts_.depth_cap && depth_[v] + 1 > *opts_.depth_cap) return;
    for (int c : reps_) {
      if (assigned_[c]) continue;
      const double wake = time + table_.cost(at, c);
      const double next_makespan = std::max(makespan, wake);
      if (opts_.prune && next_makespan >= best_.makespan - kPruneEps) continue;
      assigned_[c] = true;
      depth_[c] = depth_[v] + 1;
      tree_.parent[c] = v;
      tree_.children[v].push_back(c);
      tree_.wake_time[c] = wake;
      queue_.push_back(c);

      pick(head, v, table_.endpoint(at, c), wake, next_makespan);

      queue_.pop_back();
      tree_.wake_time[c] = kInfinity;
      tree_.children[v].pop_back();
      tree_.parent[c] = -1;
      assigned_[c] = false;
    }
  }

  const TravelTable& table_;
  const SbatOptions& opts_;
  std::vector<int> reps_;
  AwakeningTree tree_;
  AwakeningTree best_;
  std::vector<bool> assigned_;
  std::vector<int> depth_;
  std::vector<int> queue_;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

SbatResult sbat_search(int root, std::span<const int> reps, const TravelTable& table, const SbatOptions& opts) {
  if (static_cast<int>(reps.size()) > opts.max_size) throw SizeCapExceeded(static_cast<int>(reps.size()), opts.max_size);
  if (std::find(reps.begin(), reps.end(), root) == reps.end())
    throw std::invalid_argument("the root must be one of the representatives");
  SbatResult r = TreeEnumerator(root, reps, table, opts).run();
  if (r.tree.makespan == kInfinity) throw std::invalid_argument("no awakening tree satisfies the depth cap");
  evaluate_tree(r.tree, table);
  return r;
}

namespace {

struct PixelRun {
  std::vector<int> members;
  AwakeningSchedule local;
};

PixelRun run_pixel_cfa(const Pixel& px, const TravelTable& table, const RobotSet& s,
                       const PixelCfaOptions& opts) {
  PixelRun run;
  run.members = px.members;
  RobotSet sub;
  for (std::size_t i = 0; i < px.members.size(); ++i) {
    sub.robots.push_back({static_cast<int>(i), s.position(px.members[i]), s.robots[px.members[i]].origin});
    if (px.members[i] == px.representative) sub.source_id = static_cast<int>(i);
  }
  const Metric metric = table.metric();
  if (px.convex) {
    const std::vector<Point> pts = sub.positions();
    const SpannerGraph sp = theta_graph(pts, opts.cones);
    run.local = cfa_schedule(sub, sp, metric, straight_routes(sub, metric));
    return run;
  }
  // Members of a non-convex pixel may not see each other; use geodesic weights
  // and geodesic routes.
  WeightedGraph g;
  for (const Robot& r : sub.robots) g.add_vertex(r.position);
  for (int a = 0; a < sub.size(); ++a)
    for (int b = a + 1; b < sub.size(); ++b) g.add_edge(a, b, table.geodesic(px.members[a], px.members[b]));
  const SpannerGraph sp = greedy_spanner(g, opts.stretch);
  const std::vector<int>& members = run.members;
  run.local = cfa_schedule(sub, sp, metric, [&table, &members](int a, int b) {
    return table.route(members[a], members[b]);
  });
  return run;
}

}  // namespace

AwakeningSchedule compose_ptas(const AwakeningTree& tree_in, const std::vector<Pixel>& pixels,
                               const RobotSet& s, const TravelTable& table, const PixelCfaOptions& opts) {
  const int n = s.size();
  std::vector<PixelRun> runs;
  std::vector<double> busy(n, 0.0);
  for (const Pixel& px : pixels) {
    if (px.members.size() < 2) continue;
    runs.push_back(run_pixel_cfa(px, table, s, opts));
    const PixelRun& run = runs.back();
    const int local_rep = run.local.root;
    if (!run.local.itineraries[local_rep].empty())
      busy[px.representative] = run.local.itineraries[local_rep].back().t;
  }

  AwakeningTree tree = tree_in;
  evaluate_tree(tree, table, busy);
  const auto tree_moves = tree_itineraries(tree, table, busy);

  AwakeningSchedule out;
  out.metric = table.metric();
  out.model = MovementModel::Composite;
  out.root = tree.root;
  out.parent.assign(n, -1);
  out.wake_time.assign(n, kInfinity);
  out.itineraries.assign(n, {});

  for (const Pixel& px : pixels) {
    if (px.members.empty()) continue;
    const int rep = px.representative;
    if (tree.wake_time[rep] == kInfinity)
      throw std::invalid_argument("representative " + std::to_string(rep) + " is missing from the tree");
    out.wake_time[rep] = tree.wake_time[rep];
    out.parent[rep] = tree.parent[rep];
  }
  for (const PixelRun& run : runs) {
    const int rep = run.members[run.local.root];
    const double offset = out.wake_time[rep];
    for (int i = 0; i < run.local.size(); ++i) {
      const int g = run.members[i];
      if (g != rep) {
        out.wake_time[g] = offset + run.local.wake_time[i];
        out.parent[g] = run.members[run.local.parent[i]];
      }
      for (const TimedPoint& tp : run.local.itineraries[i]) out.itineraries[g].push_back({offset + tp.t, tp.p});
    }
  }
  for (int v = 0; v < n; ++v) {
    auto& it = out.itineraries[v];
    for (const TimedPoint& tp : tree_moves[v]) {
      if (!it.empty() && nearly_equal(it.back().p, tp.p) && std::abs(it.back().t - tp.t) <= 1e-12) continue;
      it.push_back(tp);
    }
  }
  for (int v = 0; v < n; ++v)
    if (out.wake_time[v] == kInfinity) throw std::invalid_argument("robot " + std::to_string(v) + " lies in no pixel");

  rebuild_children(out);
  finalize_makespans(out, s);
  out.degenerate = out.metric == Metric::Visibility && n > 1 && out.makespan_all == 0.0;
  return out;
}

PtasSolution solve_ptas(const PolygonDomain& d, const RobotSet& s, Metric metric, int m,
                        const SbatOptions& sbat, const PixelCfaOptions& cfa) {
  PtasSolution sol;
  sol.pixels = pixelize(d, m);
  assign_members(sol.pixels, s);
  choose_representatives(sol.pixels, s);
  const TravelTable table(s, d, metric);
  std::vector<int> reps;
  for (const Pixel& px : sol.pixels)
    if (px.representative >= 0) reps.push_back(px.representative);
  std::sort(reps.begin(), reps.end());
  sol.sbat = sbat_search(s.source_id, reps, table, sbat);
  sol.schedule = compose_ptas(sol.sbat.tree, sol.pixels, s, table, cfa);
  return sol;
}

}  // namespace freezetag
