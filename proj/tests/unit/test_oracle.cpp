#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "freezetag/oracle.hpp"
#include "freezetag/ptas.hpp"
#include "shapes.hpp"

using namespace freezetag;
using namespace freezetag::testing;

namespace {

// Exhaustive search over every interleaving of (awake robot, sleeper) moves
// under the continue model, driven directly by the travel table.
double brute_force_optimum(const TravelTable& table, int source) {
  const int n = table.robot_count();
  std::vector<int> pos(n, -1);
  std::vector<double> free(n, 0.0);
  std::vector<bool> awake(n, false);
  pos[source] = source;
  awake[source] = true;
  double best = kInfinity;
  std::function<void(int, double)> go = [&](int remaining, double makespan) {
    if (makespan >= best) return;
    if (remaining == 0) {
      best = makespan;
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (!awake[a]) continue;
      for (int u = 0; u < n; ++u) {
        if (awake[u]) continue;
        const int old_pos = pos[a];
        const double old_free = free[a];
        const double t = free[a] + table.cost(pos[a], u);
        awake[u] = true;
        pos[u] = u;
        free[u] = t;
        pos[a] = table.endpoint(old_pos, u);
        free[a] = t;
        go(remaining - 1, std::max(makespan, t));
        pos[a] = old_pos;
        free[a] = old_free;
        awake[u] = false;
      }
    }
  };
  go(n - 1, 0.0);
  return best;
}

std::vector<Point> random_points(std::mt19937_64& rng, const PolygonDomain& d, int n) {
  const auto box = d.bounding_box();
  std::uniform_real_distribution<double> ux(box.min_x, box.max_x), uy(box.min_y, box.max_y);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{ux(rng), uy(rng)};
    if (point_in_domain(p, d)) pts.push_back(p);
  }
  return pts;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("travel table costs") {
  const PolygonDomain l(lshape());
  const RobotSet s = RobotSet::from_points({{1.8, 0.5}, {0.5, 1.8}, {1.5, 0.2}});
  SUBCASE("geodesic moves to the target") {
    const TravelTable t(s, l, Metric::Geodesic);
    CHECK(t.node_count() == 4);
    CHECK(t.cost(0, 1) == doctest::Approx(2.0 * std::sqrt(0.89)));
    CHECK(t.endpoint(0, 1) == 1);
    CHECK(t.route(0, 1).size() == 3);
  }
  SUBCASE("visibility stops at the last corner") {
    const TravelTable t(s, l, Metric::Visibility);
    CHECK(t.cost(0, 1) == doctest::Approx(std::sqrt(0.89)));
    CHECK(t.endpoint(0, 1) == 3);
    CHECK(t.node_point(3) == Point{1, 1});
    CHECK(t.cost(0, 2) == 0.0);
    CHECK(t.endpoint(0, 2) == 0);
    CHECK(t.cost(3, 1) == 0.0);
  }
}

TEST_CASE("oracle small cases") {
  const PolygonDomain sq(unit_square());
  CHECK(optimal_makespan(RobotSet::from_points({{0.5, 0.5}}), Metric::Geodesic, sq).makespan == 0.0);
  const OracleResult two = optimal_makespan(RobotSet::from_points({{0.1, 0.1}, {0.4, 0.5}}), Metric::Geodesic, sq);
  CHECK(two.makespan == doctest::Approx(0.5));
  CHECK(two.witness.parent[1] == 0);

  std::vector<Point> nine;
  for (int i = 0; i < 9; ++i) nine.push_back({0.1 * i + 0.05, 0.5});
  CHECK_THROWS_AS(optimal_makespan(RobotSet::from_points(nine), Metric::Geodesic, sq), SizeCapExceeded);
}

TEST_CASE("oracle matches exhaustive interleaving search") {
  std::mt19937_64 rng(21);
  const PolygonDomain d(lshape(), {square_hole(0.3, 0.3, 0.6, 0.6)});
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 4;
    const RobotSet s = RobotSet::from_points(random_points(rng, d, n), trial % n);
    for (Metric metric : {Metric::Geodesic, Metric::Visibility}) {
      const TravelTable table(s, d, metric);
      const OracleResult r = optimal_makespan(s, table);
      CHECK(r.makespan == doctest::Approx(brute_force_optimum(table, s.source_id)).epsilon(1e-12));
      CHECK(r.witness.makespan == doctest::Approx(r.makespan).epsilon(1e-12));
      const AwakeningSchedule sch = tree_schedule(r.witness, s, table);
      CHECK(validate_schedule(sch, s, d).empty());
      CHECK(sch.makespan_all == doctest::Approx(r.makespan).epsilon(1e-12));
      if (metric == Metric::Geodesic) {
        double far = 0.0;
        for (int i = 0; i < n; ++i) far = std::max(far, table.geodesic(s.source_id, i));
        CHECK(far <= r.makespan + 1e-12);
      }
    }
  }
}

TEST_CASE("tree search enumerates every ordered tree once") {
  const PolygonDomain sq(unit_square());
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 5; ++n) {
    const RobotSet s = RobotSet::from_points(random_points(rng, sq, n));
    const TravelTable table(s, sq, Metric::Geodesic);
    std::vector<int> reps(n);
    for (int i = 0; i < n; ++i) reps[i] = i;
    SbatOptions opts;
    opts.prune = false;
    const SbatResult all = sbat_search(0, reps, table, opts);
    CHECK(all.trees_evaluated == factorial(2 * n - 2) / factorial(n));
    const SbatResult pruned = sbat_search(0, reps, table);
    CHECK(pruned.tree.makespan == doctest::Approx(all.tree.makespan).epsilon(1e-12));
    CHECK(pruned.trees_evaluated <= all.trees_evaluated);
    CHECK(pruned.tree.makespan == doctest::Approx(optimal_makespan(s, table).makespan).epsilon(1e-12));
  }
}

TEST_CASE("tree search options") {
  const PolygonDomain sq(unit_square());
  const RobotSet s = RobotSet::from_points({{0.1, 0.1}, {0.9, 0.1}, {0.9, 0.9}, {0.1, 0.9}, {0.5, 0.5}});
  const TravelTable table(s, sq, Metric::Geodesic);
  const std::vector<int> reps{0, 1, 2, 3, 4};

  SUBCASE("one representative") {
    const SbatResult r = sbat_search(2, std::vector<int>{2}, table);
    CHECK(r.tree.makespan == 0.0);
    CHECK(r.tree.root == 2);
  }
  SUBCASE("two representatives") {
    const SbatResult r = sbat_search(0, std::vector<int>{0, 2}, table);
    CHECK(r.tree.makespan == doctest::Approx(std::sqrt(2 * 0.64)));
  }
  SUBCASE("depth cap") {
    SbatOptions opts;
    opts.depth_cap = 1;
    const SbatResult r = sbat_search(0, reps, table, opts);
    CHECK(r.tree.depth <= 1);
    CHECK(r.tree.makespan >= sbat_search(0, reps, table).tree.makespan - 1e-12);
  }
  SUBCASE("size cap") {
    SbatOptions opts;
    opts.max_size = 4;
    CHECK_THROWS_AS(sbat_search(0, reps, table, opts), SizeCapExceeded);
  }
  SUBCASE("root must be a representative") {
    CHECK_THROWS_AS(sbat_search(0, std::vector<int>{1, 2}, table), std::invalid_argument);
  }
}
