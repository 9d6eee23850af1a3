// Acceptance suite: one PASS/FAIL line per criterion; exit code 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "freezetag/cfa.hpp"
#include "freezetag/instance_io.hpp"
#include "freezetag/oracle.hpp"
#include "freezetag/ptas.hpp"
#include "support/corpus.hpp"

using namespace freezetag;

namespace {

constexpr double kTol = 1e-9;
constexpr double kStretch = 6.0;
constexpr int kCorpusSize = 50;
constexpr int kRatioInstances = 30;
constexpr int kMetricPairs = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
};

// Floyd-Warshall over every vertex of a graph.
std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0.0;
    for (const GraphEdge& e : g.neighbors(u)) d[u][e.to] = std::min(d[u][e.to], e.weight);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Robot hosting a given corner point (every corner hosts one after Steiner placement).
int robot_at(const RobotSet& robots, Point p) {
  for (const Robot& r : robots.robots)
    if (nearly_equal(r.position, p)) return r.id;
  return -1;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct CorpusEntry {
  Instance instance;
  CfaSolution cfa;
  std::vector<std::vector<double>> geodesic_fw;  // over robots then corners
  std::vector<std::vector<double>> spanner_fw;   // over robots
};

Outcome spanner_stretch(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  double worst = 0.0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const CorpusEntry& e = corpus[c];
    const SpannerReport rep = verify_spanner(e.cfa.visibility, e.cfa.spanner);
    if (!rep.ok) o.fail("instance " + std::to_string(c) + ": verify_spanner rejects the spanner");
    const int n = e.instance.robots.size();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double geo = e.geodesic_fw[a][b];
        const double vt = e.spanner_fw[a][b];
        if (std::abs(geo - e.cfa.metric.distance(a, b)) > kTol)
          o.fail("instance " + std::to_string(c) + ": geodesic distance disagrees with Floyd-Warshall");
        if (vt > kStretch * geo + kTol) o.fail("instance " + std::to_string(c) + ": spanner path too long");
        if (geo > 0) worst = std::max(worst, vt / geo);
      }
  }
  o.detail = std::to_string(corpus.size()) + " instances, worst robot-pair stretch " + fmt("%.4f", worst);
  return o;
}

Outcome visibility_prefix(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int pairs = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const CorpusEntry& e = corpus[c];
    const GeodesicMetric& m = e.cfa.metric;
    const int n = e.instance.robots.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || is_visible(m.points()[a], m.points()[b], e.instance.domain)) continue;
        ++pairs;
        const std::vector<int> ids = m.path_ids(a, b);
        const Point last = m.graph().vertex(ids[ids.size() - 2]).point;
        const int host = robot_at(e.cfa.robots, last);
        if (host < 0) {
          o.fail("instance " + std::to_string(c) + ": last waypoint is not occupied by a robot");
          continue;
        }
        const double prefix = polyline_length(m.path(a, b).waypoints) - distance(last, m.points()[b]);
        if (std::abs(prefix - m.visibility_distance(a, b)) > kTol)
          o.fail("instance " + std::to_string(c) + ": visibility prefix length mismatch");
        if (e.spanner_fw[a][host] > kStretch * prefix + kTol)
          o.fail("instance " + std::to_string(c) + ": spanner distance to last waypoint too long");
      }
  }
  o.detail = std::to_string(pairs) + " ordered non-visible pairs";
  return o;
}

Outcome per_robot_bound(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int small_degree = 0;
  double worst = 0.0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const CorpusEntry& e = corpus[c];
    const AwakeningSchedule& s = e.cfa.schedule;
    const double factor = e.cfa.spanner.t_target * (2.0 * e.cfa.spanner.k_measured - 1.0);
    const bool constant = e.cfa.spanner.k_measured <= 7;
    if (constant) ++small_degree;
    const int src = e.instance.robots.source_id;
    for (int i = 0; i < e.instance.robots.size(); ++i) {
      const double geo = e.geodesic_fw[src][i];
      if (s.wake_time[i] > factor * geo + kTol)
        o.fail("instance " + std::to_string(c) + ": robot " + std::to_string(i) + " wakes too late");
      if (constant && s.wake_time[i] > 78.0 * geo + kTol)
        o.fail("instance " + std::to_string(c) + ": robot " + std::to_string(i) + " exceeds 78x geodesic");
      if (geo > 0) worst = std::max(worst, s.wake_time[i] / geo);
    }
    const auto violations = validate_schedule(s, e.cfa.robots, e.instance.domain);
    if (!violations.empty()) o.fail("instance " + std::to_string(c) + ": schedule invalid: " + violations[0].message);
  }
  o.detail = "max degree <= 7 on " + std::to_string(small_degree) + "/" + std::to_string(corpus.size()) +
             " instances (" + fmt("%.0f%%", 100.0 * small_degree / corpus.size()) + "), worst wake/geodesic " +
             fmt("%.3f", worst);
  return o;
}

Outcome makespan_bound(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  double worst = 0.0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const CorpusEntry& e = corpus[c];
    const double factor = e.cfa.spanner.t_target * (2.0 * e.cfa.spanner.k_measured - 1.0);
    const int n = e.cfa.robots.size();
    double diam = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) diam = std::max(diam, e.geodesic_fw[a][b]);
    if (e.cfa.schedule.makespan_all > factor * diam + kTol)
      o.fail("instance " + std::to_string(c) + ": makespan exceeds t(2k-1) diam");
    if (diam > 0) worst = std::max(worst, e.cfa.schedule.makespan_all / (factor * diam));
  }
  o.detail = "worst makespan / bound " + fmt("%.4f", worst);
  return o;
}

std::vector<Instance> small_corpus(int count) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 5000; static_cast<int>(out.size()) < count; ++seed) {
    const Profile profile = seed % 2 ? Profile::LShape : Profile::Convex;
    const int n = 2 + static_cast<int>(seed % 5);
    Instance inst = generate_instance(seed, n, 0, profile);
    if (place_steiner(inst.domain, inst.robots).size() <= 7) out.push_back(std::move(inst));
  }
  return out;
}

Outcome ratio_certification() {
  Outcome o;
  double worst = 0.0;
  std::uint64_t nodes = 0;
  const auto corpus = small_corpus(kRatioInstances);
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const Instance& inst = corpus[c];
    const CfaSolution cfa = solve_cfa(inst.domain, inst.robots, Metric::Geodesic, kStretch);
    const OracleResult opt = optimal_makespan(cfa.robots, Metric::Geodesic, inst.domain);
    nodes += opt.nodes_explored;
    const double factor = cfa.spanner.t_target * (2.0 * cfa.spanner.k_measured - 1.0);
    const auto fw = floyd_warshall(cfa.metric.graph());
    double lower = 0.0;
    for (int i = 0; i < cfa.robots.size(); ++i) lower = std::max(lower, fw[cfa.robots.source_id][i]);
    if (opt.makespan > cfa.schedule.makespan_all + kTol)
      o.fail("instance " + std::to_string(c) + ": optimum exceeds the strategy's makespan");
    if (lower > opt.makespan + kTol) o.fail("instance " + std::to_string(c) + ": optimum below the distance bound");
    if (opt.makespan > 0) {
      const double ratio = cfa.schedule.makespan_all / opt.makespan;
      worst = std::max(worst, ratio);
      if (ratio > factor + kTol) o.fail("instance " + std::to_string(c) + ": ratio exceeds t(2k-1)");
    }
    const TravelTable table(cfa.robots, inst.domain, Metric::Geodesic);
    const auto witness = validate_schedule(tree_schedule(opt.witness, cfa.robots, table), cfa.robots, inst.domain);
    if (!witness.empty()) o.fail("instance " + std::to_string(c) + ": optimal witness invalid: " + witness[0].message);
  }
  o.detail = std::to_string(corpus.size()) + " instances, worst makespan/optimum " + fmt("%.3f", worst) +
             ", " + std::to_string(nodes) + " search nodes";
  return o;
}

// Smallest grid resolution giving every robot its own pixel.
int separating_resolution(const Instance& inst) {
  for (int m = 2;; ++m) {
    auto pixels = pixelize(inst.domain, m);
    assign_members(pixels, inst.robots);
    bool separated = true;
    for (const Pixel& px : pixels) separated = separated && px.members.size() <= 1;
    if (separated) return m;
  }
}

Outcome ptas_consistency() {
  Outcome o;
  int fine = 0, coarse = 0, max_m = 0;
  for (std::uint64_t seed = 7000; seed < 7012; ++seed) {
    const auto profile = static_cast<Profile>(seed % 3);
    const int holes = profile == Profile::Convex ? 0 : static_cast<int>(seed % 2);
    const Instance inst = generate_instance(seed, 2 + static_cast<int>(seed % 5), holes, profile);
    const std::string tag = "seed " + std::to_string(seed);

    const int m = separating_resolution(inst);
    max_m = std::max(max_m, m);
    const PtasSolution sol = solve_ptas(inst.domain, inst.robots, Metric::Geodesic, m);
    const OracleResult opt = optimal_makespan(inst.robots, Metric::Geodesic, inst.domain);
    if (std::abs(sol.schedule.makespan_all - opt.makespan) > kTol)
      o.fail(tag + ": fine-grid makespan " + fmt("%.12g", sol.schedule.makespan_all) + " differs from optimum " +
             fmt("%.12g", opt.makespan));
    ++fine;

    for (int cm : {2, 3}) {
      const PtasSolution cs = solve_ptas(inst.domain, inst.robots, Metric::Geodesic, cm);
      const auto violations = validate_schedule(cs.schedule, inst.robots, inst.domain);
      if (!violations.empty()) o.fail(tag + ": coarse schedule invalid: " + violations[0].message);
      for (const Pixel& px : cs.pixels)
        if (px.diameter > std::sqrt(2.0) / cm + kTol) o.fail(tag + ": pixel diameter above sqrt(2)/m");
      ++coarse;
    }
  }
  o.detail = std::to_string(fine) + " fine-grid runs (m up to " + std::to_string(max_m) + "), " +
             std::to_string(coarse) + " coarse runs";
  return o;
}

Outcome metric_axioms() {
  Outcome o;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int convex_pairs = 0, triples = 0, paths = 0;

  const auto random_points = [&](const PolygonDomain& d, int count) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < count) {
      const Point p{unit(rng), unit(rng)};
      if (point_in_domain(p, d)) pts.push_back(p);
    }
    return pts;
  };

  for (std::uint64_t seed = 0; convex_pairs < kMetricPairs; ++seed) {
    const Instance inst = generate_instance(9000 + seed, 1, 0, Profile::Convex);
    const auto pts = random_points(inst.domain, 2 * 50);
    for (int i = 0; i < 50; ++i, ++convex_pairs) {
      const GeodesicPath p = geodesic_path(pts[2 * i], pts[2 * i + 1], inst.domain);
      if (std::abs(p.length - distance(pts[2 * i], pts[2 * i + 1])) > kTol)
        o.fail("convex domain geodesic differs from Euclidean distance");
    }
  }

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Profile profile = seed % 2 ? Profile::LShape : Profile::RandomOrthogonal;
    const Instance inst = generate_instance(9100 + seed, 1, 1 + static_cast<int>(seed % 2), profile);
    const GeodesicMetric m(random_points(inst.domain, 20), inst.domain);
    const auto corners = inst.domain.corners();
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j) {
        if (std::abs(m.distance(i, j) - m.distance(j, i)) > kTol) o.fail("geodesic distance not symmetric");
        for (int k = 0; k < m.size(); ++k, ++triples)
          if (m.distance(i, k) > m.distance(i, j) + m.distance(j, k) + kTol) o.fail("triangle inequality fails");
        const GeodesicPath p = m.path(i, j);
        ++paths;
        for (std::size_t w = 1; w + 1 < p.waypoints.size(); ++w) {
          const bool corner = std::find(corners.begin(), corners.end(), p.waypoints[w]) != corners.end();
          if (!corner) o.fail("geodesic bends at a point that is not a reflex or hole vertex");
        }
        const bool visible = is_visible(m.points()[i], m.points()[j], inst.domain);
        if ((m.visibility_distance(i, j) == 0.0) != visible) o.fail("visibility prefix is 0 exactly when visible");
      }
  }
  o.detail = std::to_string(convex_pairs) + " convex pairs, " + std::to_string(triples) + " triples, " +
             std::to_string(paths) + " paths";
  return o;
}

Outcome steiner_bound(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int total = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const CorpusEntry& e = corpus[c];
    const int steiner = e.cfa.robots.size() - e.instance.robots.size();
    total += steiner;
    const int bound = static_cast<int>(e.instance.domain.reflex_vertices().size() +
                                       e.instance.domain.hole_vertices().size());
    if (steiner > bound) o.fail("instance " + std::to_string(c) + ": too many Steiner robots");
  }
  o.detail = std::to_string(total) + " Steiner robots over the corpus";
  return o;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

Outcome determinism(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "freezetag_acceptance";
  fs::create_directories(dir);
  int files = 0;

  for (const std::string profile : {"convex", "lshape", "random-orthogonal"}) {
    const std::string holes = profile == "convex" ? "0" : "1";
    const std::string a = (dir / ("a_" + profile + ".json")).string();
    const std::string b = (dir / ("b_" + profile + ".json")).string();
    run_cli({"gen", "--seed", "77", "--n", "6", "--holes", holes, "--profile", profile, "--out", a});
    run_cli({"gen", "--seed", "77", "--n", "6", "--holes", holes, "--profile", profile, "--out", b});
    if (read_text_file(a) != read_text_file(b)) o.fail(profile + ": generated instances differ");
    for (const std::string algo : {"cfa", "ptas", "exact"}) {
      const std::string s1 = (dir / ("s1_" + algo + ".json")).string();
      const std::string s2 = (dir / ("s2_" + algo + ".json")).string();
      const std::vector<std::string> flags{"solve", a, "--algo", algo, "--m", "3"};
      auto f1 = flags, f2 = flags;
      f1.insert(f1.end(), {"--out", s1});
      f2.insert(f2.end(), {"--out", s2});
      if (run_cli(f1) != 0 || run_cli(f2) != 0) o.fail(profile + "/" + algo + ": solve failed");
      const std::string text = read_text_file(s1);
      if (text != read_text_file(s2)) o.fail(profile + "/" + algo + ": schedule files differ");
      if (dump_schedule(parse_schedule(text)) != text) o.fail(profile + "/" + algo + ": schedule round trip");
      if (run_cli({"verify", a, s1}) != 0) o.fail(profile + "/" + algo + ": saved schedule fails verification");
      files += 2;
    }
  }

  for (const CorpusEntry& e : corpus) {
    const std::string text = dump_instance(e.instance);
    const Instance back = parse_instance(text);
    const bool same = back.domain.outer() == e.instance.domain.outer() &&
                      back.domain.holes() == e.instance.domain.holes() &&
                      back.robots.positions() == e.instance.robots.positions() &&
                      back.robots.source_id == e.instance.robots.source_id && back.metric == e.instance.metric;
    if (!same || dump_instance(back) != text) o.fail("instance round trip changed the instance");
  }
  o.detail = std::to_string(files) + " schedule files, " + std::to_string(corpus.size()) + " instance round trips";
  return o;
}

Outcome visibility_degeneracy(const std::vector<CorpusEntry>& corpus) {
  Outcome o;
  int degenerate = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const Instance& inst = corpus[c].instance;
    const CfaSolution sol = solve_cfa(inst.domain, inst.robots, Metric::Visibility, kStretch);
    if (sol.robots.size() < 2) continue;
    if (sol.schedule.makespan_all != 0.0) o.fail("instance " + std::to_string(c) + ": visibility makespan not 0");
    if (!sol.schedule.degenerate) o.fail("instance " + std::to_string(c) + ": degeneracy flag not set");
    ++degenerate;
  }

  const std::string path = (std::filesystem::temp_directory_path() / "freezetag_lshape.json").string();
  RawInstance raw;
  raw.outer = {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
  raw.robots = {{1.8, 0.5}, {0.5, 1.8}};
  const Instance lshape = normalize_instance(raw);
  save_instance(path, lshape);
  std::string out;
  run_cli({"solve", path, "--metric", "visibility"}, &out);
  if (out.find("degenerate: true") == std::string::npos) o.fail("CLI does not print the degeneracy flag");

  if (is_visible(lshape.robots.position(0), lshape.robots.position(1), lshape.domain))
    o.fail("L-shape robots unexpectedly see each other");
  const double opt = optimal_makespan(lshape.robots, Metric::Visibility, lshape.domain).makespan;
  if (!(opt > 0.0)) o.fail("visibility optimum on the L-shape is not positive");
  o.detail = std::to_string(degenerate) + " zero-makespan instances, L-shape visibility optimum " + fmt("%.6f", opt);
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  std::vector<CorpusEntry> corpus;
  for (Instance& inst : testing::mixed_corpus(kCorpusSize)) {
    CfaSolution cfa = solve_cfa(inst.domain, inst.robots, Metric::Geodesic, kStretch);
    auto geo = floyd_warshall(cfa.metric.graph());
    auto vt = floyd_warshall(cfa.spanner.graph);
    corpus.push_back({std::move(inst), std::move(cfa), std::move(geo), std::move(vt)});
  }
  const double setup = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("corpus: %zu instances built in %.2f s\n", corpus.size(), setup);

  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"spanner stretch", 30, [&] { return spanner_stretch(corpus); }},
      {"spanner distance to last geodesic waypoint", 30, [&] { return visibility_prefix(corpus); }},
      {"per-robot wake time bound", 30, [&] { return per_robot_bound(corpus); }},
      {"makespan bound", 30, [&] { return makespan_bound(corpus); }},
      {"ratio certification against exact optimum", 120, [] { return ratio_certification(); }},
      {"PTAS consistency", 120, [] { return ptas_consistency(); }},
      {"geodesic metric axioms", 30, [] { return metric_axioms(); }},
      {"Steiner robot count", 30, [&] { return steiner_bound(corpus); }},
      {"determinism and round trip", 60, [&] { return determinism(corpus); }},
      {"visibility-metric degeneracy", 30, [&] { return visibility_degeneracy(corpus); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > criteria[i].budget_s) o.fail("runtime " + fmt("%.1f s", secs) + " over budget");
    if (!o.ok) ++failed;
    std::printf("[%s] %2zu %s: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs, o.ok ? "" : " -- ", o.failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
