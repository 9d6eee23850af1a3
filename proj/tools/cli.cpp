#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>

#include "freezetag/cfa.hpp"
#include "freezetag/generator.hpp"
#include "freezetag/instance_io.hpp"
#include "freezetag/oracle.hpp"
#include "freezetag/ptas.hpp"
#include "freezetag/svg.hpp"

namespace freezetag::cli {

namespace {

struct SolveArgs {
  std::string instance;
  std::string algo = "cfa";
  std::string metric;
  int grid = 4;
  double stretch = 6.0;
  int cones = 9;
  std::optional<int> depth_cap;
  std::string out;
};

Metric choose_metric(const std::string& flag, const Instance& inst) {
  if (!flag.empty()) return parse_metric(flag);
  return inst.metric.value_or(Metric::Geodesic);
}

void print_kv(std::ostream& out, const std::string& key, double v) {
  out << key << ": " << std::setprecision(12) << v << '\n';
}

void report_violations(const std::vector<ScheduleViolation>& vs, std::ostream& err) {
  for (const auto& v : vs) err << "violation [" << v.kind << "] " << v.message << '\n';
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(a.instance);
  const Metric metric = choose_metric(a.metric, inst);
  ScheduleFile file;
  file.algorithm = a.algo;
  RobotSet robots = inst.robots;
  bool bounds_ok = true;

  out << "algorithm: " << a.algo << "\nmetric: " << to_string(metric) << '\n';
  if (a.algo == "cfa") {
    CfaSolution sol = solve_cfa(inst.domain, inst.robots, metric, a.stretch);
    robots = sol.robots;
    for (const Robot& r : robots.robots)
      if (r.origin == Origin::Steiner) file.steiner.push_back(r.position);
    file.schedule = sol.schedule;
    out << "robots: " << inst.robots.size() << "\nsteiner: " << file.steiner.size() << '\n';
    print_kv(out, "spanner_t_target", sol.spanner.t_target);
    print_kv(out, "spanner_t_measured", sol.spanner.t_measured);
    out << "spanner_k_measured: " << sol.spanner.k_measured << '\n';
    if (sol.spanner.t_measured > sol.spanner.t_target + 1e-9) {
      err << "error: spanner stretch exceeds its target\n";
      bounds_ok = false;
    }
    if (metric == Metric::Geodesic) {
      const CfaBoundReport b = check_cfa_bounds(sol.schedule, robots, sol.metric, sol.spanner.t_target,
                                                sol.spanner.k_measured);
      print_kv(out, "bound_factor", b.factor);
      print_kv(out, "worst_ratio", b.worst_ratio);
      print_kv(out, "makespan_bound", b.factor * b.diameter);
      if (!b.per_robot_ok || !b.makespan_ok || (b.constant_applies && !b.constant_ok)) {
        err << "error: awakening bound violated\n";
        bounds_ok = false;
      }
    }
  } else if (a.algo == "ptas") {
    SbatOptions opts;
    opts.depth_cap = a.depth_cap;
    const PtasSolution sol = solve_ptas(inst.domain, inst.robots, metric, a.grid, opts, {a.cones, a.stretch});
    file.schedule = sol.schedule;
    std::size_t reps = 0;
    double max_diam = 0.0;
    for (const Pixel& px : sol.pixels) {
      if (px.representative >= 0) ++reps;
      max_diam = std::max(max_diam, px.diameter);
    }
    out << "robots: " << inst.robots.size() << "\npixels: " << sol.pixels.size() << "\nrepresentatives: " << reps
        << "\ntree_depth: " << sol.sbat.tree.depth << '\n';
    print_kv(out, "max_pixel_diameter", max_diam);
    if (max_diam > std::sqrt(2.0) / a.grid + 1e-9) {
      err << "error: pixel diameter exceeds sqrt(2)/m\n";
      bounds_ok = false;
    }
  } else if (a.algo == "exact") {
    const OracleResult r = optimal_makespan(inst.robots, metric, inst.domain);
    const TravelTable table(inst.robots, inst.domain, metric);
    file.schedule = tree_schedule(r.witness, inst.robots, table);
    out << "robots: " << inst.robots.size() << "\nnodes_explored: " << r.nodes_explored << '\n';
  } else {
    err << "error: unknown algorithm '" << a.algo << "' (expected cfa, ptas or exact)\n";
    return kUsage;
  }

  const AwakeningSchedule& s = file.schedule;
  print_kv(out, "makespan_all", s.makespan_all);
  print_kv(out, "makespan_original", s.makespan_original);
  out << "degenerate: " << (s.degenerate ? "true" : "false") << '\n';
  if (s.degenerate)
    err << "warning: visibility wakes along spanner edges cost nothing; the makespan collapses to 0\n";

  const auto violations = validate_schedule(s, robots, inst.domain);
  if (!violations.empty()) {
    report_violations(violations, err);
    bounds_ok = false;
  }
  if (!a.out.empty()) save_schedule(a.out, file);
  return bounds_ok ? kOk : kBoundViolation;
}

int run_verify(const std::string& instance_path, const std::string& schedule_path, std::ostream& out,
               std::ostream& err) {
  const Instance inst = load_instance(instance_path);
  const ScheduleFile file = load_schedule(schedule_path);
  RobotSet robots = inst.robots;
  const std::vector<Point> corners = inst.domain.corners();
  for (const Point& p : file.steiner) {
    const bool at_corner =
        std::any_of(corners.begin(), corners.end(), [&](Point c) { return nearly_equal(c, p, 1e-9); });
    if (!at_corner) {
      err << "violation [steiner] Steiner robot is not at a reflex or hole vertex\n";
      return kValidation;
    }
    robots.robots.push_back({robots.size(), p, Origin::Steiner});
  }
  if (file.steiner.size() > corners.size()) {
    err << "violation [steiner] more Steiner robots than reflex and hole vertices\n";
    return kValidation;
  }
  const auto violations = validate_schedule(file.schedule, robots, inst.domain);
  if (!violations.empty()) {
    report_violations(violations, err);
    return kValidation;
  }
  out << "ok: " << robots.size() << " robots, makespan_all " << std::setprecision(12) << file.schedule.makespan_all
      << '\n';
  return kOk;
}

int run_stats(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(a.instance);
  const Metric metric = choose_metric(a.metric, inst);
  const CfaSolution cfa = solve_cfa(inst.domain, inst.robots, metric, a.stretch);
  const int steiner = cfa.robots.size() - inst.robots.size();
  const double diam = cfa.metric.diameter();
  const double factor = cfa.spanner.t_target * (2.0 * cfa.spanner.k_measured - 1.0);

  out << "metric: " << to_string(metric) << '\n'
      << "robots: " << inst.robots.size() << '\n'
      << "reflex: " << inst.domain.reflex_vertices().size() << '\n'
      << "hole_vertices: " << inst.domain.hole_vertices().size() << '\n'
      << "steiner: " << steiner << '\n';
  print_kv(out, "diameter", diam);
  print_kv(out, "spanner_t_target", cfa.spanner.t_target);
  print_kv(out, "spanner_t_measured", cfa.spanner.t_measured);
  out << "spanner_k_measured: " << cfa.spanner.k_measured << '\n';
  print_kv(out, "cfa_makespan_all", cfa.schedule.makespan_all);
  print_kv(out, "cfa_makespan_original", cfa.schedule.makespan_original);
  print_kv(out, "bound_factor", factor);
  print_kv(out, "makespan_bound", factor * diam);
  const bool consistent = cfa.schedule.makespan_all <= factor * diam + 1e-9;
  out << "bounds_consistent: " << (consistent ? "true" : "false") << '\n';
  out << "degenerate: " << (cfa.schedule.degenerate ? "true" : "false") << '\n';

  try {
    const PtasSolution ptas = solve_ptas(inst.domain, inst.robots, metric, a.grid, {}, {a.cones, a.stretch});
    print_kv(out, "ptas_makespan", ptas.schedule.makespan_all);
  } catch (const SizeCapExceeded&) {
    out << "ptas_makespan: skipped (too many representatives at m=" << a.grid << ")\n";
  }
  if (cfa.robots.size() <= kOracleMaxRobots) {
    const OracleResult opt = optimal_makespan(cfa.robots, metric, inst.domain);
    print_kv(out, "exact_optimum", opt.makespan);
    if (opt.makespan > 0.0) print_kv(out, "cfa_ratio", cfa.schedule.makespan_all / opt.makespan);
  } else {
    out << "exact_optimum: skipped (" << cfa.robots.size() << " robots with Steiner, cap " << kOracleMaxRobots
        << ")\n";
  }
  if (!consistent) {
    err << "error: makespan exceeds t(2k-1)*diam\n";
    return kBoundViolation;
  }
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freeze-tag schedules inside polygonal domains", "ftag"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an awakening schedule");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON file")->required();
  solve_cmd->add_option("--algo", solve.algo, "cfa, ptas or exact")->check(CLI::IsMember({"cfa", "ptas", "exact"}));
  solve_cmd->add_option("--metric", solve.metric, "geodesic or visibility")
      ->check(CLI::IsMember({"geodesic", "visibility"}));
  solve_cmd->add_option("--m", solve.grid, "PTAS grid resolution")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--t", solve.stretch, "Spanner stretch target");
  solve_cmd->add_option("--k", solve.cones, "Theta-graph cone count")->check(CLI::Range(2, 64));
  solve_cmd->add_option("--depth-cap", solve.depth_cap, "Maximum awakening-tree depth for the PTAS search");
  solve_cmd->add_option("--out", solve.out, "Schedule output file");

  std::string verify_instance, verify_schedule;
  auto* verify_cmd = app.add_subcommand("verify", "Re-validate a schedule file against an instance");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("schedule", verify_schedule)->required();

  std::uint64_t seed = 0;
  int n_robots = 8, n_holes = 0;
  std::string profile = "lshape", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--n", n_robots, "Robot count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--holes", n_holes, "Hole count")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--profile", profile)->check(CLI::IsMember({"convex", "lshape", "random-orthogonal"}));
  gen_cmd->add_option("--out", gen_out, "Instance output file (stdout when omitted)");

  std::string render_instance, render_schedule, render_out;
  bool render_spanner = false;
  std::vector<int> render_path;
  double render_t = 6.0;
  auto* render_cmd = app.add_subcommand("render", "Draw an instance as SVG");
  render_cmd->add_option("instance", render_instance)->required();
  render_cmd->add_option("--schedule", render_schedule, "Schedule file to overlay");
  render_cmd->add_flag("--spanner", render_spanner, "Overlay the greedy spanner over robots and corners");
  render_cmd->add_option("--t", render_t, "Spanner stretch target");
  render_cmd->add_option("--path", render_path, "Draw the geodesic between two robot ids")->expected(2);
  render_cmd->add_option("--out", render_out, "SVG output file (stdout when omitted)");

  SolveArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Report domain, spanner and makespan figures");
  stats_cmd->add_option("instance", stats.instance)->required();
  stats_cmd->add_option("--metric", stats.metric)->check(CLI::IsMember({"geodesic", "visibility"}));
  stats_cmd->add_option("--m", stats.grid)->check(CLI::PositiveNumber);
  stats_cmd->add_option("--t", stats.stretch);
  stats_cmd->add_option("--k", stats.cones)->check(CLI::Range(2, 64));

  std::vector<std::string> argv_store{"ftag"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve, out, err);
    if (*verify_cmd) return run_verify(verify_instance, verify_schedule, out, err);
    if (*gen_cmd) {
      const Instance inst = generate_instance(seed, n_robots, n_holes, parse_profile(profile));
      if (gen_out.empty()) out << dump_instance(inst);
      else save_instance(gen_out, inst);
      return kOk;
    }
    if (*render_cmd) {
      const Instance inst = load_instance(render_instance);
      RobotSet robots = inst.robots;
      SvgOverlay overlay;
      std::optional<ScheduleFile> file;
      std::optional<CfaSolution> cfa;
      if (!render_schedule.empty()) {
        file = load_schedule(render_schedule);
        for (const Point& p : file->steiner) robots.robots.push_back({robots.size(), p, Origin::Steiner});
        overlay.schedule = &file->schedule;
      }
      if (render_spanner) {
        cfa.emplace(solve_cfa(inst.domain, inst.robots, Metric::Geodesic, render_t));
        if (!file) robots = cfa->robots;
        overlay.spanner = &cfa->spanner;
      }
      if (render_path.size() == 2) {
        for (int id : render_path)
          if (id < 0 || id >= inst.robots.size()) {
            err << "error: --path names an unknown robot\n";
            return kUsage;
          }
        overlay.paths.push_back(
            geodesic_path(inst.robots.position(render_path[0]), inst.robots.position(render_path[1]), inst.domain));
      }
      const std::string svg = render_svg(inst.domain, robots, overlay);
      if (render_out.empty()) out << svg;
      else write_text_file(render_out, svg);
      return kOk;
    }
    if (*stats_cmd) return run_stats(stats, out, err);
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}

}  // namespace freezetag::cli
