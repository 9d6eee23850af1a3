#include "freezetag/instance_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace freezetag {

using nlohmann::ordered_json;

namespace {

std::string summarize(const std::string& kind, const std::vector<InstanceViolation>& vs) {
  std::ostringstream out;
  out << kind << " error";
  for (const auto& v : vs) out << "\n  " << v.code << " at " << v.field << ": " << v.message;
  return out.str();
}

std::string snake(const char* words) {
  std::string s = words;
  std::replace(s.begin(), s.end(), ' ', '_');
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

}  // namespace

InstanceError::InstanceError(std::string kind, std::vector<InstanceViolation> violations)
    : std::runtime_error(summarize(kind, violations)), kind_(std::move(kind)), violations_(std::move(violations)) {}

bool InstanceError::has_code(std::string_view code) const {
  return std::any_of(violations_.begin(), violations_.end(), [&](const auto& v) { return v.code == code; });
}

double round_sig12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

namespace {

Point round_point(Point p) { return {round_sig12(p.x), round_sig12(p.y)}; }

}  // namespace

Instance normalize_instance(const RawInstance& raw) {
  std::vector<InstanceViolation> errs;
  if (raw.outer.size() < 3) {
    errs.push_back({"too_few_vertices", "outer", "outer ring needs at least 3 vertices"});
    throw InstanceError("validation", errs);
  }
  double min_x = raw.outer[0].x, min_y = raw.outer[0].y, max_x = min_x, max_y = min_y;
  for (const Point& p : raw.outer) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    errs.push_back({"degenerate_ring", "outer", "outer ring has no extent"});
    throw InstanceError("validation", errs);
  }
  const double scale = 1.0 / extent;
  auto map = [&](Point p) { return round_point({(p.x - min_x) * scale, (p.y - min_y) * scale}); };

  Ring outer;
  for (const Point& p : raw.outer) outer.push_back(map(p));
  std::vector<Ring> holes;
  for (const Ring& h : raw.holes) {
    holes.emplace_back();
    for (const Point& p : h) holes.back().push_back(map(p));
  }
  for (const auto& v : PolygonDomain::validate(outer, holes))
    errs.push_back({snake(to_string(v.code)), v.where, std::string(to_string(v.code)) + ": " + v.message});
  if (!errs.empty()) throw InstanceError("validation", errs);

  PolygonDomain domain(std::move(outer), std::move(holes));
  std::vector<Point> robots;
  for (std::size_t i = 0; i < raw.robots.size(); ++i) {
    robots.push_back(map(raw.robots[i]));
    if (!point_in_domain(robots.back(), domain))
      errs.push_back({"robot_outside_domain", "robots[" + std::to_string(i) + "]", "robot outside domain"});
  }
  if (robots.empty()) errs.push_back({"no_robots", "robots", "at least one robot is required"});
  if (raw.source < 0 || raw.source >= static_cast<int>(robots.size()))
    errs.push_back({"source_index", "source", "source index does not name a robot"});
  if (!errs.empty()) throw InstanceError("validation", errs);

  return Instance{std::move(domain), RobotSet::from_points(robots, raw.source), raw.metric};
}

namespace {

void parse_point(const ordered_json& j, const std::string& field, std::vector<Point>& out,
                 std::vector<InstanceViolation>& errs) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    errs.push_back({"bad_coordinate", field, "expected [x, y] with numeric entries"});
    return;
  }
  out.push_back({j[0].get<double>(), j[1].get<double>()});
}

void parse_ring(const ordered_json& j, const std::string& field, Ring& out, std::vector<InstanceViolation>& errs) {
  if (!j.is_array()) {
    errs.push_back({"bad_ring", field, "expected an array of [x, y] pairs"});
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) parse_point(j[i], field + "[" + std::to_string(i) + "]", out, errs);
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw InstanceError("parse", {{"json_syntax", "byte " + std::to_string(e.byte), e.what()}});
  }
  std::vector<InstanceViolation> errs;
  if (!j.is_object()) throw InstanceError("parse", {{"not_an_object", "$", "instance must be a JSON object"}});
  if (!j.contains("version") || j["version"] != 1)
    errs.push_back({"version", "version", "expected \"version\": 1"});

  RawInstance raw;
  if (!j.contains("outer")) errs.push_back({"missing_field", "outer", "missing outer ring"});
  else parse_ring(j["outer"], "outer", raw.outer, errs);

  if (j.contains("holes")) {
    if (!j["holes"].is_array()) errs.push_back({"bad_ring", "holes", "expected an array of rings"});
    else
      for (std::size_t h = 0; h < j["holes"].size(); ++h) {
        raw.holes.emplace_back();
        parse_ring(j["holes"][h], "holes[" + std::to_string(h) + "]", raw.holes.back(), errs);
      }
  }
  if (!j.contains("robots")) errs.push_back({"missing_field", "robots", "missing robots"});
  else if (!j["robots"].is_array()) errs.push_back({"bad_ring", "robots", "expected an array of [x, y] pairs"});
  else
    for (std::size_t i = 0; i < j["robots"].size(); ++i)
      parse_point(j["robots"][i], "robots[" + std::to_string(i) + "]", raw.robots, errs);

  if (!j.contains("source")) {
    errs.push_back({"missing_field", "source", "missing source index"});
  } else {
    if (!j["source"].is_number_integer()) errs.push_back({"source_index", "source", "source must be an integer"});
    else raw.source = j["source"].get<int>();
  }
  if (j.contains("metric")) {
    try {
      raw.metric = parse_metric(j["metric"].get<std::string>());
    } catch (const std::exception&) {
      errs.push_back({"bad_metric", "metric", "metric must be \"geodesic\" or \"visibility\""});
    }
  }
  if (!errs.empty()) throw InstanceError("parse", errs);
  return normalize_instance(raw);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InstanceError("parse", {{"unreadable_file", path, "cannot open file"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

namespace {

// Indented JSON where arrays holding only scalars stay on one line.
void write_json(const ordered_json& j, int depth, std::string& out) {
  const auto scalar = [](const ordered_json& e) { return !e.is_array() && !e.is_object(); };
  const std::string pad(2 * (depth + 1), ' ');
  if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), scalar)) {
    out += j.dump();
  } else if (j.is_array() && !j.empty()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_json(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + ordered_json(it.key()).dump() + ": ";
      write_json(it.value(), depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "}";
  } else {
    out += j.dump();
  }
}

std::string format_json(const ordered_json& j) {
  std::string out;
  write_json(j, 0, out);
  return out + "\n";
}

ordered_json point_json(Point p) { return ordered_json::array({round_sig12(p.x), round_sig12(p.y)}); }

ordered_json ring_json(const Ring& r) {
  ordered_json a = ordered_json::array();
  for (const Point& p : r) a.push_back(point_json(p));
  return a;
}

}  // namespace

std::string dump_instance(const Instance& inst) {
  ordered_json j;
  j["version"] = 1;
  j["outer"] = ring_json(inst.domain.outer());
  j["holes"] = ordered_json::array();
  for (const Ring& h : inst.domain.holes()) j["holes"].push_back(ring_json(h));
  j["robots"] = ring_json(inst.robots.positions());
  j["source"] = inst.robots.source_id;
  if (inst.metric) j["metric"] = to_string(*inst.metric);
  return format_json(j);
}

void save_instance(const std::string& path, const Instance& inst) { write_text_file(path, dump_instance(inst)); }

std::string dump_schedule(const ScheduleFile& f) {
  const AwakeningSchedule& s = f.schedule;
  ordered_json j;
  j["metric"] = to_string(s.metric);
  j["model"] = to_string(s.model);
  j["algorithm"] = f.algorithm;
  j["degenerate"] = s.degenerate;
  j["root"] = s.root;
  j["steiner"] = ring_json(f.steiner);
  ordered_json wake = ordered_json::object();
  for (int v = 0; v < s.size(); ++v) wake[std::to_string(v)] = round_sig12(s.wake_time[v]);
  j["wake_times"] = wake;
  // Edges listed by child wake time, which keeps every parent's child order.
  std::vector<int> order;
  for (int v = 0; v < s.size(); ++v)
    if (s.parent[v] >= 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s.wake_time[a] != s.wake_time[b] ? s.wake_time[a] < s.wake_time[b] : a < b;
  });
  j["tree"] = ordered_json::array();
  for (int v : order) j["tree"].push_back({s.parent[v], v});
  ordered_json its = ordered_json::object();
  for (int v = 0; v < s.size(); ++v) {
    ordered_json a = ordered_json::array();
    for (const TimedPoint& tp : s.itineraries[v])
      a.push_back({round_sig12(tp.t), round_sig12(tp.p.x), round_sig12(tp.p.y)});
    its[std::to_string(v)] = a;
  }
  j["itineraries"] = its;
  j["makespan_all"] = round_sig12(s.makespan_all);
  j["makespan_original"] = round_sig12(s.makespan_original);
  return format_json(j);
}

ScheduleFile parse_schedule(std::string_view json_text) {
  ScheduleFile f;
  try {
    const ordered_json j = ordered_json::parse(json_text);
    AwakeningSchedule& s = f.schedule;
    s.metric = parse_metric(j.at("metric").get<std::string>());
    s.model = parse_movement_model(j.at("model").get<std::string>());
    f.algorithm = j.value("algorithm", std::string{});
    s.degenerate = j.value("degenerate", false);
    if (j.contains("steiner"))
      for (const auto& p : j["steiner"]) f.steiner.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    const auto& wake = j.at("wake_times");
    const int n = static_cast<int>(wake.size());
    s.wake_time.assign(n, 0.0);
    s.parent.assign(n, -1);
    s.itineraries.assign(n, {});
    for (const auto& [key, value] : wake.items()) {
      const int id = std::stoi(key);
      if (id < 0 || id >= n) throw std::out_of_range("wake_times id " + key);
      s.wake_time[id] = value.get<double>();
    }
    s.root = j.value("root", 0);
    for (const auto& e : j.at("tree")) {
      const int p = e.at(0).get<int>();
      const int c = e.at(1).get<int>();
      if (c < 0 || c >= n) throw std::out_of_range("tree child id " + std::to_string(c));
      s.parent[c] = p;
    }
    s.children.assign(n, {});
    for (const auto& e : j.at("tree")) {
      const int p = e.at(0).get<int>();
      if (p >= 0 && p < n) s.children[p].push_back(e.at(1).get<int>());
    }
    for (const auto& [key, value] : j.at("itineraries").items()) {
      const int id = std::stoi(key);
      if (id < 0 || id >= n) throw std::out_of_range("itineraries id " + key);
      for (const auto& tp : value)
        s.itineraries[id].push_back({tp.at(0).get<double>(), {tp.at(1).get<double>(), tp.at(2).get<double>()}});
    }
    s.makespan_all = j.at("makespan_all").get<double>();
    s.makespan_original = j.at("makespan_original").get<double>();
  } catch (const std::exception& e) {
    throw InstanceError("parse", {{"bad_schedule", "$", e.what()}});
  }
  return f;
}

ScheduleFile load_schedule(const std::string& path) { return parse_schedule(read_text_file(path)); }

void save_schedule(const std::string& path, const ScheduleFile& f) { write_text_file(path, dump_schedule(f)); }

}  // namespace freezetag
