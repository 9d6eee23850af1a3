#include "freezetag/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace freezetag {

namespace {

class Canvas {
 public:
  Canvas(const PolygonDomain& d, int size) : size_(size) {
    const auto box = d.bounding_box();
    min_x_ = box.min_x;
    max_y_ = box.max_y;
    const double extent = std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1e-12});
    scale_ = (size - 2.0 * kMargin) / extent;
  }

  std::string x(Point p) const { return num(kMargin + (p.x - min_x_) * scale_); }
  std::string y(Point p) const { return num(kMargin + (max_y_ - p.y) * scale_); }
  std::string xy(Point p) const { return x(p) + "," + y(p); }

  std::string ring_path(const Ring& r) const {
    std::string s = "M" + xy(r[0]);
    for (std::size_t i = 1; i < r.size(); ++i) s += " L" + xy(r[i]);
    return s + " Z";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
  }

  static constexpr double kMargin = 20.0;

 private:
  int size_;
  double min_x_ = 0.0;
  double max_y_ = 0.0;
  double scale_ = 1.0;
};

}  // namespace

std::string render_svg(const PolygonDomain& d, const RobotSet& robots, const SvgOverlay& overlay) {
  const Canvas c(d, overlay.size_px);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << overlay.size_px << "\" height=\""
      << overlay.size_px << "\" viewBox=\"0 0 " << overlay.size_px << ' ' << overlay.size_px << "\">\n"
      << "<defs>\n"
      << " <pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" "
         "stroke-width=\"1.5\"/></pattern>\n"
      << " <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 Z\" fill=\"#c0392b\"/></marker>\n"
      << "</defs>\n";

  out << "<path class=\"domain\" d=\"" << c.ring_path(d.outer())
      << "\" fill=\"#f4f1e8\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  for (const Ring& hole : d.holes())
    out << "<path class=\"hole\" d=\"" << c.ring_path(hole)
        << "\" fill=\"url(#hatch)\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";

  if (overlay.spanner) {
    const WeightedGraph& g = overlay.spanner->graph;
    for (const auto& e : g.sorted_edges()) {
      const Point a = g.vertex(e.u).point;
      const Point b = g.vertex(e.v).point;
      out << "<line class=\"spanner\" x1=\"" << c.x(a) << "\" y1=\"" << c.y(a) << "\" x2=\"" << c.x(b)
          << "\" y2=\"" << c.y(b) << "\" stroke=\"#2e86c1\" stroke-width=\"0.7\"/>\n";
    }
  }

  for (const GeodesicPath& path : overlay.paths) {
    out << "<polyline class=\"geodesic\" points=\"";
    for (std::size_t i = 0; i < path.waypoints.size(); ++i) out << (i ? " " : "") << c.xy(path.waypoints[i]);
    out << "\" fill=\"none\" stroke=\"#8e44ad\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  }

  if (overlay.schedule) {
    const AwakeningSchedule& s = *overlay.schedule;
    for (int v = 0; v < s.size(); ++v) {
      if (s.parent[v] < 0) continue;
      const Point a = robots.position(s.parent[v]);
      const Point b = robots.position(v);
      out << "<line class=\"tree\" x1=\"" << c.x(a) << "\" y1=\"" << c.y(a) << "\" x2=\"" << c.x(b)
          << "\" y2=\"" << c.y(b) << "\" stroke=\"#c0392b\" stroke-width=\"1.2\" marker-end=\"url(#arrow)\"/>\n";
      out << "<text class=\"wake\" x=\"" << c.x(b) << "\" y=\"" << c.y(b)
          << "\" dx=\"4\" dy=\"-4\" font-size=\"10\" fill=\"#c0392b\">" << Canvas::num(s.wake_time[v]) << "</text>\n";
    }
  }

  for (const Robot& r : robots.robots) {
    const bool source = r.id == robots.source_id;
    const char* cls = source ? "robot source" : (r.origin == Origin::Steiner ? "robot steiner" : "robot");
    const char* fill = source ? "#e67e22" : (r.origin == Origin::Steiner ? "#ffffff" : "#1a5276");
    out << "<circle class=\"" << cls << "\" cx=\"" << c.x(r.position) << "\" cy=\"" << c.y(r.position)
        << "\" r=\"" << (source ? 6 : 4) << "\" fill=\"" << fill << "\" stroke=\"#111\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace freezetag
