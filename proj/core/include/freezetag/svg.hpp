#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freezetag/geodesic.hpp"
#include "freezetag/schedule.hpp"
#include "freezetag/spanner.hpp"

namespace freezetag {

struct SvgOverlay {
  const AwakeningSchedule* schedule = nullptr;  // arrowed tree edges with wake labels
  const SpannerGraph* spanner = nullptr;        // vertex i is robot i
  std::vector<GeodesicPath> paths;              // dashed polylines
  int size_px = 640;
};

/// Standalone SVG picture of a domain, its robots and optional overlays.
std::string render_svg(const PolygonDomain& d, const RobotSet& robots, const SvgOverlay& overlay = {});

}  // namespace freezetag
