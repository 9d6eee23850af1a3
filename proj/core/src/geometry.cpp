#include "freezetag/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace freezetag {

bool nearly_equal(Point a, Point b, double eps) { return distance(a, b) <= eps; }

double line_offset(Point a, Point b, Point c) {
  const double len = distance(a, b);
  if (len == 0.0) return distance(a, c);
  return orient(a, b, c) / len;
}

namespace {

double point_segment_distance(Point a, Point b, Point c) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(a, c);
  const double t = std::clamp(dot(c - a, ab) / len2, 0.0, 1.0);
  return distance(a + t * ab, c);
}

int sign_with_eps(double v, double eps) {
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

}  // namespace

bool on_segment(Point a, Point b, Point c, double eps) {
  return point_segment_distance(a, b, c) <= eps;
}

bool segments_cross_properly(Point a, Point b, Point c, Point d, double eps) {
  const int o1 = sign_with_eps(line_offset(a, b, c), eps);
  const int o2 = sign_with_eps(line_offset(a, b, d), eps);
  const int o3 = sign_with_eps(line_offset(c, d, a), eps);
  const int o4 = sign_with_eps(line_offset(c, d, b), eps);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(Point a, Point b, Point c, Point d, double eps) {
  if (segments_cross_properly(a, b, c, d, eps)) return true;
  return on_segment(a, b, c, eps) || on_segment(a, b, d, eps) || on_segment(c, d, a, eps) ||
         on_segment(c, d, b, eps);
}

double signed_area2(std::span<const Point> ring) {
  double s = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
  return s;
}

RingSide classify_in_ring(Point p, std::span<const Point> ring, double eps) {
  const std::size_t n = ring.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[j];
    const Point b = ring[i];
    if (on_segment(a, b, p, eps)) return RingSide::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside ? RingSide::Inside : RingSide::Outside;
}

bool ring_is_simple(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(a, b, ring[j], ring[(j + 1) % n])) return false;
    }
  }
  return true;
}

bool ring_has_degenerate_vertex(std::span<const Point> ring, double eps) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = ring[(i + n - 1) % n];
    const Point cur = ring[i];
    const Point next = ring[(i + 1) % n];
    if (nearly_equal(prev, cur, eps)) return true;
    if (std::abs(line_offset(prev, next, cur)) <= eps) return true;
  }
  return false;
}

const char* to_string(DomainErrorCode code) {
  switch (code) {
    case DomainErrorCode::TooFewVertices: return "too few vertices";
    case DomainErrorCode::DegenerateRing: return "degenerate ring";
    case DomainErrorCode::SelfIntersection: return "self intersection";
    case DomainErrorCode::OuterOrientation: return "outer orientation";
    case DomainErrorCode::HoleOrientation: return "hole orientation";
    case DomainErrorCode::HoleOutsideOuter: return "hole outside outer";
    case DomainErrorCode::HolesOverlap: return "holes overlap";
    case DomainErrorCode::NonFiniteCoordinate: return "non-finite coordinate";
  }
  return "unknown";
}

namespace {

std::string join_violations(const std::vector<DomainViolation>& vs) {
  std::ostringstream out;
  out << "invalid polygon domain:";
  for (const auto& v : vs) out << " [" << v.where << ": " << to_string(v.code) << "]";
  return out.str();
}

bool rings_touch(const Ring& r, const Ring& s) {
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (segments_intersect(r[i], r[(i + 1) % r.size()], s[j], s[(j + 1) % s.size()]))
        return true;
  return false;
}

// Checks that apply to any ring; returns false when later geometric checks
// would be meaningless.
bool check_ring_shape(const Ring& ring, const std::string& where,
                      std::vector<DomainViolation>& out) {
  for (const Point& p : ring) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      out.push_back({DomainErrorCode::NonFiniteCoordinate, where, "coordinate is not finite"});
      return false;
    }
  }
  if (ring.size() < 3) {
    out.push_back({DomainErrorCode::TooFewVertices, where, "ring needs at least 3 vertices"});
    return false;
  }
  if (ring_has_degenerate_vertex(ring)) {
    out.push_back({DomainErrorCode::DegenerateRing, where,
                   "repeated or collinear consecutive vertices"});
    return false;
  }
  if (!ring_is_simple(ring)) {
    out.push_back({DomainErrorCode::SelfIntersection, where, "ring is not simple"});
    return false;
  }
  return true;
}

}  // namespace

DomainError::DomainError(std::vector<DomainViolation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<DomainViolation> PolygonDomain::validate(const Ring& outer,
                                                     const std::vector<Ring>& holes) {
  std::vector<DomainViolation> out;
  const bool outer_ok = check_ring_shape(outer, "outer", out);
  if (outer_ok && signed_area2(outer) <= 0.0)
    out.push_back({DomainErrorCode::OuterOrientation, "outer", "outer ring must be counterclockwise"});

  std::vector<bool> hole_ok(holes.size(), false);
  for (std::size_t h = 0; h < holes.size(); ++h) {
    const std::string where = "holes[" + std::to_string(h) + "]";
    hole_ok[h] = check_ring_shape(holes[h], where, out);
    if (!hole_ok[h]) continue;
    if (signed_area2(holes[h]) >= 0.0)
      out.push_back({DomainErrorCode::HoleOrientation, where, "hole ring must be clockwise"});
    if (!outer_ok) continue;
    bool inside = !rings_touch(holes[h], outer);
    for (const Point& p : holes[h])
      if (classify_in_ring(p, outer) != RingSide::Inside) inside = false;
    if (!inside)
      out.push_back({DomainErrorCode::HoleOutsideOuter, where,
                     "hole must lie strictly inside the outer ring"});
  }

  for (std::size_t a = 0; a < holes.size(); ++a) {
    for (std::size_t b = a + 1; b < holes.size(); ++b) {
      if (!hole_ok[a] || !hole_ok[b]) continue;
      bool overlap = rings_touch(holes[a], holes[b]) ||
                     classify_in_ring(holes[a][0], holes[b]) != RingSide::Outside ||
                     classify_in_ring(holes[b][0], holes[a]) != RingSide::Outside;
      if (overlap)
        out.push_back({DomainErrorCode::HolesOverlap,
                       "holes[" + std::to_string(a) + "],holes[" + std::to_string(b) + "]",
                       "holes must be pairwise disjoint"});
    }
  }
  return out;
}

PolygonDomain::PolygonDomain(Ring outer, std::vector<Ring> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {
  if (auto violations = validate(outer_, holes_); !violations.empty())
    throw DomainError(std::move(violations));

  const std::size_t n = outer_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = outer_[(i + n - 1) % n];
    const Point next = outer_[(i + 1) % n];
    // Right turn on a counterclockwise ring means the interior angle exceeds pi.
    if (orient(prev, outer_[i], next) < 0.0) reflex_.push_back(outer_[i]);
    edges_.emplace_back(outer_[i], next);
  }
  for (const Ring& hole : holes_) {
    for (std::size_t i = 0; i < hole.size(); ++i) {
      hole_vertices_.push_back(hole[i]);
      edges_.emplace_back(hole[i], hole[(i + 1) % hole.size()]);
    }
  }
}

std::vector<Point> PolygonDomain::corners() const {
  std::vector<Point> out = reflex_;
  out.insert(out.end(), hole_vertices_.begin(), hole_vertices_.end());
  return out;
}

PolygonDomain::Box PolygonDomain::bounding_box() const {
  Box box{outer_[0].x, outer_[0].y, outer_[0].x, outer_[0].y};
  for (const Point& p : outer_) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

bool point_in_domain(Point p, const PolygonDomain& d) {
  if (classify_in_ring(p, d.outer()) == RingSide::Outside) return false;
  for (const Ring& hole : d.holes())
    if (classify_in_ring(p, hole) == RingSide::Inside) return false;
  return true;
}

bool is_visible(Point p, Point q, const PolygonDomain& d) {
  if (!point_in_domain(p, d) || !point_in_domain(q, d)) return false;
  const double len = distance(p, q);
  if (len <= kGeomEps) return true;

  // Parameters along pq where the segment meets the boundary without a proper
  // crossing. Between consecutive stops the open sub-segment avoids the
  // boundary, so one interior sample decides the whole piece.
  std::vector<double> stops{0.0, 1.0};
  const Point dir = q - p;
  for (const auto& [a, b] : d.edges()) {
    if (segments_cross_properly(p, q, a, b)) return false;
    for (const Point v : {a, b}) {
      if (on_segment(p, q, v)) stops.push_back(std::clamp(dot(v - p, dir) / (len * len), 0.0, 1.0));
    }
  }
  std::sort(stops.begin(), stops.end());
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    if ((stops[i + 1] - stops[i]) * len <= kGeomEps) continue;
    const double mid = 0.5 * (stops[i] + stops[i + 1]);
    if (!point_in_domain(p + mid * dir, d)) return false;
  }
  return true;
}

}  // namespace freezetag
