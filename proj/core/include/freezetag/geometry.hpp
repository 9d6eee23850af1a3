#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace freezetag {

/// Tolerance for on-segment and collinearity predicates (domain length units).
inline constexpr double kGeomEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Twice the signed area of triangle abc; positive for a left turn.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Lexicographic (x, then y) ordering.
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

bool nearly_equal(Point a, Point b, double eps = kGeomEps);

/// Signed distance of c from the line through a and b (left positive).
/// Falls back to |c - a| when a and b coincide.
double line_offset(Point a, Point b, Point c);

/// True when c lies on the closed segment ab within eps.
bool on_segment(Point a, Point b, Point c, double eps = kGeomEps);

/// True when open segments ab and cd cross at a single point interior to both.
bool segments_cross_properly(Point a, Point b, Point c, Point d, double eps = kGeomEps);

/// True when closed segments ab and cd share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d, double eps = kGeomEps);

using Ring = std::vector<Point>;

/// Twice the signed area of a ring (positive when counterclockwise).
double signed_area2(std::span<const Point> ring);

enum class RingSide { Outside, Boundary, Inside };

/// Classifies p against a simple ring of either orientation.
RingSide classify_in_ring(Point p, std::span<const Point> ring, double eps = kGeomEps);

/// True when no two non-adjacent edges of the ring intersect and adjacent
/// edges only share their common vertex.
bool ring_is_simple(std::span<const Point> ring);

/// True when some three consecutive vertices are collinear (or repeated).
bool ring_has_degenerate_vertex(std::span<const Point> ring, double eps = kGeomEps);

enum class DomainErrorCode {
  TooFewVertices,
  DegenerateRing,
  SelfIntersection,
  OuterOrientation,
  HoleOrientation,
  HoleOutsideOuter,
  HolesOverlap,
  NonFiniteCoordinate,
};

const char* to_string(DomainErrorCode code);

struct DomainViolation {
  DomainErrorCode code;
  std::string where;  // "outer" or "holes[i]"
  std::string message;
};

class DomainError : public std::runtime_error {
 public:
  explicit DomainError(std::vector<DomainViolation> violations);
  const std::vector<DomainViolation>& violations() const { return violations_; }

 private:
  std::vector<DomainViolation> violations_;
};

/// Simple outer ring (counterclockwise) minus disjoint holes (clockwise).
class PolygonDomain {
 public:
  /// Validates and builds the domain; throws DomainError listing every
  /// violated invariant.
  PolygonDomain(Ring outer, std::vector<Ring> holes = {});

  /// Runs the same validation without throwing.
  static std::vector<DomainViolation> validate(const Ring& outer, const std::vector<Ring>& holes);

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }

  /// Outer-ring vertices with interior angle strictly greater than pi, ring order.
  const std::vector<Point>& reflex_vertices() const { return reflex_; }
  /// All hole-ring vertices, hole by hole.
  const std::vector<Point>& hole_vertices() const { return hole_vertices_; }
  /// reflex_vertices() followed by hole_vertices().
  std::vector<Point> corners() const;

  /// Every boundary edge (outer and holes) as a pair of endpoints.
  const std::vector<std::pair<Point, Point>>& edges() const { return edges_; }

  struct Box {
    double min_x, min_y, max_x, max_y;
  };
  Box bounding_box() const;

 private:
  Ring outer_;
  std::vector<Ring> holes_;
  std::vector<Point> reflex_;
  std::vector<Point> hole_vertices_;
  std::vector<std::pair<Point, Point>> edges_;
};

/// Closed-domain membership: inside or on the outer ring and not strictly
/// inside any hole.
bool point_in_domain(Point p, const PolygonDomain& d);

/// True iff the closed segment pq lies in the closed domain. Grazing vertices
/// and running along edges is allowed.
bool is_visible(Point p, Point q, const PolygonDomain& d);

inline std::vector<Point> reflex_vertices(const PolygonDomain& d) { return d.reflex_vertices(); }
inline std::vector<Point> hole_vertices(const PolygonDomain& d) { return d.hole_vertices(); }

}  // namespace freezetag
