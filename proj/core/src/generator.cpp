#include "freezetag/generator.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <stdexcept>

namespace freezetag {

Profile parse_profile(const std::string& s) {
  if (s == "convex") return Profile::Convex;
  if (s == "lshape") return Profile::LShape;
  if (s == "random-orthogonal") return Profile::RandomOrthogonal;
  throw std::invalid_argument("unknown profile '" + s + "'");
}

const char* to_string(Profile p) {
  switch (p) {
    case Profile::Convex: return "convex";
    case Profile::LShape: return "lshape";
    case Profile::RandomOrthogonal: return "random-orthogonal";
  }
  return "unknown";
}

namespace {

// Platform-independent uniform sampling on top of the standard engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 rng_;
};

Ring convex_outer(Sampler& rng) {
  const int k = 5 + rng.below(4);
  for (;;) {
    std::vector<double> angles;
    for (int i = 0; i < k; ++i) angles.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
    std::sort(angles.begin(), angles.end());
    bool spread = true;
    for (int i = 0; i < k; ++i) {
      const double next = i + 1 < k ? angles[i + 1] : angles[0] + 2.0 * std::numbers::pi;
      if (next - angles[i] < 0.3) spread = false;
    }
    if (!spread) continue;
    Ring r;
    for (double a : angles) r.push_back({1.0 + std::cos(a), 1.0 + std::sin(a)});
    return r;
  }
}

Ring lshape_outer(Sampler& rng) {
  const double a = rng.uniform(0.6, 1.4);
  const double b = rng.uniform(0.6, 1.4);
  return {{0, 0}, {2, 0}, {2, a}, {b, a}, {b, 2}, {0, 2}};
}

// Histogram polygon: flat bottom, stepped top with distinct neighboring heights.
Ring orthogonal_outer(Sampler& rng) {
  const int columns = 3 + rng.below(3);
  std::vector<double> xs{0.0};
  for (int i = 0; i < columns; ++i) xs.push_back(xs.back() + rng.uniform(0.6, 1.4));
  std::vector<double> heights;
  for (int i = 0; i < columns; ++i) {
    double h;
    do h = rng.uniform(1.0, 3.0);
    while (!heights.empty() && std::abs(h - heights.back()) < 0.3);
    heights.push_back(h);
  }
  Ring r{{0.0, 0.0}, {xs.back(), 0.0}};
  for (int i = columns - 1; i >= 0; --i) {
    r.push_back({xs[i + 1], heights[i]});
    r.push_back({xs[i], heights[i]});
  }
  return r;
}

Ring rectangle_cw(double x0, double y0, double x1, double y1) { return {{x0, y0}, {x0, y1}, {x1, y1}, {x1, y0}}; }

bool rect_fits(const Ring& outer, const std::vector<Ring>& placed, const Ring& grown) {
  for (const Point& p : grown)
    if (classify_in_ring(p, outer) != RingSide::Inside) return false;
  for (std::size_t i = 0; i < grown.size(); ++i)
    for (std::size_t j = 0; j < outer.size(); ++j)
      if (segments_intersect(grown[i], grown[(i + 1) % grown.size()], outer[j], outer[(j + 1) % outer.size()]))
        return false;
  for (const Ring& other : placed) {
    // Both are axis-aligned rectangles: disjoint iff separated on some axis.
    const auto [ox0, ox1] = std::minmax({other[0].x, other[2].x});
    const auto [oy0, oy1] = std::minmax({other[0].y, other[2].y});
    const auto [gx0, gx1] = std::minmax({grown[0].x, grown[2].x});
    const auto [gy0, gy1] = std::minmax({grown[0].y, grown[2].y});
    if (!(gx1 < ox0 || ox1 < gx0 || gy1 < oy0 || oy1 < gy0)) return false;
  }
  return true;
}

std::vector<Ring> place_holes(Sampler& rng, const Ring& outer, int count) {
  constexpr double kMargin = 0.08;
  double min_x = outer[0].x, max_x = min_x, min_y = outer[0].y, max_y = min_y;
  for (const Point& p : outer) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  std::vector<Ring> holes;
  std::vector<Ring> grown_holes;
  for (int attempt = 0; attempt < 2000 && static_cast<int>(holes.size()) < count; ++attempt) {
    const double w = rng.uniform(0.15, 0.4);
    const double h = rng.uniform(0.15, 0.4);
    const double x = rng.uniform(min_x, max_x - w);
    const double y = rng.uniform(min_y, max_y - h);
    const Ring grown = rectangle_cw(x - kMargin, y - kMargin, x + w + kMargin, y + h + kMargin);
    if (!rect_fits(outer, grown_holes, grown)) continue;
    holes.push_back(rectangle_cw(x, y, x + w, y + h));
    grown_holes.push_back(grown);
  }
  if (static_cast<int>(holes.size()) < count) throw std::invalid_argument("could not place the requested holes");
  return holes;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, int n_robots, int n_holes, Profile profile) {
  if (n_robots < 1) throw std::invalid_argument("at least one robot is required");
  if (n_holes < 0) throw std::invalid_argument("hole count must be nonnegative");
  if (profile == Profile::Convex && n_holes > 0)
    throw std::invalid_argument("the convex profile cannot have holes");

  Sampler rng(seed);
  RawInstance raw;
  switch (profile) {
    case Profile::Convex: raw.outer = convex_outer(rng); break;
    case Profile::LShape: raw.outer = lshape_outer(rng); break;
    case Profile::RandomOrthogonal: raw.outer = orthogonal_outer(rng); break;
  }
  raw.holes = place_holes(rng, raw.outer, n_holes);

  const PolygonDomain domain(raw.outer, raw.holes);
  const auto box = domain.bounding_box();
  while (static_cast<int>(raw.robots.size()) < n_robots) {
    const Point p{rng.uniform(box.min_x, box.max_x), rng.uniform(box.min_y, box.max_y)};
    if (point_in_domain(p, domain)) raw.robots.push_back(p);
  }
  raw.source = 0;
  return normalize_instance(raw);
}

}  // namespace freezetag
