#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freezetag/awakening_tree.hpp"
#include "freezetag/cfa.hpp"

namespace freezetag {

/// One connected component of the domain clipped to a grid cell.
struct Pixel {
  int cell_x = 0;  // column i, cell [i/m, (i+1)/m] in x
  int cell_y = 0;  // row j
  int component = 0;
  Ring outer;                // counterclockwise
  std::vector<Ring> holes;   // clockwise
  bool convex = false;
  double diameter = 0.0;     // Euclidean, over region vertices
  std::vector<int> members;  // robot ids, ascending
  int representative = -1;
};

/// Clips the domain (normalized to the unit square) against an m x m grid and
/// splits every nonempty cell intersection into connected components.
std::vector<Pixel> pixelize(const PolygonDomain& d, int m);

/// Closed membership test against a pixel region.
bool pixel_contains(const Pixel& px, Point p);

/// Assigns each robot to one pixel: the first pixel (in (cell_x, cell_y,
/// component) order) whose closed region holds it. Throws
/// std::invalid_argument when a robot lies in no pixel.
void assign_members(std::vector<Pixel>& pixels, const RobotSet& s);

/// Lowest member id, except that the source's pixel is represented by the
/// source.
void choose_representatives(std::vector<Pixel>& pixels, const RobotSet& s);

struct SbatOptions {
  std::optional<int> depth_cap;
  int max_size = 8;
  /// Skip partial trees that cannot beat the incumbent. Disabling it makes
  /// the search evaluate every ordered tree.
  bool prune = true;
};

struct SbatResult {
  AwakeningTree tree;
  std::uint64_t trees_evaluated = 0;
};

/// Minimum-makespan awakening tree over the representatives (continue model),
/// found by enumerating every rooted labeled tree with every child order.
/// Throws SizeCapExceeded above max_size representatives.
SbatResult sbat_search(int root, std::span<const int> reps, const TravelTable& table,
                       const SbatOptions& opts = {});

struct PixelCfaOptions {
  int cones = 9;        // theta graph inside convex pixels
  double stretch = 6.0; // greedy spanner inside non-convex pixels
};

/// Splices per-pixel awakening strategies into the representative tree. A
/// representative first runs its pixel's strategy (returning home), then
/// wakes its tree children.
AwakeningSchedule compose_ptas(const AwakeningTree& tree, const std::vector<Pixel>& pixels,
                               const RobotSet& s, const TravelTable& table,
                               const PixelCfaOptions& opts = {});

struct PtasSolution {
  std::vector<Pixel> pixels;
  SbatResult sbat;
  AwakeningSchedule schedule;
};

PtasSolution solve_ptas(const PolygonDomain& d, const RobotSet& s, Metric metric, int m,
                        const SbatOptions& sbat = {}, const PixelCfaOptions& cfa = {});

}  // namespace freezetag
