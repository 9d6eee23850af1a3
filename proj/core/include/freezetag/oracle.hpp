#pragma once

#include <cstdint>
#include <stdexcept>

#include "freezetag/awakening_tree.hpp"

namespace freezetag {

inline constexpr int kOracleMaxRobots = 8;

/// Raised when an exhaustive search is asked to handle too many robots.
class SizeCapExceeded : public std::invalid_argument {
 public:
  SizeCapExceeded(int requested, int cap);
};

struct OracleResult {
  double makespan = 0.0;
  AwakeningTree witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact freeze-tag optimum under the continue model, by branch and bound
/// over wake sequences ordered by wake time.
OracleResult optimal_makespan(const RobotSet& s, Metric metric, const PolygonDomain& d);

/// Same search on a prebuilt travel table covering exactly the robots of s.
OracleResult optimal_makespan(const RobotSet& s, const TravelTable& table);

}  // namespace freezetag
