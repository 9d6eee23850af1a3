#pragma once

#include <cstdint>
#include <string>

#include "freezetag/instance_io.hpp"

namespace freezetag {

enum class Profile { Convex, LShape, RandomOrthogonal };

Profile parse_profile(const std::string& s);
const char* to_string(Profile p);

/// Seeded random instance; robot 0 is the source. Throws
/// std::invalid_argument for infeasible parameters (no robots, holes in a
/// convex profile, holes that cannot be placed).
Instance generate_instance(std::uint64_t seed, int n_robots, int n_holes, Profile profile);

}  // namespace freezetag
