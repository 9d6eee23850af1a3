#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freezetag/geometry.hpp"
#include "freezetag/schedule.hpp"

namespace freezetag {

/// A validated, normalized problem instance.
struct Instance {
  PolygonDomain domain;
  RobotSet robots;  // original robots only
  std::optional<Metric> metric;
};

struct InstanceViolation {
  std::string code;   // machine-readable, e.g. "hole_orientation"
  std::string field;  // e.g. "holes[0]", "robots[3]"
  std::string message;
};

/// Parse or validation failure carrying every violation found.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::string kind, std::vector<InstanceViolation> violations);
  /// "parse" or "validation".
  const std::string& kind() const { return kind_; }
  const std::vector<InstanceViolation>& violations() const { return violations_; }
  bool has_code(std::string_view code) const;

 private:
  std::string kind_;
  std::vector<InstanceViolation> violations_;
};

/// Rounds to 12 significant decimal digits, the on-disk precision.
double round_sig12(double v);

/// Translates and uniformly scales (no rotation) so the outer ring's bounding
/// box fits [0,1]^2 with its longer side spanning [0,1]; then rounds.
struct RawInstance {
  Ring outer;
  std::vector<Ring> holes;
  std::vector<Point> robots;
  int source = 0;
  std::optional<Metric> metric;
};
Instance normalize_instance(const RawInstance& raw);

Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);
std::string dump_instance(const Instance& inst);
void save_instance(const std::string& path, const Instance& inst);

/// Schedule file contents. Robot ids >= the instance's robot count refer to
/// `steiner` positions in order.
struct ScheduleFile {
  AwakeningSchedule schedule;
  std::string algorithm;
  std::vector<Point> steiner;
};

std::string dump_schedule(const ScheduleFile& f);
ScheduleFile parse_schedule(std::string_view json_text);
ScheduleFile load_schedule(const std::string& path);
void save_schedule(const std::string& path, const ScheduleFile& f);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace freezetag
