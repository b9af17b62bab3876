#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topopush/geometry.hpp"

namespace topopush {

// Positions of the movable obstacles and the target (disc centres, all of
// radius ws.object_radius) plus the gripper pose.
struct Configuration {
  std::vector<Point2> obstacles;
  Point2 target;
  Pose2 gripper;
  Workspace ws;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

inline constexpr double kFeasibilityTolerance = 1e-9;

// Describes the first violated feasibility condition (overlapping discs or a
// disc leaving the shelf), or nullopt when the configuration is feasible.
std::optional<std::string> feasibility_violation(const Configuration& config,
                                                 double tol = kFeasibilityTolerance);

inline bool is_feasible(const Configuration& config, double tol = kFeasibilityTolerance) {
  return !feasibility_violation(config, tol).has_value();
}

// Throws DomainError with the violation message.
void require_feasible(const Configuration& config);

}  // namespace topopush
