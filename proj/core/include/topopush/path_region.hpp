#pragma once

#include <cstddef>
#include <vector>

#include "topopush/configuration.hpp"
#include "topopush/geometry.hpp"

namespace topopush {

// The corridor the arm sweeps through to reach the target. `corridor` is
// expressed in the region frame, i.e. after rotating world coordinates by
// -frame_angle; frame_angle is zero unless the target sits within arm_width of
// a wall.
struct PathRegion {
  double frame_angle = 0.0;
  Rect corridor;
  std::vector<std::size_t> members;  // obstacle indices, ascending

  bool empty() const { return members.empty(); }
  Point2 to_frame(Point2 world) const;
  Point2 to_world(Point2 frame) const;
};

// Obstacles whose centres lie in [g.x, t.x) x [t.y - w, t.y + w] of the region
// frame, where g is the gripper and t the target.
// Throws DomainError for an infeasible configuration.
PathRegion path_region(const Configuration& config);

bool is_cleared(const Configuration& config);

}  // namespace topopush
