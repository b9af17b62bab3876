#include "topopush/path_region.hpp"

#include <algorithm>

namespace topopush {

Point2 PathRegion::to_frame(Point2 world) const {
  return frame_angle == 0.0 ? world : rotate(world, -frame_angle);
}

Point2 PathRegion::to_world(Point2 frame) const {
  return frame_angle == 0.0 ? frame : rotate(frame, frame_angle);
}

PathRegion path_region(const Configuration& config) {
  require_feasible(config);
  const auto& ws = config.ws;
  const double w = ws.arm_width;

  PathRegion region;
  if (dist_point_to_walls(config.target, ws) <= w) {
    region.frame_angle = incidence_angle(config.target, ws);
  }

  const Point2 t = region.to_frame(config.target);
  const Point2 g = region.to_frame(config.gripper.position);
  region.corridor = Rect{{std::min(g.x, t.x), t.y - w}, {t.x, t.y + w}};

  for (std::size_t i = 0; i < config.obstacles.size(); ++i) {
    const Point2 o = region.to_frame(config.obstacles[i]);
    if (t.y - w <= o.y && o.y <= t.y + w && g.x <= o.x && o.x < t.x) {
      region.members.push_back(i);
    }
  }
  return region;
}

bool is_cleared(const Configuration& config) { return path_region(config).empty(); }

}  // namespace topopush
