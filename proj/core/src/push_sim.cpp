#include "topopush/push_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "topopush/errors.hpp"

namespace topopush {

const char* to_string(SweepDirection d) {
  return d == SweepDirection::BottomToTop ? "bottom_to_top" : "top_to_bottom";
}

Point2 sweep_end_point(const SweepAction& action, double front) {
  return rotate({action.swath.mid(), front}, action.frame_angle);
}

Point2 sweep_start_point(const SweepAction& action) {
  return sweep_end_point(action, action.front_start);
}

double approach_distance(const Pose2& gripper, const SweepAction& action) {
  return distance(gripper.position, sweep_start_point(action));
}

SweepAction plan_sweep(const Configuration& config, const Rect& rect, const PathRegion& region,
                       SweepDirection direction, const SimParams& params) {
  const double rho = config.ws.object_radius;
  SweepAction action;
  action.frame_angle = region.frame_angle;
  action.direction = direction;
  action.swath = {rect.lo.x - rho, rect.hi.x + rho};
  if (direction == SweepDirection::BottomToTop) {
    action.front_start = rect.lo.y - rho - params.start_gap;
    action.front_end = region.corridor.hi.y + rho + params.clearance;
  } else {
    action.front_start = rect.hi.y + rho + params.start_gap;
    action.front_end = region.corridor.lo.y - rho - params.clearance;
  }

  const Point2 t = region.to_frame(config.target);
  const double y_lo = std::min(action.front_start, action.front_end);
  const double y_hi = std::max(action.front_start, action.front_end);
  if (t.x > action.swath.lo - rho && t.x < action.swath.hi + rho && t.y > y_lo - rho &&
      t.y < y_hi + rho) {
    throw BlockedApproach("sweep over the swath would pass through the target");
  }
  return action;
}

namespace {

// Largest displacement along unit direction u that keeps p inside the shelf
// shrunk by the object radius.
double wall_travel(Point2 p, Point2 u, const Workspace& ws) {
  constexpr double kEps = 1e-15;
  const double r = ws.object_radius;
  double s = std::numeric_limits<double>::infinity();
  if (u.x > kEps) s = std::min(s, (ws.depth - r - p.x) / u.x);
  if (u.x < -kEps) s = std::min(s, (r - p.x) / u.x);
  if (u.y > kEps) s = std::min(s, (ws.width - r - p.y) / u.y);
  if (u.y < -kEps) s = std::min(s, (r - p.y) / u.y);
  return std::max(0.0, s);
}

}  // namespace

SweepOutcome execute_sweep(const Configuration& config, const SweepAction& action,
                           const SimParams& params) {
  const double rho = config.ws.object_radius;
  const double contact = 2.0 * rho;
  const double sign = action.direction == SweepDirection::BottomToTop ? 1.0 : -1.0;
  const auto& obstacles = config.obstacles;
  const std::size_t n = obstacles.size();

  // Push coordinates: region frame with y flipped for TopToBottom so the front
  // always advances toward +y.
  auto to_push = [&](Point2 world) {
    const Point2 f = action.frame_angle == 0.0 ? world : rotate(world, -action.frame_angle);
    return Point2{f.x, sign * f.y};
  };
  const Point2 u = rotate({0.0, sign}, action.frame_angle);
  const double start = sign * action.front_start;
  const double goal = std::max(start, sign * action.front_end);
  const Point2 target = to_push(config.target);

  std::vector<Point2> q(n);
  std::vector<double> limit(n);
  for (std::size_t j = 0; j < n; ++j) {
    q[j] = to_push(obstacles[j]);
    limit[j] = q[j].y + wall_travel(obstacles[j], u, config.ws);
    const double dx = std::abs(q[j].x - target.x);
    if (dx < contact && target.y > q[j].y) {
      limit[j] = std::min(limit[j], target.y - std::sqrt(contact * contact - dx * dx));
    }
    limit[j] = std::max(limit[j], q[j].y);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(q[a].y, q[a].x, a) < std::tie(q[b].y, q[b].x, b);
  });

  auto swept = [&](std::size_t j) { return action.swath.contains(q[j].x) && q[j].y > start; };
  auto gap = [&](std::size_t a, std::size_t b) {
    const double dx = std::abs(q[a].x - q[b].x);
    return dx < contact ? std::sqrt(contact * contact - dx * dx) : -1.0;
  };

  // lead[j]: how far ahead of the front disc j must sit once it is reached,
  // following the longest contact chain from the front. Front travel is capped
  // where any chain would drive a disc into a wall or the target.
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  std::vector<double> lead(n, kNone);
  double stop = goal;
  for (std::size_t oj = 0; oj < n; ++oj) {
    const std::size_t j = order[oj];
    if (swept(j)) lead[j] = rho;
    for (std::size_t ok = 0; ok < oj; ++ok) {
      const std::size_t k = order[ok];
      const double g = gap(k, j);
      if (lead[k] != kNone && g >= 0.0) lead[j] = std::max(lead[j], lead[k] + g);
    }
    if (lead[j] != kNone) stop = std::min(stop, limit[j] - lead[j]);
  }

  SweepOutcome out{config, 0.0, {}, stop < goal, 0.0};
  if (stop < start) stop = start;

  std::vector<double> pushed_y(n);
  std::vector<bool> moved(n, false);
  for (std::size_t oj = 0; oj < n; ++oj) {
    const std::size_t j = order[oj];
    double y = q[j].y;
    if (swept(j)) y = std::max(y, stop + rho);
    for (std::size_t ok = 0; ok < oj; ++ok) {
      const std::size_t k = order[ok];
      const double g = gap(k, j);
      if (moved[k] && g >= 0.0) y = std::max(y, pushed_y[k] + g);
    }
    if (y > q[j].y) {
      if (y > limit[j] + 1e-12) {
        // Contact at the very start of the sweep: nothing can move.
        out.config_after = config;
        out.moved.clear();
        out.jammed = true;
        out.front_stop = action.front_start;
        out.time = approach_distance(config.gripper, action) / params.push_speed;
        return out;
      }
      moved[j] = true;
      pushed_y[j] = std::min(y, limit[j]);
    } else {
      pushed_y[j] = q[j].y;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (!moved[j]) continue;
    const double shift = pushed_y[j] - q[j].y;
    out.config_after.obstacles[j] = {obstacles[j].x + shift * u.x, obstacles[j].y + shift * u.y};
    out.moved.push_back(j);
  }
  out.front_stop = sign * stop;
  out.time = ((stop - start) + approach_distance(config.gripper, action)) / params.push_speed;
  return out;
}

}  // namespace topopush
