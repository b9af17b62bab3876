#include "topopush/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "topopush/errors.hpp"

namespace topopush {

void Workspace::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(depth) || !positive(width) || !positive(arm_width) ||
      !positive(object_radius) || !std::isfinite(gripper_width) || gripper_width < 0.0) {
    throw DomainError("workspace dimensions must be finite and positive");
  }
  if (!(arm_width < width)) {
    throw DomainError("arm width must be smaller than the shelf width");
  }
  if (!(2.0 * object_radius < width) || !(2.0 * object_radius < depth)) {
    throw DomainError("objects do not fit in the shelf");
  }
  if (!(2.0 * arm_width < width)) {
    throw DomainError("shelf narrower than twice the arm width: incidence angle is undefined");
  }
}

double normalize_angle(double angle) {
  constexpr double kPi = std::numbers::pi;
  double a = std::remainder(angle, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dist_point_to_walls(Point2 p, const Workspace& ws) {
  if (!(p.y >= 0.0 && p.y <= ws.width)) {
    throw DomainError("point y=" + std::to_string(p.y) + " lies outside the shelf");
  }
  return std::min(p.y, ws.width - p.y);
}

double dist_point_to_line_through_origin(Point2 p, double theta) {
  return std::abs(p.x * std::sin(theta) - p.y * std::cos(theta));
}

double signed_distance_to_line(Point2 p, Point2 anchor, double theta) {
  const double dx = p.x - anchor.x;
  const double dy = p.y - anchor.y;
  return dy * std::cos(theta) - dx * std::sin(theta);
}

namespace {

// Solves p.y cos(t) - p.x sin(t) = w for t in (0, pi/2). The left side is
// strictly decreasing there for p in the first quadrant.
double solve_tangent_north(Point2 p, double w) {
  auto f = [&](double t) { return p.y * std::cos(t) - p.x * std::sin(t) - w; };
  double lo = 0.0;
  double hi = 0.5 * std::numbers::pi;
  if (!(f(lo) > 0.0) || !(f(hi) < 0.0)) {
    throw GeometricInfeasibility("no acute tangent line through the shelf corner for this target");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TangentLine incidence_line(Point2 target, const Workspace& ws) {
  const double to_north = ws.width - target.y;
  const double to_south = target.y;
  if (std::min(to_north, to_south) > ws.arm_width) {
    throw DomainError("target is farther than the arm width from both walls");
  }
  if (to_north <= to_south) {
    return {{0.0, 0.0}, solve_tangent_north(target, ws.arm_width)};
  }
  const Point2 mirrored{target.x, ws.width - target.y};
  return {{0.0, ws.width}, -solve_tangent_north(mirrored, ws.arm_width)};
}

double incidence_angle(Point2 target, const Workspace& ws) {
  return incidence_line(target, ws).angle;
}

Rect aabb(std::span<const Point2> points, double inflate) {
  if (points.empty()) throw DomainError("aabb of an empty point set");
  if (!(inflate >= 0.0)) throw DomainError("aabb inflate must be non-negative");
  Rect r{points.front(), points.front()};
  for (const auto& p : points.subspan(1)) {
    r.lo.x = std::min(r.lo.x, p.x);
    r.lo.y = std::min(r.lo.y, p.y);
    r.hi.x = std::max(r.hi.x, p.x);
    r.hi.y = std::max(r.hi.y, p.y);
  }
  r.lo.x -= inflate;
  r.lo.y -= inflate;
  r.hi.x += inflate;
  r.hi.y += inflate;
  return r;
}

}  // namespace topopush
