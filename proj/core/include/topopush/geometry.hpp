#pragma once

#include <span>

namespace topopush {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Planar pose; heading is kept in (-pi, pi].
struct Pose2 {
  Point2 position;
  double heading = 0.0;

  friend bool operator==(const Pose2&, const Pose2&) = default;
};

// Axis-aligned rectangle, lo <= hi componentwise.
struct Rect {
  Point2 lo;
  Point2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  Point2 center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
  bool contains(Point2 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Rectangular shelf. x runs along the depth starting at the open mouth,
// y across the width with wall S at y = 0 and wall N at y = width.
struct Workspace {
  double depth = 0.6;
  double width = 0.6;
  double arm_width = 0.12;
  double gripper_width = 0.06;
  double object_radius = 0.03;

  // Throws DomainError when a dimension is non-positive or the shelf is too
  // narrow for the arm (a target could then be near both walls at once).
  void validate() const;

  Point2 centroid() const { return {0.5 * depth, 0.5 * width}; }

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

double normalize_angle(double angle);

// Counterclockwise rotation about the origin.
Point2 rotate(Point2 p, double angle);

double distance(Point2 a, Point2 b);

// Distance to the nearer of the walls S and N. Throws DomainError when p lies
// outside the shelf in y.
double dist_point_to_walls(Point2 p, const Workspace& ws);

// Unsigned distance from p to the line through the origin with direction angle theta.
double dist_point_to_line_through_origin(Point2 p, double theta);

// Signed distance from p to the directed line through anchor with direction
// angle theta; positive on the left.
double signed_distance_to_line(Point2 p, Point2 anchor, double theta);

// A line through `anchor` with direction angle `angle`.
struct TangentLine {
  Point2 anchor;
  double angle = 0.0;
};

// Tilt of the path region for a target within arm_width of a wall.
//
// For a target near N the result is the acute angle phi > 0 of the line l
// through (0, 0) that keeps the target on its upper side at distance exactly
// arm_width. Targets near S are reflected through the shelf midline, solved
// as the N case, and reflected back, giving -phi with l anchored at (0, width).
//
// Throws GeometricInfeasibility when no acute tangent exists.
double incidence_angle(Point2 target, const Workspace& ws);

// The line l that incidence_angle is measured against.
TangentLine incidence_line(Point2 target, const Workspace& ws);

// Bounding box of the points grown by `inflate` on every side.
// Throws DomainError on an empty list or negative inflate.
Rect aabb(std::span<const Point2> points, double inflate);

}  // namespace topopush
