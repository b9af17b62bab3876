#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "topopush/geometry.hpp"

namespace topopush {

// Zero-dimensional persistence of a finite point cloud under the Rips
// filtration. Every class is born at 0; `deaths` holds the finite death
// values (one per merge) in ascending order, and exactly one class never dies.
//
// Filtration values are pairwise distances: two points are joined once the
// threshold reaches their distance.
struct PersistenceDiagram {
  std::vector<double> deaths;
  int essential_count = 1;

  std::size_t point_count() const { return deaths.size() + static_cast<std::size_t>(essential_count); }
};

struct ComponentPartition {
  double radius = 0.0;
  // Each component lists point indices ascending; components are ordered by
  // their smallest index.
  std::vector<std::vector<std::size_t>> components;
};

struct PersistentRadii {
  double nu = 0.0;
  double h = 0.0;
  std::vector<double> radii;  // ascending, nonempty, every entry >= h

  double minimum() const { return radii.front(); }
};

// Throws DomainError on an empty input or on two coincident points (closer than 1e-12).
PersistenceDiagram zero_dim_persistence(std::span<const Point2> points);

// Components of the Rips graph at threshold r (edges with length <= r).
ComponentPartition components_at(std::span<const Point2> points, double r);

// Death values d >= h after which the component count stays constant on
// (d, d + nu]. When no death qualifies, returns the single radius
// max(h, largest death), at which every point is one group.
PersistentRadii persistent_radii(const PersistenceDiagram& diagram, double nu, double h);

// Smallest radius worth grouping at: a gripper (plus 10%) must fit between
// two objects for them to be handled separately.
double gripper_clearance_h(const Workspace& ws);

// The component whose nearest member is closest to the gripper. Ties go to the
// component holding the smaller member index.
const std::vector<std::size_t>& closest_component(const ComponentPartition& partition,
                                                  std::span<const Point2> points,
                                                  const Pose2& gripper);

// "birth,death" rows sorted by death; the essential class is written with death "inf".
std::string diagram_to_csv(const PersistenceDiagram& diagram);

}  // namespace topopush
