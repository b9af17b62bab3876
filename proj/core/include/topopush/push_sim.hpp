#pragma once

#include <cstddef>
#include <vector>

#include "topopush/configuration.hpp"
#include "topopush/geometry.hpp"
#include "topopush/path_region.hpp"

namespace topopush {

enum class SweepDirection { BottomToTop, TopToBottom };

const char* to_string(SweepDirection d);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return v >= lo && v <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SimParams {
  double push_speed = 0.1;    // m/s
  double clearance = 0.0075;  // how far past the corridor edge the arm front travels
  double start_gap = 1e-3;    // gap between arm front and the component at the start
};

// One straight push of the arm front across the corridor, in the region frame.
// The front is a segment spanning `swath` in x that travels in y from
// front_start to front_end (increasing y for BottomToTop).
struct SweepAction {
  double frame_angle = 0.0;
  Interval swath;
  SweepDirection direction = SweepDirection::BottomToTop;
  double front_start = 0.0;
  double front_end = 0.0;

  friend bool operator==(const SweepAction&, const SweepAction&) = default;
};

struct SweepOutcome {
  Configuration config_after;
  double time = 0.0;                // seconds
  std::vector<std::size_t> moved;   // obstacle indices, ascending
  bool jammed = false;
  double front_stop = 0.0;          // frame y where the front halted
};

// Sweep that carries the discs bounded by `rect` (region frame, already grown
// by the object radius) out of the corridor on the side given by `direction`.
// Throws BlockedApproach if the swept area would cut through the target disc.
SweepAction plan_sweep(const Configuration& config, const Rect& rect, const PathRegion& region,
                       SweepDirection direction, const SimParams& params = {});

// Quasi-static 1-D compaction along the push axis. Obstacles whose centre is
// in the swath ahead of the front are carried along at one radius ahead of it;
// every moved disc pushes the discs it would overlap to contact distance.
// Discs stop at the shelf walls and at the target. If that halts the chain the
// front stops short and the outcome is marked jammed.
SweepOutcome execute_sweep(const Configuration& config, const SweepAction& action,
                           const SimParams& params = {});

// World-frame point where the arm front starts: swath midpoint on front_start.
Point2 sweep_start_point(const SweepAction& action);
Point2 sweep_end_point(const SweepAction& action, double front);

double approach_distance(const Pose2& gripper, const SweepAction& action);

}  // namespace topopush
