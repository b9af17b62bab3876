#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topopush/configuration.hpp"
#include "topopush/path_region.hpp"
#include "topopush/persistence.hpp"
#include "topopush/push_sim.hpp"

namespace topopush {

enum class Outcome { Success, Failure, Timeout };
enum class Algorithm { Phia, Phis, Ooa };

const char* to_string(Outcome o);
const char* to_string(Algorithm a);
// Accepts "phia", "phis", "ooa". Throws DomainError otherwise.
Algorithm parse_algorithm(const std::string& name);

struct PlannerParams {
  double nu = 0.015;
  double h = 0.08;
  double push_speed = 0.1;
  std::optional<double> clearance;  // defaults to nu / 2
  int max_actions = 50;
  int max_depth = 6;
  double time_cap_s = 300.0;
  double ooa_radius = 0.01;

  SimParams sim() const;
};

struct PlanStep {
  double radius = 0.0;
  SweepAction action;
  std::vector<std::size_t> component;  // obstacles grouped for this push
  std::vector<std::size_t> moved;
  bool jammed = false;
  double front_stop = 0.0;
  double time = 0.0;
};

struct PushPlan {
  std::vector<PlanStep> steps;
  std::vector<Configuration> configs;  // configs.size() == steps.size() + 1
  double total_time = 0.0;
  Outcome outcome = Outcome::Failure;

  std::size_t action_count() const { return steps.size(); }
  const Configuration& final_config() const { return configs.back(); }
};

struct Crccc {
  Rect rect;                           // region frame, grown by the object radius
  std::vector<std::size_t> component;  // obstacle indices
  PathRegion region;
};

// Circumscribed rectangle of the connected component (at threshold r) of the
// path-region obstacles that lies closest to the gripper.
// Throws DomainError when the path region is empty.
Crccc crccc(const Configuration& config, double r);

// Sweep away from the corridor centreline; on a tie, away from the shelf centreline.
SweepDirection choose_direction(const Rect& rect, const PathRegion& region, const Workspace& ws);

struct PushResult {
  Configuration config;
  double time = 0.0;
  PlanStep step;
};

// One grouped push at radius r. Throws DomainError for an empty path region and
// BlockedApproach when the sweep would cross the target.
PushResult push_action(const Configuration& config, double r, const SimParams& params = {});

// Persistent radii of the obstacles currently inside the path region.
// Throws DomainError when the region is empty.
PersistentRadii region_radii(const Configuration& config, double nu, double h);

enum class NodeLabel { Open, Success, Fail };

struct PlanTreeNode {
  Configuration config;
  std::optional<std::size_t> parent;
  double radius = 0.0;     // radius of the incoming edge
  double edge_time = 0.0;  // time of the incoming edge
  double cost = 0.0;       // accumulated time from the root
  int depth = 0;
  NodeLabel label = NodeLabel::Open;
  std::optional<PlanStep> step;
};

struct PlanTree {
  std::vector<PlanTreeNode> nodes;  // nodes[0] is the root
  std::size_t failed_branches = 0;  // pushes that left the configuration unchanged or were blocked
  std::size_t pruned = 0;           // children dominated by an earlier copy of the same configuration
};

// Greedy: repeatedly push at the smallest persistent radius.
PushPlan phia(const Configuration& config0, const PlannerParams& params = {});

// Level-order tree over every persistent radius per node; returns the cheapest
// (in push time) successful root-to-leaf path.
PushPlan phis(const Configuration& config0, const PlannerParams& params = {},
              PlanTree* tree_out = nullptr);

// PHIA with the radius pinned to params.ooa_radius: no grouping.
PushPlan ooa(const Configuration& config0, const PlannerParams& params = {});

PushPlan run_planner(Algorithm algorithm, const Configuration& config0,
                     const PlannerParams& params = {});

}  // namespace topopush
