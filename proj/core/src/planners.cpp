#include "topopush/planners.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <utility>

#include "topopush/errors.hpp"

namespace topopush {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Success: return "success";
    case Outcome::Failure: return "failure";
    case Outcome::Timeout: return "timeout";
  }
  return "unknown";
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Phia: return "phia";
    case Algorithm::Phis: return "phis";
    case Algorithm::Ooa: return "ooa";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "phia") return Algorithm::Phia;
  if (name == "phis") return Algorithm::Phis;
  if (name == "ooa") return Algorithm::Ooa;
  throw DomainError("unknown algorithm '" + name + "' (expected phia, phis or ooa)");
}

SimParams PlannerParams::sim() const {
  SimParams p;
  p.push_speed = push_speed;
  p.clearance = clearance.value_or(0.5 * nu);
  return p;
}

namespace {

std::vector<Point2> gather(const std::vector<Point2>& points, const std::vector<std::size_t>& idx) {
  std::vector<Point2> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(points[i]);
  return out;
}

class Stopwatch {
 public:
  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

Crccc crccc(const Configuration& config, double r) {
  Crccc out;
  out.region = path_region(config);
  if (out.region.empty()) throw DomainError("crccc on an empty path region");

  const auto members = gather(config.obstacles, out.region.members);
  const auto partition = components_at(members, r);
  const auto& closest = closest_component(partition, members, config.gripper);

  std::vector<Point2> framed;
  framed.reserve(closest.size());
  for (std::size_t local : closest) {
    out.component.push_back(out.region.members[local]);
    framed.push_back(out.region.to_frame(members[local]));
  }
  out.rect = aabb(framed, config.ws.object_radius);
  return out;
}

SweepDirection choose_direction(const Rect& rect, const PathRegion& region, const Workspace& ws) {
  const double c_rect = rect.center().y;
  const double c_region = region.corridor.center().y;
  if (c_rect > c_region) return SweepDirection::BottomToTop;
  if (c_rect < c_region) return SweepDirection::TopToBottom;
  const double c_shelf = region.to_frame(ws.centroid()).y;
  return c_rect <= c_shelf ? SweepDirection::TopToBottom : SweepDirection::BottomToTop;
}

PushResult push_action(const Configuration& config, double r, const SimParams& params) {
  const Crccc c = crccc(config, r);
  const SweepDirection dir = choose_direction(c.rect, c.region, config.ws);
  const SweepAction action = plan_sweep(config, c.rect, c.region, dir, params);
  SweepOutcome sim = execute_sweep(config, action, params);

  PushResult out;
  out.time = sim.time;
  out.step.radius = r;
  out.step.action = action;
  out.step.component = c.component;
  out.step.moved = std::move(sim.moved);
  out.step.jammed = sim.jammed;
  out.step.front_stop = sim.front_stop;
  out.step.time = sim.time;
  out.config = std::move(sim.config_after);
  return out;
}

PersistentRadii region_radii(const Configuration& config, double nu, double h) {
  const PathRegion region = path_region(config);
  if (region.empty()) throw DomainError("persistent radii of an empty path region");
  const auto members = gather(config.obstacles, region.members);
  return persistent_radii(zero_dim_persistence(members), nu, h);
}

namespace {

PushPlan greedy(const Configuration& config0, const PlannerParams& params,
                const std::function<double(const Configuration&)>& pick_radius) {
  require_feasible(config0);
  const Stopwatch clock;
  const SimParams sim = params.sim();

  PushPlan plan;
  plan.configs.push_back(config0);
  while (true) {
    const Configuration& current = plan.configs.back();
    if (is_cleared(current)) {
      plan.outcome = Outcome::Success;
      break;
    }
    if (static_cast<int>(plan.steps.size()) >= params.max_actions ||
        clock.elapsed_s() >= params.time_cap_s) {
      plan.outcome = Outcome::Timeout;
      break;
    }
    PushResult res;
    try {
      res = push_action(current, pick_radius(current), sim);
    } catch (const BlockedApproach&) {
      plan.outcome = Outcome::Failure;
      break;
    }
    if (res.config == current) {
      plan.outcome = Outcome::Failure;
      break;
    }
    plan.total_time += res.time;
    plan.steps.push_back(std::move(res.step));
    plan.configs.push_back(std::move(res.config));
  }
  return plan;
}

std::vector<double> config_key(const Configuration& c) {
  std::vector<double> key;
  key.reserve(2 * c.obstacles.size());
  for (const auto& p : c.obstacles) {
    key.push_back(p.x);
    key.push_back(p.y);
  }
  return key;
}

}  // namespace

PushPlan phia(const Configuration& config0, const PlannerParams& params) {
  return greedy(config0, params, [&](const Configuration& x) {
    return region_radii(x, params.nu, params.h).minimum();
  });
}

PushPlan ooa(const Configuration& config0, const PlannerParams& params) {
  return greedy(config0, params, [&](const Configuration&) { return params.ooa_radius; });
}

PushPlan phis(const Configuration& config0, const PlannerParams& params, PlanTree* tree_out) {
  require_feasible(config0);
  const Stopwatch clock;
  const SimParams sim = params.sim();

  PlanTree tree;
  tree.nodes.push_back({config0, std::nullopt, 0.0, 0.0, 0.0, 0, NodeLabel::Open, std::nullopt});

  // Same configuration reached again: drop it when an earlier copy is no more
  // expensive and no deeper, since its subtree is then at least as good.
  std::map<std::vector<double>, std::vector<std::pair<double, int>>> seen;
  seen[config_key(config0)].emplace_back(0.0, 0);

  bool timed_out = false;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      if (clock.elapsed_s() >= params.time_cap_s) {
        timed_out = true;
        break;
      }
      const Configuration current = tree.nodes[idx].config;
      const double cost = tree.nodes[idx].cost;
      const int depth = tree.nodes[idx].depth;

      if (is_cleared(current)) {
        tree.nodes[idx].label = NodeLabel::Success;
        continue;
      }
      if (depth >= params.max_depth) continue;

      auto radii = region_radii(current, params.nu, params.h).radii;
      radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

      bool expanded = false;
      for (double r : radii) {
        PushResult res;
        try {
          res = push_action(current, r, sim);
        } catch (const BlockedApproach&) {
          ++tree.failed_branches;
          continue;
        }
        if (res.config == current) {
          ++tree.failed_branches;
          continue;
        }
        expanded = true;
        const double child_cost = cost + res.time;
        auto& copies = seen[config_key(res.config)];
        const bool dominated = std::any_of(copies.begin(), copies.end(), [&](const auto& c) {
          return c.first <= child_cost && c.second <= depth + 1;
        });
        if (dominated) {
          ++tree.pruned;
          continue;
        }
        copies.emplace_back(child_cost, depth + 1);
        next.push_back(tree.nodes.size());
        tree.nodes.push_back({std::move(res.config), idx, r, res.time, child_cost, depth + 1,
                              NodeLabel::Open, std::move(res.step)});
      }
      if (!expanded) tree.nodes[idx].label = NodeLabel::Fail;
    }
    if (timed_out) break;
    frontier = std::move(next);
  }

  auto radius_path = [&](std::size_t idx) {
    std::vector<double> rs;
    for (auto at = std::optional<std::size_t>{idx}; tree.nodes[*at].parent; at = tree.nodes[*at].parent) {
      rs.push_back(tree.nodes[*at].radius);
    }
    std::reverse(rs.begin(), rs.end());
    return rs;
  };

  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].label != NodeLabel::Success) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto& a = tree.nodes[i];
    const auto& b = tree.nodes[*best];
    if (std::tie(a.cost, a.depth) < std::tie(b.cost, b.depth) ||
        (a.cost == b.cost && a.depth == b.depth && radius_path(i) < radius_path(*best))) {
      best = i;
    }
  }

  PushPlan plan;
  if (timed_out) {
    plan.outcome = Outcome::Timeout;
    plan.configs.push_back(config0);
  } else if (!best) {
    plan.outcome = Outcome::Failure;
    plan.configs.push_back(config0);
  } else {
    std::vector<std::size_t> path;
    for (auto at = std::optional<std::size_t>{*best}; at; at = tree.nodes[*at].parent) {
      path.push_back(*at);
    }
    std::reverse(path.begin(), path.end());
    for (std::size_t i : path) {
      const auto& node = tree.nodes[i];
      plan.configs.push_back(node.config);
      if (node.step) {
        plan.steps.push_back(*node.step);
        plan.total_time += node.edge_time;
      }
    }
    plan.outcome = Outcome::Success;
  }

  if (tree_out) *tree_out = std::move(tree);
  return plan;
}

PushPlan run_planner(Algorithm algorithm, const Configuration& config0, const PlannerParams& params) {
  switch (algorithm) {
    case Algorithm::Phia: return phia(config0, params);
    case Algorithm::Phis: return phis(config0, params);
    case Algorithm::Ooa: return ooa(config0, params);
  }
  throw DomainError("unknown algorithm");
}

}  // namespace topopush
