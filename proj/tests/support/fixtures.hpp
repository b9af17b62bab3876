#pragma once

// Independent reference implementations and scene builders shared by the unit
// and acceptance tests. Nothing here calls into the library's union-find,
// component or persistence code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "topopush/configuration.hpp"
#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"
#include "topopush/planners.hpp"

namespace topopush::oracle {

inline std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t n, double lo = 0.0,
                                         double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Point2> pts;
  while (pts.size() < n) {
    const Point2 p{u(rng), u(rng)};
    const bool dup = std::any_of(pts.begin(), pts.end(), [&](Point2 q) {
      return std::hypot(p.x - q.x, p.y - q.y) < 1e-9;
    });
    if (!dup) pts.push_back(p);
  }
  return pts;
}

// Kruskal over the complete graph with a relabelling array in place of a
// disjoint-set forest: O(n^3) in the worst case.
inline std::vector<double> brute_mst_deaths(const std::vector<Point2>& pts) {
  struct Edge {
    double w;
    std::size_t a, b;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      edges.push_back({std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y), i, j});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& l, const Edge& r) { return std::tie(l.w, l.a, l.b) < std::tie(r.w, r.a, r.b); });
  std::vector<std::size_t> label(pts.size());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  std::vector<double> deaths;
  for (const Edge& e : edges) {
    const std::size_t la = label[e.a];
    const std::size_t lb = label[e.b];
    if (la == lb) continue;
    for (auto& l : label) {
      if (l == lb) l = la;
    }
    deaths.push_back(e.w);
  }
  return deaths;
}

// Components of the graph with an edge wherever two points are within r, by
// repeated flood fill. Each component ascending; components ordered by their
// smallest index.
inline std::vector<std::vector<std::size_t>> brute_components(const std::vector<Point2>& pts,
                                                               double r) {
  const std::size_t n = pts.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) <= r) {
          comp[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Tangent angle by bisection on the signed line distance, with a near-south
// target handled by reflecting the shelf.
inline double oracle_phi(Point2 t, const Workspace& ws) {
  const bool south = t.y < ws.width - t.y;
  const double y = south ? ws.width - t.y : t.y;
  double lo = 0.0, hi = 1.5707963267948966;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (y * std::cos(mid) - t.x * std::sin(mid) > ws.arm_width ? lo : hi) = mid;
  }
  const double phi = 0.5 * (lo + hi);
  return south ? -phi : phi;
}

// Corridor membership recomputed from scratch: rotate every position by -phi
// with an explicit matrix, then apply the axis-aligned test.
inline std::vector<std::size_t> oracle_members(const Configuration& c) {
  const Workspace& ws = c.ws;
  const double w = ws.arm_width;
  double phi = 0.0;
  if (std::min(c.target.y, ws.width - c.target.y) <= w) phi = oracle_phi(c.target, ws);
  const double cs = std::cos(-phi), sn = std::sin(-phi);
  auto rot = [&](Point2 p) { return Point2{cs * p.x - sn * p.y, sn * p.x + cs * p.y}; };
  const Point2 t = rot(c.target);
  const Point2 g = rot(c.gripper.position);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.obstacles.size(); ++i) {
    const Point2 o = rot(c.obstacles[i]);
    if (o.y >= t.y - w && o.y <= t.y + w && o.x >= g.x && o.x < t.x) out.push_back(i);
  }
  return out;
}

inline Configuration make_config(std::vector<Point2> obstacles, Point2 target,
                                 Pose2 gripper = {{0.0, 0.3}, 0.0}, Workspace ws = {}) {
  return Configuration{std::move(obstacles), target, gripper, ws};
}

// Row of four obstacles on the target's line of approach, spaced so that a
// single persistent radius joins all four. Seeds vary spacing and position.
inline Configuration clustered_row_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double ty = 0.26 + 0.08 * u(rng);
  const double tx = 0.50 + 0.06 * u(rng);
  const double x0 = 0.10 + 0.03 * u(rng);
  std::vector<Point2> obs;
  double x = x0;
  for (int k = 0; k < 4; ++k) {
    obs.push_back({x, ty + 0.004 * (u(rng) - 0.5)});
    x += 0.085 + 0.01 * u(rng);
  }
  return make_config(std::move(obs), {tx, ty});
}

// Three to five obstacles scattered around the approach line, so the
// persistence diagram usually offers several radii to choose from.
inline Configuration branching_scene(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double ty = 0.26 + 0.08 * u(rng);
  const Point2 t{0.52 + 0.05 * u(rng), ty};
  const std::size_t n = 3 + static_cast<std::size_t>(u(rng) * 3);
  std::vector<Point2> obs;
  for (int tries = 0; obs.size() < n && tries < 1000; ++tries) {
    const Point2 p{0.06 + 0.38 * u(rng), ty - 0.1 + 0.2 * u(rng)};
    auto clear = [&](Point2 q) { return std::hypot(p.x - q.x, p.y - q.y) >= 0.065; };
    if (clear(t) && std::all_of(obs.begin(), obs.end(), clear)) obs.push_back(p);
  }
  return make_config(std::move(obs), t);
}

// Four obstacles on the approach line with three distinct persistent radii.
inline Configuration three_radius_scene(double d1 = 0.09, double d2 = 0.11, double d3 = 0.13) {
  const double y = 0.3;
  std::vector<Point2> obs{{0.08, y}, {0.08 + d1, y}, {0.08 + d1 + d2, y}, {0.08 + d1 + d2 + d3, y}};
  const double tx = obs.back().x + 0.1;
  return make_config(std::move(obs), {tx, y});
}

struct ExhaustiveResult {
  std::optional<double> best_time;
  int max_depth_reached = 0;
  std::size_t max_branching = 0;
  bool open_at_limit = false;  // some branch was still unresolved at the depth limit
  std::size_t leaves = 0;
};

// Enumerates every sequence of persistent radii up to `depth` pushes,
// accumulating times root to leaf in the same order a plan would.
inline void exhaustive_search(const Configuration& x, const PlannerParams& params, int depth,
                              int level, double cost, ExhaustiveResult& out) {
  out.max_depth_reached = std::max(out.max_depth_reached, level);
  if (is_cleared(x)) {
    ++out.leaves;
    if (!out.best_time || cost < *out.best_time) out.best_time = cost;
    return;
  }
  if (level == depth) {
    out.open_at_limit = true;
    return;
  }
  std::vector<double> radii = region_radii(x, params.nu, params.h).radii;
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  out.max_branching = std::max(out.max_branching, radii.size());
  for (double r : radii) {
    PushResult res;
    try {
      res = push_action(x, r, params.sim());
    } catch (const BlockedApproach&) {
      ++out.leaves;
      continue;
    }
    if (res.config == x) {
      ++out.leaves;
      continue;
    }
    exhaustive_search(res.config, params, depth, level + 1, cost + res.time, out);
  }
}

inline ExhaustiveResult exhaustive(const Configuration& x, const PlannerParams& params, int depth) {
  ExhaustiveResult out;
  exhaustive_search(x, params, depth, 0, 0.0, out);
  return out;
}

// Every configuration in the plan is feasible and every unjammed push leaves
// its moved obstacles outside the corridor it was planned in.
inline bool plan_is_safe(const PushPlan& plan, std::string* why = nullptr) {
  for (std::size_t i = 0; i < plan.configs.size(); ++i) {
    if (auto v = feasibility_violation(plan.configs[i])) {
      if (why) *why = "config " + std::to_string(i) + ": " + *v;
      return false;
    }
  }
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const auto& step = plan.steps[i];
    if (step.jammed) continue;
    const PathRegion region = path_region(plan.configs[i]);
    for (std::size_t j : step.moved) {
      const Point2 p = region.to_frame(plan.configs[i + 1].obstacles[j]);
      const bool outside = p.y < region.corridor.lo.y || p.y > region.corridor.hi.y;
      if (!outside) {
        if (why) *why = "step " + std::to_string(i) + ": obstacle " + std::to_string(j) + " still inside";
        return false;
      }
    }
  }
  return true;
}

}  // namespace topopush::oracle
