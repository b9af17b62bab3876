#include "topopush/configuration.hpp"

#include <cmath>

#include "topopush/errors.hpp"

namespace topopush {

namespace {

std::optional<std::string> outside_shelf(Point2 p, const Workspace& ws, double tol,
                                         const std::string& name) {
  const double r = ws.object_radius;
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return name + " has a non-finite coordinate";
  if (p.x < r - tol || p.x > ws.depth - r + tol || p.y < r - tol || p.y > ws.width - r + tol) {
    return name + " is not inside the shelf";
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> feasibility_violation(const Configuration& config, double tol) {
  const auto& ws = config.ws;
  const double contact = 2.0 * ws.object_radius - tol;
  const auto& obs = config.obstacles;

  if (auto v = outside_shelf(config.target, ws, tol, "target")) return v;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (auto v = outside_shelf(obs[i], ws, tol, "obstacle " + std::to_string(i))) return v;
  }
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (distance(obs[i], config.target) < contact) {
      return "obstacle " + std::to_string(i) + " overlaps the target";
    }
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      if (distance(obs[i], obs[j]) < contact) {
        return "obstacles " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
      }
    }
  }
  return std::nullopt;
}

void require_feasible(const Configuration& config) {
  config.ws.validate();
  if (auto v = feasibility_violation(config)) throw DomainError("infeasible configuration: " + *v);
}

}  // namespace topopush
