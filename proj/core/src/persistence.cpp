#include "topopush/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "topopush/errors.hpp"
#include "topopush/format.hpp"
#include "topopush/union_find.hpp"

namespace topopush {

namespace {

struct Edge {
  double length;
  std::size_t a;
  std::size_t b;
};

std::vector<Edge> sorted_edges(std::span<const Point2> points) {
  std::vector<Edge> edges;
  edges.reserve(points.size() * (points.size() - 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      edges.push_back({distance(points[i], points[j]), i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
    return std::tie(l.length, l.a, l.b) < std::tie(r.length, r.a, r.b);
  });
  return edges;
}

}  // namespace

PersistenceDiagram zero_dim_persistence(std::span<const Point2> points) {
  if (points.empty()) throw DomainError("persistence of an empty point set");

  const auto edges = sorted_edges(points);
  if (!edges.empty() && edges.front().length <= 1e-12) {
    throw DomainError("coincident points " + std::to_string(edges.front().a) + " and " +
                      std::to_string(edges.front().b) + " make the filtration degenerate");
  }

  PersistenceDiagram diagram;
  diagram.deaths.reserve(points.size() - 1);
  UnionFind sets(points.size());
  for (const auto& e : edges) {
    if (sets.unite(e.a, e.b)) {
      diagram.deaths.push_back(e.length);
      if (sets.num_sets() == 1) break;
    }
  }
  return diagram;
}

ComponentPartition components_at(std::span<const Point2> points, double r) {
  if (!(r >= 0.0)) throw DomainError("component radius must be non-negative");

  UnionFind sets(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (distance(points[i], points[j]) <= r) sets.unite(i, j);
    }
  }

  ComponentPartition partition{r, {}};
  std::vector<std::size_t> slot(points.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == std::numeric_limits<std::size_t>::max()) {
      slot[root] = partition.components.size();
      partition.components.emplace_back();
    }
    partition.components[slot[root]].push_back(i);
  }
  return partition;
}

PersistentRadii persistent_radii(const PersistenceDiagram& diagram, double nu, double h) {
  if (!(nu > 0.0)) throw DomainError("nu must be positive");
  if (!(h >= 0.0)) throw DomainError("h must be non-negative");

  PersistentRadii out{nu, h, {}};
  const auto& deaths = diagram.deaths;
  for (std::size_t i = 0; i < deaths.size(); ++i) {
    const double d = deaths[i];
    if (d < h) continue;
    // deaths is sorted, so the first larger value decides whether (d, d + nu] is empty.
    auto next = std::upper_bound(deaths.begin(), deaths.end(), d);
    if (next == deaths.end() || *next > d + nu) out.radii.push_back(d);
  }
  if (out.radii.empty()) {
    out.radii.push_back(deaths.empty() ? h : std::max(h, deaths.back()));
  }
  return out;
}

double gripper_clearance_h(const Workspace& ws) {
  return 1.1 * ws.gripper_width + 2.0 * ws.object_radius;
}

const std::vector<std::size_t>& closest_component(const ComponentPartition& partition,
                                                  std::span<const Point2> points,
                                                  const Pose2& gripper) {
  if (partition.components.empty()) throw DomainError("closest component of an empty partition");

  const std::vector<std::size_t>* best = nullptr;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto& comp : partition.components) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t idx : comp) d = std::min(d, distance(points[idx], gripper.position));
    if (best == nullptr || d < best_dist || (d == best_dist && comp.front() < best->front())) {
      best = &comp;
      best_dist = d;
    }
  }
  return *best;
}

std::string diagram_to_csv(const PersistenceDiagram& diagram) {
  std::string out = "birth,death\n";
  for (double d : diagram.deaths) {
    out += "0,";
    out += format_double(d);
    out += '\n';
  }
  for (int i = 0; i < diagram.essential_count; ++i) out += "0,inf\n";
  return out;
}

}  // namespace topopush
