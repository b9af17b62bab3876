#include "topopush/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "scene_json.hpp"
#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"
#include "topopush/planners.hpp"

namespace topopush {

const char* to_string(SceneFamily f) {
  switch (f) {
    case SceneFamily::Manual: return "manual";
    case SceneFamily::Simple4: return "simple4";
    case SceneFamily::RandomDeep: return "random-deep";
  }
  return "manual";
}

SceneFamily parse_family(std::string_view name) {
  if (name == "manual") return SceneFamily::Manual;
  if (name == "simple4" || name == "simple") return SceneFamily::Simple4;
  if (name == "random-deep") return SceneFamily::RandomDeep;
  throw DomainError("unknown scene family '" + std::string(name) + "'");
}

Pose2 home_pose(const Workspace& ws) { return {{0.0, 0.5 * ws.width}, 0.0}; }

bool clearable_in_principle(const Configuration& config, const SimParams& params) {
  const PathRegion region = path_region(config);
  const double rho = config.ws.object_radius;
  for (std::size_t idx : region.members) {
    const Point2 c = region.to_frame(config.obstacles[idx]);
    const Rect rect{{c.x - rho, c.y - rho}, {c.x + rho, c.y + rho}};
    const auto dir = choose_direction(rect, region, config.ws);
    try {
      const auto action = plan_sweep(config, rect, region, dir, params);
      if (execute_sweep(config, action, params).jammed) return false;
    } catch (const BlockedApproach&) {
      return false;
    }
  }
  return true;
}

namespace {

// Portable uniform draw: the standard distributions are implementation-defined.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

 private:
  std::mt19937_64 engine_;
};

std::string scene_id(SceneFamily family, std::uint64_t seed) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s-%04llu", to_string(family),
                static_cast<unsigned long long>(seed));
  return buf;
}

bool clear_of(Point2 p, const Configuration& config) {
  const double contact = 2.0 * config.ws.object_radius;
  if (distance(p, config.target) < contact) return false;
  for (const auto& o : config.obstacles) {
    if (distance(p, o) < contact) return false;
  }
  return true;
}

// Draws `count` non-overlapping obstacles inside `box`; false if the box is too crowded.
bool place_obstacles(Sampler& rng, Configuration& config, int count, const Rect& box) {
  for (int i = 0; i < count; ++i) {
    bool placed = false;
    for (int tries = 0; tries < 200 && !placed; ++tries) {
      const Point2 p{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
      if (clear_of(p, config)) {
        config.obstacles.push_back(p);
        placed = true;
      }
    }
    if (!placed) return false;
  }
  return true;
}

}  // namespace

Scene generate_simple(std::uint64_t seed, const Workspace& ws) {
  ws.validate();
  const double r = ws.object_radius;
  const double band = ws.arm_width + r;
  if (!(ws.width - 2.0 * band > 0.0)) {
    throw GenerationError("shelf too narrow for obstacles far from both walls");
  }

  Sampler rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Configuration config;
    config.ws = ws;
    config.gripper = home_pose(ws);
    // Strict bounds: stay a hair inside the band so the wall distance exceeds it.
    const double y_lo = band + 1e-6;
    const double y_hi = ws.width - band - 1e-6;
    config.target = {rng.uniform(std::max(0.5 * ws.depth + 1e-6, r), ws.depth - r),
                     rng.uniform(y_lo, y_hi)};
    if (!place_obstacles(rng, config, 4, Rect{{r, y_lo}, {ws.depth - r, y_hi}})) continue;
    if (!is_feasible(config) || !clearable_in_principle(config)) continue;
    return {scene_id(SceneFamily::Simple4, seed), SceneFamily::Simple4, seed, std::move(config)};
  }
  throw GenerationError("simple scene sampling failed after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts");
}

Scene generate_random_deep(std::uint64_t seed, int n_obstacles, const Workspace& ws) {
  if (n_obstacles < 1) throw DomainError("random-deep scenes need at least one obstacle");
  ws.validate();
  const double r = ws.object_radius;

  Sampler rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Configuration config;
    config.ws = ws;
    config.gripper = home_pose(ws);
    config.target = {rng.uniform(std::max(0.75 * ws.depth + 1e-6, r), ws.depth - r),
                     rng.uniform(r, ws.width - r)};
    const Rect box{{r, r}, {config.target.x - r, ws.width - r}};
    if (box.lo.x >= box.hi.x) continue;
    if (!place_obstacles(rng, config, n_obstacles, box)) continue;
    if (!is_feasible(config)) continue;
    if (is_cleared(config) || !clearable_in_principle(config)) continue;
    return {scene_id(SceneFamily::RandomDeep, seed), SceneFamily::RandomDeep, seed,
            std::move(config)};
  }
  throw GenerationError("random-deep scene sampling failed after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts");
}

namespace detail {

double number_at(const nlohmann::json& obj, const std::string& key, const std::string& path) {
  const std::string here = path + "/" + key;
  if (!obj.is_object() || !obj.contains(key)) throw LoadError(here, "missing field");
  const auto& v = obj.at(key);
  if (!v.is_number()) throw LoadError(here, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw LoadError(here, "non-finite number");
  return d;
}

Point2 point_from_json(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw LoadError(path, "expected [x, y]");
  }
  const Point2 p{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw LoadError(path, "non-finite coordinate");
  return p;
}

ordered_json scene_to_json(const Scene& scene) {
  const auto& ws = scene.ws();
  ordered_json doc;
  doc["version"] = 1;
  doc["id"] = scene.id;
  doc["family"] = to_string(scene.family);
  doc["seed"] = scene.seed;
  doc["workspace"] = {{"depth", ws.depth},
                      {"width", ws.width},
                      {"arm_width", ws.arm_width},
                      {"gripper_width", ws.gripper_width},
                      {"object_radius", ws.object_radius}};
  auto obstacles = ordered_json::array();
  for (const auto& p : scene.config.obstacles) obstacles.push_back({p.x, p.y});
  doc["obstacles"] = std::move(obstacles);
  doc["target"] = {scene.config.target.x, scene.config.target.y};
  doc["gripper"] = {{"x", scene.config.gripper.position.x},
                    {"y", scene.config.gripper.position.y},
                    {"heading", scene.config.gripper.heading}};
  return doc;
}

Scene scene_from_json(const nlohmann::json& doc, const std::string& base) {
  if (!doc.is_object()) throw LoadError(base.empty() ? "/" : base, "expected an object");

  const double version = number_at(doc, "version", base);
  if (version != 1) throw LoadError(base + "/version", "unsupported schema version");

  Scene scene;
  if (!doc.contains("id") || !doc["id"].is_string()) throw LoadError(base + "/id", "expected a string");
  scene.id = doc["id"].get<std::string>();
  if (!doc.contains("family") || !doc["family"].is_string()) {
    throw LoadError(base + "/family", "expected a string");
  }
  try {
    scene.family = parse_family(doc["family"].get<std::string>());
  } catch (const DomainError& e) {
    throw LoadError(base + "/family", e.what());
  }
  const bool seed_ok = doc.contains("seed") && doc["seed"].is_number_integer() &&
                       (doc["seed"].is_number_unsigned() || doc["seed"].get<long long>() >= 0);
  if (!seed_ok) throw LoadError(base + "/seed", "expected a non-negative integer");
  scene.seed = doc["seed"].get<std::uint64_t>();

  const std::string wpath = base + "/workspace";
  if (!doc.contains("workspace")) throw LoadError(wpath, "missing field");
  const auto& w = doc["workspace"];
  auto& ws = scene.config.ws;
  ws.depth = number_at(w, "depth", wpath);
  ws.width = number_at(w, "width", wpath);
  ws.arm_width = number_at(w, "arm_width", wpath);
  ws.gripper_width = number_at(w, "gripper_width", wpath);
  ws.object_radius = number_at(w, "object_radius", wpath);
  try {
    ws.validate();
  } catch (const DomainError& e) {
    throw LoadError(wpath, e.what());
  }

  if (!doc.contains("obstacles") || !doc["obstacles"].is_array()) {
    throw LoadError(base + "/obstacles", "expected an array");
  }
  const auto& obs = doc["obstacles"];
  for (std::size_t i = 0; i < obs.size(); ++i) {
    scene.config.obstacles.push_back(point_from_json(obs[i], base + "/obstacles/" + std::to_string(i)));
  }
  if (!doc.contains("target")) throw LoadError(base + "/target", "missing field");
  scene.config.target = point_from_json(doc["target"], base + "/target");

  const std::string gpath = base + "/gripper";
  if (!doc.contains("gripper")) throw LoadError(gpath, "missing field");
  const auto& g = doc["gripper"];
  scene.config.gripper.position = {number_at(g, "x", gpath), number_at(g, "y", gpath)};
  scene.config.gripper.heading = normalize_angle(number_at(g, "heading", gpath));

  if (auto v = feasibility_violation(scene.config)) throw LoadError(base + "/obstacles", *v);
  return scene;
}

}  // namespace detail

Scene load_scene(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("", std::string("malformed JSON: ") + e.what());
  }
  return detail::scene_from_json(doc);
}

std::string save_scene(const Scene& scene) { return detail::scene_to_json(scene).dump(2) + "\n"; }

Workspace load_workspace(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LoadError("/", "expected an object");
  Workspace ws;
  auto read = [&](const char* key, double& field) {
    if (doc.contains(key)) field = detail::number_at(doc, key, "");
  };
  read("depth", ws.depth);
  read("width", ws.width);
  read("arm_width", ws.arm_width);
  read("gripper_width", ws.gripper_width);
  read("object_radius", ws.object_radius);
  try {
    ws.validate();
  } catch (const DomainError& e) {
    throw LoadError("/", e.what());
  }
  return ws;
}

}  // namespace topopush
