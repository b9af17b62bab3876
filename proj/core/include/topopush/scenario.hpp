#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "topopush/configuration.hpp"
#include "topopush/push_sim.hpp"

namespace topopush {

enum class SceneFamily { Manual, Simple4, RandomDeep };

const char* to_string(SceneFamily f);
// "manual", "simple4" or "random-deep"; throws DomainError otherwise.
SceneFamily parse_family(std::string_view name);

struct Scene {
  std::string id;
  SceneFamily family = SceneFamily::Manual;
  std::uint64_t seed = 0;
  Configuration config;

  const Workspace& ws() const { return config.ws; }

  friend bool operator==(const Scene&, const Scene&) = default;
};

inline constexpr int kMaxGenerationAttempts = 10000;
inline constexpr int kDefaultDeepObstacles = 10;

// Gripper rest pose used by the generators: shelf mouth, centred in y.
Pose2 home_pose(const Workspace& ws);

// True when every obstacle currently in the path region, pushed on its own in
// the direction the planners would choose for it, leaves the corridor without
// jamming or crossing the target.
bool clearable_in_principle(const Configuration& config, const SimParams& params = {});

// Four obstacles, each farther than arm_width + radius from both walls; target
// in the rear half of the shelf. Throws GenerationError if sampling fails.
Scene generate_simple(std::uint64_t seed, const Workspace& ws = {});

// Target in the rear quarter, obstacles in front of it, at least one of them
// blocking the path region. Throws GenerationError if sampling fails.
Scene generate_random_deep(std::uint64_t seed, int n_obstacles = kDefaultDeepObstacles,
                           const Workspace& ws = {});

// JSON scene document, schema version 1. Throws LoadError naming the offending
// field (e.g. "/workspace/depth", "/obstacles").
Scene load_scene(std::string_view text);
std::string save_scene(const Scene& scene);

// Bare workspace object {depth, width, arm_width, gripper_width, object_radius};
// missing keys keep their defaults.
Workspace load_workspace(std::string_view text);

}  // namespace topopush
