#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "topopush/planners.hpp"
#include "topopush/scenario.hpp"

namespace topopush::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPlanningFailed = 2;

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "TOPOPUSH_OUT_DIR";

std::filesystem::path default_out_dir();

struct GenOptions {
  SceneFamily family = SceneFamily::RandomDeep;
  int count = 1;
  std::uint64_t seed = 0;  // scenes use seed, seed + 1, ...
  int obstacles = kDefaultDeepObstacles;
  Workspace ws;
  std::filesystem::path out_dir;
};

// Writes one <id>.json per scene and returns the paths in seed order.
std::vector<std::filesystem::path> cmd_gen(const GenOptions& opts);

Scene read_scene_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct SolveResult {
  int exit_code = kExitOk;
  std::string plan_json;
  PushPlan plan;
  double planning_wall_time_s = 0.0;
};

SolveResult cmd_solve(const Scene& scene, Algorithm algorithm, const PlannerParams& params,
                      bool with_timing = false);

struct RunRecord {
  std::string scenario;
  std::string algorithm;
  std::string outcome;  // success | failure | timeout | error
  std::size_t action_count = 0;
  double total_time_s = 0.0;
  double planning_wall_time_s = 0.0;
};

struct BatchOptions {
  std::filesystem::path scene_dir;
  std::vector<Algorithm> algorithms{Algorithm::Phia, Algorithm::Phis, Algorithm::Ooa};
  PlannerParams params;
  unsigned jobs = 1;
};

// One record per (scene, algorithm), sorted by scene id then by the order of
// opts.algorithms. Scenes that fail to load are recorded with outcome "error".
std::vector<RunRecord> run_batch(const BatchOptions& opts);

// Rows followed by a "# summary" block of per-algorithm success rate and means
// over successful runs. The wall-time column is only emitted when requested.
std::string batch_csv(const std::vector<RunRecord>& records, bool with_timing = false);

struct RenderOptions {
  std::optional<double> radius;  // component colouring threshold
  PlannerParams params;           // used to pick the default radius
};

// SVG of a scene or of a plan document (text is either JSON kind).
std::string cmd_render(const std::string& scene_or_plan_json, const RenderOptions& opts = {});

// Persistence diagram of the path-region obstacles; nullopt when the region is empty.
std::optional<std::string> cmd_diagram(const Scene& scene);

}  // namespace topopush::cli
