#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topopush/planners.hpp"
#include "topopush/scenario.hpp"

namespace topopush {

// Plan export. Wall time is only written when given, so documents are
// byte-identical across runs by default.
std::string plan_to_json(const Scene& scene, Algorithm algorithm, const PushPlan& plan,
                         const PlannerParams& params,
                         std::optional<double> planning_wall_time_s = std::nullopt);

struct PlanDocument {
  Scene scene;
  std::string algorithm;
  Outcome outcome = Outcome::Failure;
  double total_time = 0.0;
  std::vector<PlanStep> steps;
  std::vector<Point2> final_obstacles;
};

// Reads a document written by plan_to_json. Throws LoadError.
PlanDocument load_plan(std::string_view text);

// True if the text looks like a plan document rather than a bare scene.
bool is_plan_document(std::string_view text);

}  // namespace topopush
