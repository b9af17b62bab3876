#include "topopush/plan_io.hpp"

#include "scene_json.hpp"
#include "topopush/errors.hpp"

namespace topopush {

using detail::ordered_json;

namespace {

ordered_json point_json(Point2 p) { return ordered_json::array({p.x, p.y}); }

ordered_json step_json(const PlanStep& s) {
  ordered_json j;
  j["radius"] = s.radius;
  j["frame_angle"] = s.action.frame_angle;
  j["direction"] = to_string(s.action.direction);
  j["swath"] = {s.action.swath.lo, s.action.swath.hi};
  j["front_start"] = s.action.front_start;
  j["front_end"] = s.action.front_end;
  j["front_stop"] = s.front_stop;
  j["start_point"] = point_json(sweep_start_point(s.action));
  j["stop_point"] = point_json(sweep_end_point(s.action, s.front_stop));
  j["component"] = s.component;
  j["moved"] = s.moved;
  j["jammed"] = s.jammed;
  j["time"] = s.time;
  return j;
}

Outcome parse_outcome(const std::string& s) {
  if (s == "success") return Outcome::Success;
  if (s == "failure") return Outcome::Failure;
  if (s == "timeout") return Outcome::Timeout;
  throw LoadError("/outcome", "unknown outcome '" + s + "'");
}

std::vector<std::size_t> index_list(const nlohmann::json& v, const std::string& path) {
  if (!v.is_array()) throw LoadError(path, "expected an array");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!e.is_number_unsigned()) throw LoadError(path, "expected obstacle indices");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::string plan_to_json(const Scene& scene, Algorithm algorithm, const PushPlan& plan,
                         const PlannerParams& params, std::optional<double> planning_wall_time_s) {
  ordered_json doc;
  doc["scenario"] = scene.id;
  doc["algorithm"] = to_string(algorithm);
  doc["outcome"] = to_string(plan.outcome);
  doc["action_count"] = plan.action_count();
  doc["total_time"] = plan.total_time;
  if (planning_wall_time_s) doc["planning_wall_time"] = *planning_wall_time_s;
  doc["params"] = {{"nu", params.nu},
                   {"h", params.h},
                   {"push_speed", params.push_speed},
                   {"clearance", params.sim().clearance},
                   {"max_actions", params.max_actions},
                   {"max_depth", params.max_depth},
                   {"ooa_radius", params.ooa_radius}};
  auto actions = ordered_json::array();
  for (const auto& s : plan.steps) actions.push_back(step_json(s));
  doc["actions"] = std::move(actions);
  auto final_obs = ordered_json::array();
  for (const auto& p : plan.final_config().obstacles) final_obs.push_back(point_json(p));
  doc["final_obstacles"] = std::move(final_obs);
  doc["scene"] = detail::scene_to_json(scene);
  return doc.dump(2) + "\n";
}

bool is_plan_document(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("actions") && doc.contains("scene");
}

PlanDocument load_plan(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw LoadError("", "malformed JSON");
  if (!doc.is_object() || !doc.contains("scene")) throw LoadError("/scene", "missing field");

  PlanDocument out;
  out.scene = detail::scene_from_json(doc["scene"], "/scene");
  if (!doc.contains("algorithm") || !doc["algorithm"].is_string()) {
    throw LoadError("/algorithm", "expected a string");
  }
  out.algorithm = doc["algorithm"].get<std::string>();
  if (!doc.contains("outcome") || !doc["outcome"].is_string()) {
    throw LoadError("/outcome", "expected a string");
  }
  out.outcome = parse_outcome(doc["outcome"].get<std::string>());
  out.total_time = detail::number_at(doc, "total_time", "");

  if (!doc.contains("actions") || !doc["actions"].is_array()) {
    throw LoadError("/actions", "expected an array");
  }
  for (std::size_t i = 0; i < doc["actions"].size(); ++i) {
    const auto& a = doc["actions"][i];
    const std::string path = "/actions/" + std::to_string(i);
    PlanStep s;
    s.radius = detail::number_at(a, "radius", path);
    s.action.frame_angle = detail::number_at(a, "frame_angle", path);
    if (!a.contains("direction") || !a["direction"].is_string()) {
      throw LoadError(path + "/direction", "expected a string");
    }
    const auto dir = a["direction"].get<std::string>();
    if (dir == "bottom_to_top") {
      s.action.direction = SweepDirection::BottomToTop;
    } else if (dir == "top_to_bottom") {
      s.action.direction = SweepDirection::TopToBottom;
    } else {
      throw LoadError(path + "/direction", "unknown direction '" + dir + "'");
    }
    if (!a.contains("swath")) throw LoadError(path + "/swath", "missing field");
    const Point2 swath = detail::point_from_json(a["swath"], path + "/swath");
    s.action.swath = {swath.x, swath.y};
    s.action.front_start = detail::number_at(a, "front_start", path);
    s.action.front_end = detail::number_at(a, "front_end", path);
    s.front_stop = detail::number_at(a, "front_stop", path);
    s.component = index_list(a.value("component", nlohmann::json::array()), path + "/component");
    s.moved = index_list(a.value("moved", nlohmann::json::array()), path + "/moved");
    s.jammed = a.value("jammed", false);
    s.time = detail::number_at(a, "time", path);
    out.steps.push_back(std::move(s));
  }

  if (doc.contains("final_obstacles")) {
    const auto& fo = doc["final_obstacles"];
    if (!fo.is_array()) throw LoadError("/final_obstacles", "expected an array");
    for (std::size_t i = 0; i < fo.size(); ++i) {
      out.final_obstacles.push_back(
          detail::point_from_json(fo[i], "/final_obstacles/" + std::to_string(i)));
    }
  }
  return out;
}

}  // namespace topopush
