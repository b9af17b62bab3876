#pragma once

// Internal: JSON (de)serialisation shared by scene and plan documents.

#include <string>

#include "json.hpp"
#include "topopush/scenario.hpp"

namespace topopush::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json scene_to_json(const Scene& scene);
Scene scene_from_json(const nlohmann::json& doc, const std::string& base = "");

double number_at(const nlohmann::json& obj, const std::string& key, const std::string& path);
Point2 point_from_json(const nlohmann::json& v, const std::string& path);

}  // namespace topopush::detail
