#include <algorithm>
#include <cmath>
#include <string>

#include "commands.hpp"
#include "topopush/errors.hpp"
#include "topopush/format.hpp"
#include "topopush/path_region.hpp"
#include "topopush/persistence.hpp"
#include "topopush/plan_io.hpp"

namespace topopush::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;

std::string hex_color(double hue_deg) {
  // HSL with s = 0.65, l = 0.5.
  const double s = 0.65;
  const double l = 0.5;
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double hp = std::fmod(hue_deg, 360.0) / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) { r = c; g = x; }
  else if (hp < 2) { r = x; g = c; }
  else if (hp < 3) { g = c; b = x; }
  else if (hp < 4) { g = x; b = c; }
  else if (hp < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = l - 0.5 * c;
  auto channel = [&](double v) { return static_cast<int>(std::lround((v + m) * 255.0)); };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(r), channel(g), channel(b));
  return buf;
}

// Golden-angle hue steps keep neighbouring component ids visually apart.
std::string component_color(std::size_t i) { return hex_color(static_cast<double>(i) * 137.508); }

class SvgWriter {
 public:
  explicit SvgWriter(const Workspace& ws)
      : ws_(ws), scale_((kCanvas - 2 * kMargin) / std::max(ws.depth, ws.width)) {}

  std::string x(double wx) const { return format_fixed(kMargin + wx * scale_, 2); }
  std::string y(double wy) const { return format_fixed(kMargin + (ws_.width - wy) * scale_, 2); }
  std::string len(double l) const { return format_fixed(l * scale_, 2); }
  double width_px() const { return 2 * kMargin + ws_.depth * scale_; }
  double height_px() const { return 2 * kMargin + ws_.width * scale_; }

  void line(Point2 a, Point2 b, const std::string& cls, const std::string& extra = "") {
    body_ += "  <line class=\"" + cls + "\" x1=\"" + x(a.x) + "\" y1=\"" + y(a.y) + "\" x2=\"" +
             x(b.x) + "\" y2=\"" + y(b.y) + "\"" + extra + "/>\n";
  }

  void circle(Point2 c, double r, const std::string& cls, const std::string& fill,
              const std::string& extra = "") {
    body_ += "  <circle class=\"" + cls + "\" cx=\"" + x(c.x) + "\" cy=\"" + y(c.y) + "\" r=\"" +
             len(r) + "\" fill=\"" + fill + "\"" + extra + "/>\n";
  }

  void polygon(const std::vector<Point2>& pts, const std::string& cls) {
    body_ += "  <polygon class=\"" + cls + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += ' ';
      body_ += x(pts[i].x) + ',' + y(pts[i].y);
    }
    body_ += "\"/>\n";
  }

  void text(Point2 at, const std::string& s, const std::string& cls) {
    body_ += "  <text class=\"" + cls + "\" x=\"" + x(at.x) + "\" y=\"" + y(at.y) + "\">" + s + "</text>\n";
  }

  std::string finish() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(width_px(), 0) +
           "\" height=\"" + format_fixed(height_px(), 0) + "\" viewBox=\"0 0 " +
           format_fixed(width_px(), 0) + ' ' + format_fixed(height_px(), 0) + "\">\n";
    out +=
        "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
        "fill=\"#c0392b\"/></marker></defs>\n";
    out +=
        "  <style>.wall{stroke:#222;stroke-width:4}.mouth{stroke:#888;stroke-width:1;"
        "stroke-dasharray:6 4}.corridor{fill:#f3e9c6;fill-opacity:0.6;stroke:#b59b3a;"
        "stroke-width:1}.obstacle,.target{stroke:#222;stroke-width:1}.final{fill:none;"
        "stroke:#555;stroke-width:1;stroke-dasharray:3 2}.sweep{stroke:#c0392b;stroke-width:2}"
        ".gripper{fill:#2c3e50}.label{font:12px sans-serif;fill:#c0392b}</style>\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  Workspace ws_;
  double scale_;
  std::string body_;
};

void draw_scene(SvgWriter& svg, const Configuration& config, double radius) {
  const auto& ws = config.ws;
  svg.line({0, 0}, {ws.depth, 0}, "wall");
  svg.line({0, ws.width}, {ws.depth, ws.width}, "wall");
  svg.line({ws.depth, 0}, {ws.depth, ws.width}, "wall");
  svg.line({0, 0}, {0, ws.width}, "mouth");

  const PathRegion region = path_region(config);
  const Rect& c = region.corridor;
  svg.polygon({region.to_world(c.lo), region.to_world({c.hi.x, c.lo.y}), region.to_world(c.hi),
               region.to_world({c.lo.x, c.hi.y})},
              "corridor");

  if (!config.obstacles.empty()) {
    const auto partition = components_at(config.obstacles, radius);
    for (std::size_t k = 0; k < partition.components.size(); ++k) {
      for (std::size_t idx : partition.components[k]) {
        svg.circle(config.obstacles[idx], ws.object_radius, "obstacle", component_color(k),
                   " data-index=\"" + std::to_string(idx) + "\" data-component=\"" +
                       std::to_string(k) + "\"");
      }
    }
  }
  svg.circle(config.target, ws.object_radius, "target", "#f39c12");
  svg.circle(config.gripper.position, 0.25 * ws.object_radius, "gripper", "#2c3e50");
}

double default_radius(const Configuration& config, const PlannerParams& params) {
  if (is_cleared(config)) return 0.0;
  return region_radii(config, params.nu, params.h).minimum();
}

}  // namespace

std::string cmd_render(const std::string& text, const RenderOptions& opts) {
  if (is_plan_document(text)) {
    const PlanDocument plan = load_plan(text);
    const auto& config = plan.scene.config;
    SvgWriter svg(config.ws);
    draw_scene(svg, config, opts.radius.value_or(default_radius(config, opts.params)));
    for (const auto& p : plan.final_obstacles) svg.circle(p, config.ws.object_radius, "final", "none");
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
      const auto& s = plan.steps[i];
      const Point2 from = sweep_start_point(s.action);
      const Point2 to = sweep_end_point(s.action, s.front_stop);
      svg.line(from, to, "sweep", " marker-end=\"url(#arrow)\"");
      svg.text(from, std::to_string(i + 1), "label");
    }
    return svg.finish();
  }
  const Scene scene = load_scene(text);
  SvgWriter svg(scene.ws());
  draw_scene(svg, scene.config, opts.radius.value_or(default_radius(scene.config, opts.params)));
  return svg.finish();
}

}  // namespace topopush::cli
