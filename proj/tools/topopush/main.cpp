#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "topopush/errors.hpp"
#include "topopush/persistence.hpp"

namespace fs = std::filesystem;
using namespace topopush;

namespace {

struct CommonFlags {
  double nu = 0.015;
  double h = 0.08;
  bool h_from_workspace = false;
  double time_cap_s = 300.0;
  double push_speed = 0.1;
  int max_actions = 50;
  int max_depth = 6;
  double ooa_radius = 0.01;

  void attach(CLI::App* app) {
    app->add_option("--nu", nu, "persistence margin (m)")->capture_default_str();
    app->add_option("--h", h, "smallest admissible grouping radius (m)")->capture_default_str();
    app->add_flag("--h-from-workspace", h_from_workspace,
                  "use 1.1 * gripper_width + 2 * object_radius of the scene instead of --h");
    app->add_option("--time-cap-s", time_cap_s, "planning wall-clock cap (s)")->capture_default_str();
    app->add_option("--push-speed", push_speed, "arm push speed (m/s)")->capture_default_str();
    app->add_option("--max-actions", max_actions, "action budget for phia/ooa")->capture_default_str();
    app->add_option("--max-depth", max_depth, "tree depth limit for phis")->capture_default_str();
    app->add_option("--ooa-radius", ooa_radius, "fixed radius used by ooa (m)")->capture_default_str();
  }

  PlannerParams params(const Workspace& ws) const {
    PlannerParams p;
    p.nu = nu;
    p.h = h_from_workspace ? gripper_clearance_h(ws) : h;
    p.time_cap_s = time_cap_s;
    p.push_speed = push_speed;
    p.max_actions = max_actions;
    p.max_depth = max_depth;
    p.ooa_radius = ooa_radius;
    return p;
  }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    cli::write_text_file(out, text);
  }
}

std::vector<Algorithm> parse_algorithms(const std::string& csv) {
  std::vector<Algorithm> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_algorithm(item));
  }
  if (out.empty()) throw DomainError("no algorithms given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence-guided push planning for clearing a shelf path"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate scene files");
  std::string gen_family;
  int gen_count = 1;
  std::uint64_t gen_seed = 0;
  int gen_obstacles = kDefaultDeepObstacles;
  std::string gen_out;
  std::string gen_workspace;
  gen->add_option("family", gen_family, "simple | random-deep")->required();
  gen->add_option("count", gen_count, "number of scenes")->capture_default_str();
  gen->add_option("--seed", gen_seed, "first seed")->capture_default_str();
  gen->add_option("--obstacles", gen_obstacles, "obstacles per random-deep scene")->capture_default_str();
  gen->add_option("--out", gen_out, "output directory (default $TOPOPUSH_OUT_DIR or .)");
  gen->add_option("--workspace", gen_workspace, "workspace JSON file");

  // solve
  auto* solve = app.add_subcommand("solve", "plan pushes for one scene");
  std::string solve_scene, solve_algo = "phia", solve_out;
  bool solve_timing = false;
  CommonFlags solve_flags;
  solve->add_option("scene", solve_scene, "scene JSON file")->required();
  solve->add_option("--algo", solve_algo, "phia | phis | ooa")->capture_default_str();
  solve->add_option("--out", solve_out, "plan JSON output (default stdout)");
  solve->add_flag("--timing", solve_timing, "include planning wall time in the output");
  solve_flags.attach(solve);

  // batch
  auto* batch = app.add_subcommand("batch", "run planners over a scene directory");
  std::string batch_dir, batch_algos = "phia,phis,ooa", batch_out;
  unsigned batch_jobs = 1;
  bool batch_timing = false;
  CommonFlags batch_flags;
  batch->add_option("scene_dir", batch_dir, "directory of scene JSON files")->required();
  batch->add_option("--algos", batch_algos, "comma-separated algorithms")->capture_default_str();
  batch->add_option("--out", batch_out, "CSV output (default stdout)");
  batch->add_option("--jobs", batch_jobs, "worker threads")->capture_default_str();
  batch->add_flag("--timing", batch_timing, "add a planning wall time column (not byte-stable)");
  batch_flags.attach(batch);

  // render
  auto* render = app.add_subcommand("render", "draw a scene or plan as SVG");
  std::string render_in, render_out;
  std::optional<double> render_radius;
  CommonFlags render_flags;
  render->add_option("input", render_in, "scene or plan JSON file")->required();
  render->add_option("--out", render_out, "SVG output (default stdout)");
  render->add_option("--radius", render_radius, "component colouring radius (default: first persistent radius)");
  render_flags.attach(render);

  // diagram
  auto* diagram = app.add_subcommand("diagram", "persistence diagram of the path-region obstacles");
  std::string diagram_scene, diagram_out;
  diagram->add_option("scene", diagram_scene, "scene JSON file")->required();
  diagram->add_option("--out", diagram_out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  try {
    if (*gen) {
      cli::GenOptions opts;
      opts.family = parse_family(gen_family);
      opts.count = gen_count;
      opts.seed = gen_seed;
      opts.obstacles = gen_obstacles;
      opts.out_dir = gen_out.empty() ? cli::default_out_dir() : fs::path(gen_out);
      if (!gen_workspace.empty()) opts.ws = load_workspace(cli::read_text_file(gen_workspace));
      for (const auto& p : cli::cmd_gen(opts)) std::cout << p.string() << '\n';
      return cli::kExitOk;
    }
    if (*solve) {
      const Scene scene = cli::read_scene_file(solve_scene);
      const auto res = cli::cmd_solve(scene, parse_algorithm(solve_algo),
                                      solve_flags.params(scene.ws()), solve_timing);
      emit(res.plan_json, solve_out);
      std::cerr << scene.id << ": " << to_string(res.plan.outcome) << " after "
                << res.plan.action_count() << " action(s)\n";
      return res.exit_code;
    }
    if (*batch) {
      cli::BatchOptions opts;
      opts.scene_dir = batch_dir;
      opts.algorithms = parse_algorithms(batch_algos);
      opts.params = batch_flags.params(Workspace{});
      if (batch_flags.h_from_workspace) {
        throw DomainError("--h-from-workspace is per scene; pass --h explicitly for batches");
      }
      opts.jobs = batch_jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : batch_jobs;
      emit(cli::batch_csv(cli::run_batch(opts), batch_timing), batch_out);
      return cli::kExitOk;
    }
    if (*render) {
      cli::RenderOptions opts;
      opts.radius = render_radius;
      opts.params = render_flags.params(Workspace{});
      emit(cli::cmd_render(cli::read_text_file(render_in), opts), render_out);
      return cli::kExitOk;
    }
    if (*diagram) {
      const Scene scene = cli::read_scene_file(diagram_scene);
      const auto csv = cli::cmd_diagram(scene);
      if (!csv) {
        std::cerr << scene.id << ": path region is empty, no diagram to write\n";
        return cli::kExitPlanningFailed;
      }
      emit(*csv, diagram_out);
      return cli::kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitInputError;
}
