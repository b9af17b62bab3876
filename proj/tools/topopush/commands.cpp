#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "topopush/errors.hpp"
#include "topopush/format.hpp"
#include "topopush/path_region.hpp"
#include "topopush/persistence.hpp"
#include "topopush/plan_io.hpp"

namespace fs = std::filesystem;

namespace topopush::cli {

fs::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return fs::current_path();
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Scene read_scene_file(const fs::path& path) {
  try {
    return load_scene(read_text_file(path));
  } catch (const LoadError& e) {
    throw LoadError("", path.string() + ": " + e.what());
  }
}

std::vector<fs::path> cmd_gen(const GenOptions& opts) {
  if (opts.count < 0) throw DomainError("scene count must be non-negative");
  fs::create_directories(opts.out_dir);
  std::vector<fs::path> written;
  for (int i = 0; i < opts.count; ++i) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(i);
    Scene scene;
    switch (opts.family) {
      case SceneFamily::Simple4: scene = generate_simple(seed, opts.ws); break;
      case SceneFamily::RandomDeep: scene = generate_random_deep(seed, opts.obstacles, opts.ws); break;
      case SceneFamily::Manual: throw DomainError("manual scenes are written by hand, not generated");
    }
    const fs::path file = opts.out_dir / (scene.id + ".json");
    write_text_file(file, save_scene(scene));
    written.push_back(file);
  }
  return written;
}

SolveResult cmd_solve(const Scene& scene, Algorithm algorithm, const PlannerParams& params,
                      bool with_timing) {
  SolveResult out;
  const auto t0 = std::chrono::steady_clock::now();
  out.plan = run_planner(algorithm, scene.config, params);
  out.planning_wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.plan_json = plan_to_json(scene, algorithm, out.plan, params,
                               with_timing ? std::optional<double>(out.planning_wall_time_s)
                                           : std::nullopt);
  out.exit_code = out.plan.outcome == Outcome::Success ? kExitOk : kExitPlanningFailed;
  return out;
}

std::vector<RunRecord> run_batch(const BatchOptions& opts) {
  if (!fs::is_directory(opts.scene_dir)) {
    throw std::runtime_error(opts.scene_dir.string() + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opts.scene_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (files.empty()) throw std::runtime_error("no scene files in " + opts.scene_dir.string());
  std::sort(files.begin(), files.end());

  const std::size_t n_algos = opts.algorithms.size();
  std::vector<RunRecord> records(files.size() * n_algos);

  auto run_scene = [&](std::size_t i) {
    Scene scene;
    bool loaded = true;
    try {
      scene = read_scene_file(files[i]);
    } catch (const std::exception&) {
      loaded = false;
    }
    for (std::size_t a = 0; a < n_algos; ++a) {
      RunRecord& rec = records[i * n_algos + a];
      rec.algorithm = to_string(opts.algorithms[a]);
      if (!loaded) {
        rec.scenario = files[i].stem().string();
        rec.outcome = "error";
        continue;
      }
      rec.scenario = scene.id;
      try {
        const auto res = cmd_solve(scene, opts.algorithms[a], opts.params);
        rec.outcome = to_string(res.plan.outcome);
        rec.action_count = res.plan.action_count();
        rec.total_time_s = res.plan.total_time;
        rec.planning_wall_time_s = res.planning_wall_time_s;
      } catch (const std::exception&) {
        rec.outcome = "error";
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(files.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < files.size(); ++i) run_scene(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) run_scene(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Scene ids normally match file stems, but order by id as the contract says.
  std::stable_sort(records.begin(), records.end(), [&](const RunRecord& l, const RunRecord& r) {
    return l.scenario < r.scenario;
  });
  return records;
}

std::string batch_csv(const std::vector<RunRecord>& records, bool with_timing) {
  std::string out = "scenario,algorithm,outcome,action_count,total_time_s";
  if (with_timing) out += ",planning_wall_time_s";
  out += '\n';

  struct Summary {
    std::size_t runs = 0;
    std::size_t successes = 0;
    double actions = 0.0;
    double time = 0.0;
  };
  std::vector<std::string> algo_order;
  std::map<std::string, Summary> summary;

  for (const auto& r : records) {
    out += r.scenario + ',' + r.algorithm + ',' + r.outcome + ',' + std::to_string(r.action_count) +
           ',' + format_double(r.total_time_s);
    if (with_timing) out += ',' + format_fixed(r.planning_wall_time_s, 6);
    out += '\n';

    if (!summary.contains(r.algorithm)) algo_order.push_back(r.algorithm);
    auto& s = summary[r.algorithm];
    ++s.runs;
    if (r.outcome == "success") {
      ++s.successes;
      s.actions += static_cast<double>(r.action_count);
      s.time += r.total_time_s;
    }
  }

  out += "# summary\nalgorithm,runs,successes,success_rate,mean_actions,mean_total_time_s\n";
  for (const auto& name : algo_order) {
    const auto& s = summary[name];
    const double k = static_cast<double>(s.successes);
    out += name + ',' + std::to_string(s.runs) + ',' + std::to_string(s.successes) + ',' +
           format_fixed(k / static_cast<double>(s.runs), 6) + ',' +
           (s.successes ? format_fixed(s.actions / k, 6) : "nan") + ',' +
           (s.successes ? format_fixed(s.time / k, 6) : "nan") + '\n';
  }
  return out;
}

std::optional<std::string> cmd_diagram(const Scene& scene) {
  const PathRegion region = path_region(scene.config);
  if (region.empty()) return std::nullopt;
  std::vector<Point2> members;
  for (std::size_t i : region.members) members.push_back(scene.config.obstacles[i]);
  return diagram_to_csv(zero_dim_persistence(members));
}

}  // namespace topopush::cli
