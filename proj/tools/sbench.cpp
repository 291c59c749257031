// sbench: run paired-agent experiments, build comparison reports, and plot
// them. Subcommands: run, report, plot, policies.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadowbench/analysis.hpp"
#include "shadowbench/config.hpp"
#include "shadowbench/logio.hpp"
#include "shadowbench/report.hpp"
#include "shadowbench/svg.hpp"

namespace fs = std::filesystem;
using namespace shadowbench;

namespace {

std::string pt_filename(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "pt%04d.jsonl", index);
  return buf;
}

void write_text(const fs::path& file, const std::string& text) {
  fs::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw EngineError("cannot open " + file.string() + " for writing");
  out << text;
}

std::string read_text(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw EngineError("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_run(const ExperimentConfig& config) {
  const fs::path out_dir(config.output_dir);
  fs::create_directories(out_dir);

  std::vector<std::string> files;
  for (GameId game : config.games) {
    const int level = config.level_of(game);
    const auto logs = run_experiment(game, level, config.roster, config.budget_cap,
                                     config.playthroughs, config.base_seed, config.jobs);
    const int n = static_cast<int>(config.roster.size());
    for (std::size_t i = 0; i < logs.size(); ++i) {
      const int per_pair = config.playthroughs;
      const int pair = per_pair > 0 ? static_cast<int>(i) / per_pair : 0;
      const int pt = per_pair > 0 ? static_cast<int>(i) % per_pair : 0;
      const int main_idx = pair / n;
      const int shadow_idx = pair % n;
      const fs::path dir = out_dir / to_string(game) /
                           (config.roster[static_cast<std::size_t>(main_idx)].name + "__" +
                            config.roster[static_cast<std::size_t>(shadow_idx)].name);
      fs::create_directories(dir);
      const fs::path file = dir / pt_filename(pt);
      write_playthrough(file, logs[i]);
      files.push_back(fs::relative(file, out_dir).generic_string());
    }
  }

  std::sort(files.begin(), files.end());
  nlohmann::ordered_json manifest;
  manifest["config"] = nlohmann::ordered_json::parse(config_to_json(config));
  manifest["files"] = files;
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << files.size() << " playthrough logs under " << out_dir.string()
            << "\n";
  return 0;
}

std::vector<PlaythroughLog> load_logs(const fs::path& log_dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(log_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<PlaythroughLog> logs;
  logs.reserve(files.size());
  for (const fs::path& f : files) logs.push_back(read_playthrough(f));
  return logs;
}

int cmd_report(const fs::path& log_dir, const fs::path& out_dir) {
  if (!fs::exists(log_dir)) {
    std::cerr << "log directory " << log_dir.string() << " does not exist\n";
    return 1;
  }
  const auto logs = load_logs(log_dir);
  if (logs.empty()) {
    std::cerr << "no .jsonl playthrough logs under " << log_dir.string() << "\n";
    return 1;
  }

  // Group by game, preserving roster order from a manifest when present.
  std::vector<std::string> games;
  for (const PlaythroughLog& log : logs) {
    if (std::find(games.begin(), games.end(), log.game_id) == games.end()) {
      games.push_back(log.game_id);
    }
  }
  std::sort(games.begin(), games.end());

  std::vector<ComparisonMatrix> matrices;
  for (const std::string& game : games) {
    const ComparisonMatrix matrix = build_matrix(logs, game);
    const fs::path game_dir = out_dir / game;
    for (MatrixStat stat : all_matrix_stats()) {
      write_text(game_dir / (std::string(to_string(stat)) + ".csv"), matrix_csv(matrix, stat));
    }
    write_text(game_dir / "verdicts.csv", verdicts_csv(matrix));

    // Convergence series per agent, pooled over its main-agent logs.
    for (const std::string& agent : matrix.roster) {
      std::vector<PlaythroughLog> own;
      for (const PlaythroughLog& log : logs) {
        if (log.game_id == game && log.main_config.name == agent) own.push_back(log);
      }
      const auto series = conv_timeseries(own);
      write_text(game_dir / "conv_series" / (agent + ".csv"), series_csv(series));
    }
    matrices.push_back(matrix);
  }
  write_text(out_dir / "bundle.json", report_bundle_json(matrices));
  std::cout << "report for " << games.size() << " game(s) under " << out_dir.string() << "\n";
  return 0;
}

int cmd_plot(const fs::path& report_dir) {
  if (!fs::exists(report_dir)) {
    std::cerr << "report directory " << report_dir.string() << " does not exist\n";
    return 1;
  }
  int plotted = 0;
  for (const auto& entry : fs::recursive_directory_iterator(report_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    const fs::path& csv = entry.path();
    if (csv.filename() == "verdicts.csv") continue;
    const std::string text = read_text(csv);
    fs::path svg_path = csv;
    svg_path.replace_extension(".svg");
    if (csv.parent_path().filename() == "conv_series") {
      const auto series = parse_series_csv(text);
      const std::string title = "mean conv: " + csv.stem().string();
      write_text(svg_path, line_chart_svg(series, title));
    } else {
      const MatrixCsv matrix = parse_matrix_csv(text);
      const std::string title = matrix.stat + " (" + matrix.game + ")";
      write_text(svg_path, heatmap_svg(matrix, title));
    }
    ++plotted;
  }
  if (plotted == 0) {
    std::cerr << "no CSV files to plot under " << report_dir.string() << "\n";
    return 1;
  }
  std::cout << "rendered " << plotted << " SVG file(s)\n";
  return 0;
}

int cmd_policies(const std::string& override_policy) {
  if (override_policy.empty()) {
    const auto& renderings = pruning_renderings();
    for (std::size_t id = 0; id < renderings.size(); ++id) {
      std::cout << id << "\t" << renderings[id] << "\n";
    }
  } else {
    const auto prunings = prune_enumerate(parse_policy(override_policy));
    for (std::size_t id = 0; id < prunings.size(); ++id) {
      std::cout << id << "\t" << prunings[id].render() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shadowbench: paired-agent decision analysis workbench"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run an experiment and write JSONL logs");
  std::string config_file, profile = "desk", out_override;
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  int jobs = 1;
  run->add_option("--config", config_file, "experiment config file");
  run->add_option("--profile", profile, "named profile: desk or full")
      ->check(CLI::IsMember({"desk", "full"}));
  run->add_option("--jobs", jobs, "parallel playthrough workers");
  run->add_option_function<std::uint64_t>(
         "--seed", [&](const std::uint64_t& s) { seed_override = s; seed_set = true; },
         "base seed override");
  run->add_option("--out", out_override, "output directory override");

  // report
  auto* report = app.add_subcommand("report", "build comparison matrices from logs");
  std::string report_log_dir, report_out;
  report->add_option("log_dir", report_log_dir, "directory of JSONL logs")->required();
  report->add_option("--out", report_out, "report output directory");

  // plot
  auto* plot = app.add_subcommand("plot", "render report CSVs as SVGs");
  std::string plot_dir;
  plot->add_option("report_dir", plot_dir, "directory of report CSVs")->required();

  // policies
  auto* policies = app.add_subcommand("policies", "print the pruned policy set");
  std::string override_policy;
  policies->add_option("--policy", override_policy,
                       "enumerate prunings of this policy instead of the reference one");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ExperimentConfig config =
          config_file.empty() ? profile_config(profile) : load_config(config_file);
      if (seed_set) config.base_seed = seed_override;
      if (!out_override.empty()) config.output_dir = out_override;
      if (jobs > 1) config.jobs = jobs;
      return cmd_run(config);
    }
    if (report->parsed()) {
      const fs::path log_dir(report_log_dir);
      const fs::path out =
          report_out.empty() ? log_dir / "report" : fs::path(report_out);
      return cmd_report(log_dir, out);
    }
    if (plot->parsed()) return cmd_plot(plot_dir);
    if (policies->parsed()) return cmd_policies(override_policy);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
