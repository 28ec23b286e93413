#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signet/config_io.hpp"
#include "signet/errors.hpp"
#include "signet/harness.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;

struct CommonArgs {
  std::string config_path;
  std::string preset_name;
  std::vector<std::string> overrides;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  bool trials_set = false;
  bool seed_set = false;
  bool quiet = false;
};

void add_source_options(CLI::App& cmd, CommonArgs& args) {
  auto* config = cmd.add_option("--config", args.config_path, "Path to a JSON config file");
  auto* preset = cmd.add_option("--preset", args.preset_name, "Name of a built-in preset");
  config->excludes(preset);
  cmd.add_option("--set", args.overrides, "Override a config key (dotted path, key=value)");
  cmd.add_option("--trials", args.trials, "Override the trial count");
  cmd.add_option("--seed", args.seed, "Override the master seed");
  cmd.add_flag("--quiet", args.quiet, "Suppress progress output");
}

// Effective config object: file or preset, then --set/--trials/--seed.
json resolve_config(const CommonArgs& args, fs::path& base_dir) {
  if (args.config_path.empty() == args.preset_name.empty())
    throw CLI::ValidationError("exactly one of --config or --preset is required");
  json config;
  if (!args.config_path.empty()) {
    config = signet::load_config_json(args.config_path);
    base_dir = fs::path(args.config_path).parent_path();
  } else {
    config = signet::config_to_json(signet::preset(args.preset_name));
    base_dir.clear();
  }
  for (const std::string& assignment : args.overrides)
    signet::apply_override(config, assignment);
  if (args.trials_set) config["trials"] = args.trials;
  if (args.seed_set) config["seed"] = args.seed;
  return config;
}

std::string frequency_line(const signet::ExperimentSummary& summary, signet::VerdictKind kind) {
  const auto& tally = summary.tally_for(kind);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "  %-20s %6lld  (%.3f +/- %.3f)",
                signet::to_string(kind).c_str(), static_cast<long long>(tally.count),
                tally.frequency, tally.std_error);
  return buf;
}

int cmd_run(const CommonArgs& args, const std::string& out_dir) {
  fs::path base_dir;
  const json config = resolve_config(args, base_dir);
  const signet::ExperimentConfig cfg = signet::config_from_json(config, base_dir);

  const fs::path out(out_dir);
  fs::create_directories(out);

  signet::RunOptions options;
  options.trajectory_sink = [&](const signet::TrialResult& result,
                                const signet::Trajectory& traj) {
    char name[32];
    std::snprintf(name, sizeof(name), "trial_%04d.csv", result.trial_index);
    std::ofstream file(out / name, std::ios::binary);
    if (!file) throw signet::ConfigError("cannot write " + (out / name).string());
    signet::write_trajectory_csv(traj, file);
  };
  const signet::ExperimentSummary summary = signet::run_experiment(cfg, options);

  const fs::path summary_path = out / "summary.json";
  {
    std::ofstream file(summary_path, std::ios::binary);
    if (!file) throw signet::ConfigError("cannot write " + summary_path.string());
    file << signet::dump_json(signet::summary_to_json(summary, config));
  }

  if (!args.quiet) {
    std::cout << summary.name << ": trials=" << summary.trials << " seed=" << summary.seed
              << "\n";
    for (int k = 0; k < 5; ++k)
      std::cout << frequency_line(summary, static_cast<signet::VerdictKind>(k)) << "\n";
    std::cout << "summary: " << summary_path.string() << "\n";
  }
  return kExitOk;
}

int cmd_check(const CommonArgs& args) {
  fs::path base_dir;
  const json config = resolve_config(args, base_dir);
  const signet::ExperimentConfig cfg = signet::config_from_json(config, base_dir);
  const signet::AssumptionReport report =
      signet::check_assumptions(cfg.schedule, cfg.horizon, cfg.window_k);

  if (!args.quiet) {
    for (int id = 1; id <= 9; ++id) {
      std::cout << signet::assumption_name(id) << "  " << (report.holds(id) ? "yes" : "no ")
                << "  " << signet::assumption_description(id) << "\n";
    }
    std::cout << "p_star=" << report.p_star << " p_sup=" << report.p_sup
              << " window_k=" << report.window_k << "\n";
    if (report.sign_conflict) {
      std::cout << "sign conflict on arc (" << report.sign_conflict->first << ","
                << report.sign_conflict->second << ")\n";
    }
    if (report.partition) {
      std::cout << "positive clusters: " << report.partition->block_count() << "\n";
    }
  }

  bool ok = true;
  std::string required;
  for (int id : cfg.required_assumptions) {
    ok = ok && report.holds(id);
    required += (required.empty() ? "" : " ") + signet::assumption_name(id);
  }
  if (!args.quiet) {
    if (required.empty())
      std::cout << "required: (none)\n";
    else
      std::cout << "required: " << required << " -> " << (ok ? "satisfied" : "NOT satisfied")
                << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_constants(const CommonArgs& args) {
  fs::path base_dir;
  const json config = resolve_config(args, base_dir);
  const signet::ExperimentConfig cfg = signet::config_from_json(config, base_dir);

  const int n = cfg.node_count();
  const std::int64_t k0 = static_cast<std::int64_t>(2 * n - 3) * cfg.window_k;
  const std::int64_t windows = std::max<std::int64_t>(1, cfg.horizon / k0);
  const double p_star = cfg.schedule.min_probability();
  const signet::TheoremConstants c = signet::theorem_constants(
      n, cfg.window_k, cfg.params.alpha, cfg.params.beta, p_star, cfg.b, cfg.d, windows);

  std::printf("rho_star=%.9g lambda_star=%.9g k0=%lld windows=%lld p_star=%.9g\n", c.rho_star,
              c.lambda_star, static_cast<long long>(c.k0), static_cast<long long>(windows),
              p_star);
  std::printf("%6s %13s %13s %13s %13s %13s\n", "m", "x", "y", "x-y", "j", "w");
  const std::size_t shown = std::min<std::size_t>(c.x.size(), 8);
  for (std::size_t m = 0; m < shown; ++m) {
    std::printf("%6zu %13.6g %13.6g %13.6g %13.6g %13.6g\n", m, c.x[m], c.y[m], c.x[m] - c.y[m],
                c.j[m], c.w[m]);
  }
  if (c.x.size() > shown) std::printf("   ... %zu more windows\n", c.x.size() - shown);
  std::printf("x-y in [0,1]: %s   min(x-y)=%.6g   sum(x-y)=%.6g\n",
              c.x_minus_y_in_unit_interval() ? "yes" : "no", c.min_x_minus_y(),
              c.sum_x_minus_y());
  std::printf("min(j)=%.6g   sum(w)=%.6g   w/j first=%.6g last=%.6g\n", c.min_j(), c.sum_w(),
              c.first_w_over_j(), c.last_w_over_j());
  std::printf("b: partial_sum=%.6g summable=%s   d: partial_sum=%.6g summable=%s\n",
              cfg.b.partial_sum(cfg.horizon), cfg.b.summable() ? "yes" : "no",
              cfg.d.partial_sum(cfg.horizon), cfg.d.summable() ? "yes" : "no");
  return kExitOk;
}

int cmd_preset(const std::string& name, const std::string& out_dir,
               const std::vector<std::string>& overrides, bool quiet) {
  json config = signet::config_to_json(signet::preset(name));
  for (const std::string& assignment : overrides) signet::apply_override(config, assignment);
  const fs::path out(out_dir);
  if (!out.empty()) fs::create_directories(out);
  const fs::path path = out / (name + ".json");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw signet::ConfigError("cannot write " + path.string());
  file << signet::dump_json(config);
  if (!quiet) std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo simulator for consensus dynamics on signed random networks"};
  app.require_subcommand(1);

  CommonArgs run_args;
  std::string run_out = "out";
  CLI::App* run = app.add_subcommand("run", "Run an experiment and write CSV/JSON outputs");
  add_source_options(*run, run_args);
  run->add_option("--out", run_out, "Output directory")->capture_default_str();

  CommonArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Evaluate the structural checks A1..A9");
  add_source_options(*check, check_args);

  CommonArgs constants_args;
  CLI::App* constants =
      app.add_subcommand("constants", "Print the window-constants table for a config");
  add_source_options(*constants, constants_args);

  std::string preset_name;
  std::string preset_out = ".";
  std::vector<std::string> preset_overrides;
  bool preset_quiet = false;
  CLI::App* preset_cmd = app.add_subcommand("preset", "Write a built-in preset's config file");
  preset_cmd->add_option("name", preset_name, "Preset name")->required();
  preset_cmd->add_option("--out", preset_out, "Output directory")->capture_default_str();
  preset_cmd->add_option("--set", preset_overrides, "Override a config key before writing");
  preset_cmd->add_flag("--quiet", preset_quiet, "Suppress output");

  try {
    app.parse(argc, argv);
    run_args.trials_set = run->count("--trials") > 0;
    run_args.seed_set = run->count("--seed") > 0;
    check_args.trials_set = check->count("--trials") > 0;
    check_args.seed_set = check->count("--seed") > 0;
    constants_args.trials_set = constants->count("--trials") > 0;
    constants_args.seed_set = constants->count("--seed") > 0;

    if (app.got_subcommand(run)) return cmd_run(run_args, run_out);
    if (app.got_subcommand(check)) return cmd_check(check_args);
    if (app.got_subcommand(constants)) return cmd_constants(constants_args);
    if (app.got_subcommand(preset_cmd))
      return cmd_preset(preset_name, preset_out, preset_overrides, preset_quiet);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const signet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
