#include "mucb/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "mucb/analysis.hpp"
#include "mucb/cli/config.hpp"
#include "mucb/cli/csv.hpp"
#include "mucb/errors.hpp"
#include "mucb/harness.hpp"
#include "mucb/ldi.hpp"

namespace mucb::cli {
namespace {

namespace fs = std::filesystem;

struct IoError {
  std::string message;
};

struct ExperimentFlags {
  std::string means;
  double alpha = 4.5;
  std::uint64_t horizon = 100000;
  std::uint64_t runs = 200;
  std::uint64_t seed = 42;
  std::string policy = "mucb";
  std::string checkpoints;
  std::string out_dir = ".";
  bool check_theorem = false;
};

struct LdiFlags {
  double rate = 1.0;
  std::string ns = "5,10,20";
  std::string betas = "1.5,2,3";
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
};

void add_experiment_options(CLI::App& cmd, ExperimentFlags& f, bool with_policy) {
  cmd.add_option("--means", f.means, "Comma-separated arm means (K >= 2)");
  cmd.add_option("--alpha", f.alpha, "Exploration coefficient alpha >= 0")->capture_default_str();
  cmd.add_option("--horizon", f.horizon, "Rounds per episode")->capture_default_str();
  cmd.add_option("--runs", f.runs, "Independent episodes")->capture_default_str();
  cmd.add_option("--seed", f.seed, "Base seed")->capture_default_str();
  if (with_policy) cmd.add_option("--policy", f.policy, "mucb or ucb1")->capture_default_str();
  cmd.add_option("--checkpoints", f.checkpoints, "Comma-separated rounds (default: half-decade grid)");
  cmd.add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();
  if (with_policy)
    cmd.add_flag("--check-theorem", f.check_theorem, "Reject alpha outside the regret theorem's hypothesis");
  cmd.add_option("--config", "Flat key=value config file; flags take precedence");
}

void add_ldi_options(CLI::App& cmd, LdiFlags& f) {
  cmd.add_option("--rate", f.rate, "Exponential rate lambda")->capture_default_str();
  cmd.add_option("--ns", f.ns, "Comma-separated sample sizes")->capture_default_str();
  cmd.add_option("--betas", f.betas, "Comma-separated thresholds")->capture_default_str();
  cmd.add_option("--mc-samples", f.mc_samples, "Monte Carlo paths")->capture_default_str();
  cmd.add_option("--seed", f.seed, "Monte Carlo seed")->capture_default_str();
  cmd.add_option("--out-dir", f.out_dir, "Output directory")->capture_default_str();
  cmd.add_option("--config", "Flat key=value config file; flags take precedence");
}

bool present_on_command_line(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Splices config-file keys into the argument list, skipping keys already
// given as flags. Unknown keys are errors.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App& sub) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;

  std::vector<std::string> merged{args.front()};
  for (const auto& [key, value] : read_config_file(*path)) {
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub.get_option_no_throw(flag);
    if (opt == nullptr || key == "config") throw ConfigError{key + ": unknown config key"};
    if (present_on_command_line(args, flag)) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1") merged.push_back(flag);
      else if (value != "false" && value != "0") throw ConfigError{key + ": expected true or false"};
    } else {
      merged.push_back(flag);
      merged.push_back(value);
    }
  }
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

ExperimentConfig to_config(const ExperimentFlags& f, PolicyKind policy) {
  if (f.means.empty()) throw ConfigError{"means: required"};
  ExperimentConfig c;
  c.means = parse_double_list("means", f.means);
  c.alpha = f.alpha;
  c.horizon = f.horizon;
  c.runs = f.runs;
  c.seed = f.seed;
  c.policy = policy;
  if (!f.checkpoints.empty()) c.checkpoints = parse_uint_list("checkpoints", f.checkpoints);
  c.threads = threads_from_env();
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError{e.what()};
  }
  return c;
}

PolicyKind parse_policy(const std::string& s) {
  if (s == "mucb") return PolicyKind::mucb;
  if (s == "ucb1") return PolicyKind::ucb1;
  throw ConfigError{"policy: expected mucb or ucb1, got '" + s + "'"};
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError{"cannot create directory " + path.parent_path().string() + ": " + ec.message()};
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError{"cannot open " + path.string() + " for writing"};
  body(os);
  os.flush();
  if (!os) throw IoError{"write failed for " + path.string()};
}

int do_run(const ExperimentFlags& f, std::ostream& out) {
  const ExperimentConfig config = to_config(f, parse_policy(f.policy));
  if (f.check_theorem && !(config.alpha > 4.0))
    throw ConfigError{"alpha: the regret theorem requires alpha > 4, got " + format_double(config.alpha)};
  const AggregateResult result = run_experiment(config);
  const fs::path dir(f.out_dir);
  write_file(dir / "regret.csv", [&](std::ostream& os) { write_regret_csv(os, std::span(&result, 1)); });
  write_file(dir / "anomalies.csv", [&](std::ostream& os) { write_anomalies_csv(os, result); });
  out << "wrote " << (dir / "regret.csv").string() << " and " << (dir / "anomalies.csv").string() << '\n';
  return kExitOk;
}

int do_compare(const ExperimentFlags& f, std::ostream& out) {
  std::array<AggregateResult, 2> results;
  ExperimentConfig config = to_config(f, PolicyKind::mucb);
  results[0] = run_experiment(config);
  config.policy = PolicyKind::ucb1;
  results[1] = run_experiment(config);
  const fs::path path = fs::path(f.out_dir) / "compare.csv";
  write_file(path, [&](std::ostream& os) { write_regret_csv(os, results); });
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int do_ldi(const LdiFlags& f, std::ostream& out) {
  LdiGrid grid;
  grid.rate = f.rate;
  grid.ns = parse_uint_list("ns", f.ns);
  grid.betas = parse_double_list("betas", f.betas);
  grid.mc_samples = f.mc_samples;
  grid.seed = f.seed;
  std::vector<LdiRow> rows;
  try {
    rows = ldi_table(grid);
  } catch (const InvalidArgument& e) {
    throw ConfigError{e.what()};
  }
  std::size_t violations = 0;
  for (const auto& r : rows)
    if (r.exact_tail > r.chernoff_bound || r.minorant > r.rate_value) ++violations;
  const fs::path path = fs::path(f.out_dir) / "ldi.csv";
  write_file(path, [&](std::ostream& os) { write_ldi_csv(os, rows); });
  out << "wrote " << path.string() << " (" << rows.size() << " rows, " << violations
      << " dominance violations)\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MUCB multi-armed bandit experiments", "mucb"};
  app.require_subcommand(1);
  ExperimentFlags run_flags, compare_flags;
  LdiFlags ldi_flags;
  CLI::App* run = app.add_subcommand("run", "Simulate a policy; write regret.csv and anomalies.csv");
  CLI::App* compare = app.add_subcommand("compare", "MUCB vs UCB1 on common random numbers; write compare.csv");
  CLI::App* ldi = app.add_subcommand("ldi", "Tabulate large-deviation bounds; write ldi.csv");
  add_experiment_options(*run, run_flags, true);
  add_experiment_options(*compare, compare_flags, false);
  add_ldi_options(*ldi, ldi_flags);

  try {
    std::vector<std::string> argv = args;
    if (!argv.empty()) {
      for (CLI::App* sub : {run, compare, ldi})
        if (argv.front() == sub->get_name()) argv = merge_config(argv, *sub);
    }
    std::reverse(argv.begin(), argv.end());
    try {
      app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return kExitConfig;
    }

    if (*run) return do_run(run_flags, out);
    if (*compare) return do_compare(compare_flags, out);
    return do_ldi(ldi_flags, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.message << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "error: " << e.message << '\n';
    return kExitIo;
  }
}

}  // namespace mucb::cli
