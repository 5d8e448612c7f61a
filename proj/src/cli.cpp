// Copyright 2026 The hoaxnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoaxnet/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hoaxnet/config.hpp"
#include "hoaxnet/experiments.hpp"
#include "hoaxnet/parallel.hpp"

namespace hoaxnet::cli {
namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::string out;
  std::string config;
  std::vector<std::string> set;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--seed", flags.seed, "Master seed");
  sub->add_option("--workers", flags.workers, "Worker threads (default: HOAXNET_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", flags.out, "Output CSV path (default: standard output)");
  sub->add_option("--config", flags.config, "Config file in key = value format")
      ->check(CLI::ExistingFile);
  sub->add_option("--set", flags.set, "Override a config key, e.g. --set alpha=0.5 (repeatable)")
      ->allow_extra_args(false);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t resolve_workers(const CommonFlags& flags, const RunConfig& config) {
  if (flags.workers) return *flags.workers;
  if (config.workers) return *config.workers;
  if (const char* env = std::getenv("HOAXNET_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
      throw std::runtime_error(std::string("HOAXNET_WORKERS must be a positive integer, got '") +
                               env + "'");
    }
    return static_cast<std::size_t>(value);
  }
  return hardware_workers();
}

std::string format_summary(const Summary& s) {
  if (std::isnan(s.mean)) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g±%.6g", s.mean, s.std);
  return buf;
}

// Sends `content` to the configured file, or to `out` when none is set.
void emit(const RunConfig& config, const std::string& content, std::ostream& out,
          std::ostream& err) {
  if (config.output) {
    write_file_atomically(*config.output, content);
    err << "wrote " << *config.output << '\n';
  } else {
    out << content;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo simulator for susceptible-believer-fact-checker misinformation "
               "dynamics on random networks",
               "hoaxnet"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string preset_name;
  auto* run_cmd = app.add_subcommand("run", "Single ensemble: CSV row plus summary line");
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter grid to CSV");
  auto* series_cmd = app.add_subcommand("timeseries", "Mean believer fraction per step to CSV");
  auto* preset_cmd = app.add_subcommand("preset", "Run a built-in preset (fig2a, fig2b, fig3)");
  preset_cmd->add_option("name", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig3"}));
  for (auto* sub : {run_cmd, sweep_cmd, series_cmd, preset_cmd}) add_common(sub, flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::vector<std::string> overrides;
    if (preset_cmd->parsed()) overrides.push_back("preset=" + preset_name);
    overrides.insert(overrides.end(), flags.set.begin(), flags.set.end());
    if (flags.seed) overrides.push_back("seed=" + std::to_string(*flags.seed));

    RunConfig config =
        parse_config(flags.config.empty() ? std::string() : read_file(flags.config), overrides);
    if (!flags.out.empty()) config.output = flags.out;
    const std::size_t workers = resolve_workers(flags, config);

    std::ostringstream content;
    if (run_cmd->parsed()) {
      if (config.spec.grid_size() != 1) {
        throw std::runtime_error("run needs a single grid point, got " +
                                 std::to_string(config.spec.grid_size()) + "; use sweep");
      }
      const auto rows = run_sweep(config.spec, workers);
      const ResultRow& row = rows.front();
      if (config.output) {
        write_csv(rows, std::filesystem::path(*config.output));
        err << "wrote " << *config.output << '\n';
      }
      out << "believers_global=" << format_summary(row.global)
          << " believers_majority=" << format_summary(row.majority)
          << " believers_minority=" << format_summary(row.minority) << '\n';
      return kExitOk;
    }

    const bool timeseries =
        series_cmd->parsed() ||
        (preset_cmd->parsed() && make_preset(preset_name).kind == PresetKind::kTimeseries);
    if (series_cmd->parsed()) {
      write_timeseries_csv(run_timeseries(config.spec, workers), content);
    } else if (timeseries) {
      if (config.spec.family != NetworkFamily::kEr) {
        throw std::runtime_error("time-series presets are defined for ER networks");
      }
      // One series per density; gullibility must be a single value.
      if (config.spec.alpha.size() != 1) {
        throw std::runtime_error("time-series preset needs a single alpha value");
      }
      const auto series = run_timeseries_grid(config.spec, workers);
      write_timeseries_csv(config.spec.p, series, content);
    } else {
      write_csv(run_sweep(config.spec, workers), content);
    }
    emit(config, content.str(), out, err);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

}  // namespace hoaxnet::cli
