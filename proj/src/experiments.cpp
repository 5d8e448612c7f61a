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

#include "hoaxnet/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "hoaxnet/parallel.hpp"

namespace hoaxnet {
namespace {

void check_list(const std::vector<double>& values, const char* key, double lo, double hi,
                bool open, std::vector<std::string>& out) {
  if (values.empty()) {
    out.push_back(std::string(key) + ": list must not be empty");
    return;
  }
  for (double v : values) {
    const bool ok = open ? (v > lo && v < hi) : (v >= lo && v <= hi);
    if (!ok) {
      std::ostringstream msg;
      msg << key << ": value " << v << " must lie in " << (open ? "the open interval (" : "[")
          << lo << ", " << hi << (open ? ")" : "]");
      out.push_back(msg.str());
    }
  }
}

// Six significant digits; empty for NaN.
std::string format_number(double x) {
  if (std::isnan(x)) return {};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

[[noreturn]] void throw_violations(const std::vector<std::string>& errors) {
  std::ostringstream msg;
  msg << "invalid sweep specification:";
  for (const auto& e : errors) msg << "\n  " << e;
  throw std::invalid_argument(msg.str());
}

void validate(const SweepSpec& spec) {
  if (auto errors = spec.violations(); !errors.empty()) throw_violations(errors);
}

// Graphs shared by all iterations of a point in quenched mode.
std::vector<std::optional<Graph>> quenched_graphs(const SweepSpec& spec,
                                                  const std::vector<GridPoint>& grid) {
  std::vector<std::optional<Graph>> graphs(grid.size());
  if (!spec.fixed_graph) return graphs;
  for (const auto& point : grid) {
    graphs[point.index].emplace(quenched_graph(
        point.network, point_options(spec, point.index, 1).master_seed));
  }
  return graphs;
}

}  // namespace

std::vector<std::string> SweepSpec::violations() const {
  std::vector<std::string> out;
  if (n == 0) out.push_back("n: must be at least 1");
  if (family == NetworkFamily::kEr) {
    check_list(p, "p", 0.0, 1.0, false, out);
  } else {
    check_list(f0, "f0", 0.0, 1.0, false, out);
    check_list(h00, "h00", 0.0, 1.0, false, out);
    check_list(h01, "h01", 0.0, 1.0, false, out);
    check_list(h11, "h11", 0.0, 1.0, false, out);
  }
  check_list(alpha, "alpha", -1.0, 1.0, true, out);
  ModelParams fixed{beta, 0.0, p_verify, p_forget};
  for (auto& e : fixed.violations()) out.push_back(std::move(e));
  for (auto& e : initial.violations()) out.push_back(std::move(e));
  EnsembleOptions opts{steps, iterations, master_seed, window, fixed_graph, 1};
  for (auto& e : opts.violations()) out.push_back(std::move(e));
  return out;
}

std::size_t SweepSpec::grid_size() const {
  if (family == NetworkFamily::kEr) return p.size() * alpha.size();
  return f0.size() * h00.size() * h01.size() * h11.size() * alpha.size();
}

std::vector<GridPoint> expand_grid(const SweepSpec& spec) {
  std::vector<GridPoint> grid;
  grid.reserve(spec.grid_size());
  auto add = [&](NetworkSpec net, double alpha) {
    grid.push_back({grid.size(), net, {spec.beta, alpha, spec.p_verify, spec.p_forget}});
  };
  if (spec.family == NetworkFamily::kEr) {
    for (double p : spec.p)
      for (double a : spec.alpha) add(NetworkSpec::er(spec.n, p), a);
    return grid;
  }
  for (double f0 : spec.f0)
    for (double h00 : spec.h00)
      for (double h01 : spec.h01)
        for (double h11 : spec.h11)
          for (double a : spec.alpha) add(NetworkSpec::sbm(spec.n, f0, {h00, h01, h11}), a);
  return grid;
}

EnsembleOptions point_options(const SweepSpec& spec, std::size_t point_index,
                              std::size_t workers) {
  return {spec.steps, spec.iterations, derive_seed(spec.master_seed, point_index),
          spec.window, spec.fixed_graph, workers};
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec, std::size_t workers) {
  validate(spec);
  const auto grid = expand_grid(spec);
  const auto graphs = quenched_graphs(spec, grid);
  const std::size_t per_point = spec.iterations;

  // One task per (point, iteration) so a single slow point cannot idle workers.
  std::vector<IterationMetrics> metrics(grid.size() * per_point);
  parallel_for(metrics.size(), workers, [&](std::size_t task) {
    const GridPoint& point = grid[task / per_point];
    const auto opts = point_options(spec, point.index, 1);
    const auto& shared = graphs[point.index];
    const Trajectory traj = run_iteration(point.network, point.params, spec.initial, opts,
                                          task % per_point, shared ? &*shared : nullptr);
    metrics[task] = final_metrics(traj, spec.window);
  });

  std::vector<ResultRow> rows;
  rows.reserve(grid.size());
  for (const auto& point : grid) {
    const auto first = metrics.begin() + static_cast<std::ptrdiff_t>(point.index * per_point);
    EnsembleStats stats =
        summarize({first, first + static_cast<std::ptrdiff_t>(per_point)});
    rows.push_back({point.network, point.params, spec.steps, spec.iterations,
                    spec.master_seed, stats.global, stats.minority, stats.majority});
  }
  return rows;
}

std::vector<std::vector<double>> run_timeseries_grid(const SweepSpec& spec,
                                                     std::size_t workers) {
  validate(spec);
  const auto grid = expand_grid(spec);
  const auto graphs = quenched_graphs(spec, grid);
  const std::size_t per_point = spec.iterations;

  std::vector<std::vector<double>> runs(grid.size() * per_point);
  parallel_for(runs.size(), workers, [&](std::size_t task) {
    const GridPoint& point = grid[task / per_point];
    const auto opts = point_options(spec, point.index, 1);
    const auto& shared = graphs[point.index];
    const Trajectory traj = run_iteration(point.network, point.params, spec.initial, opts,
                                          task % per_point, shared ? &*shared : nullptr);
    auto& series = runs[task];
    series.resize(traj.records.size());
    for (std::size_t t = 0; t < series.size(); ++t) series[t] = traj.believer_fraction(t);
  });

  std::vector<std::vector<double>> means(grid.size(), std::vector<double>(spec.steps + 1, 0.0));
  for (std::size_t task = 0; task < runs.size(); ++task) {
    auto& mean = means[task / per_point];
    for (std::size_t t = 0; t < mean.size(); ++t) mean[t] += runs[task][t];
  }
  for (auto& mean : means) {
    for (double& x : mean) x /= static_cast<double>(per_point);
  }
  return means;
}

std::vector<double> run_timeseries(const SweepSpec& spec, std::size_t workers) {
  if (spec.grid_size() != 1) {
    throw std::invalid_argument("time series needs a single grid point, got " +
                                std::to_string(spec.grid_size()));
  }
  return run_timeseries_grid(spec, workers).front();
}

std::string_view csv_header() {
  return "family,f0,h00,h01,h11,p,alpha,beta,p_verify,p_forget,steps,iterations,seed,"
         "mean_believers_global,std_believers_global,mean_believers_minority,"
         "std_believers_minority,mean_believers_majority,std_believers_majority";
}

void write_csv(std::span<const ResultRow> rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : rows) {
    const bool er = r.network.family == NetworkFamily::kEr;
    out << (er ? "er" : "sbm") << ',';
    if (er) {
      out << ",,,," << format_number(r.network.p);
    } else {
      out << format_number(r.network.f0) << ',' << format_number(r.network.h.h00) << ','
          << format_number(r.network.h.h01) << ',' << format_number(r.network.h.h11) << ',';
    }
    out << ',' << format_number(r.params.alpha) << ',' << format_number(r.params.beta) << ','
        << format_number(r.params.p_verify) << ',' << format_number(r.params.p_forget) << ','
        << r.steps << ',' << r.iterations << ',' << r.master_seed;
    for (const Summary& s : {r.global, r.minority, r.majority}) {
      out << ',' << format_number(s.mean) << ',' << format_number(s.std);
    }
    out << '\n';
  }
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot move output into " + path.string() + ": " + ec.message());
  }
}

void write_csv(std::span<const ResultRow> rows, const std::filesystem::path& path) {
  std::ostringstream buffer;
  write_csv(rows, buffer);
  write_file_atomically(path, buffer.str());
}

void write_timeseries_csv(std::span<const double> series, std::ostream& out) {
  out << "t,mean_believers\n";
  for (std::size_t t = 0; t < series.size(); ++t) {
    out << t << ',' << format_number(series[t]) << '\n';
  }
}

void write_timeseries_csv(std::span<const double> densities,
                          std::span<const std::vector<double>> series,
                          std::ostream& out) {
  if (densities.size() != series.size()) {
    throw std::invalid_argument("one series per density expected");
  }
  out << "p,t,mean_believers\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const std::string p = format_number(densities[k]);
    for (std::size_t t = 0; t < series[k].size(); ++t) {
      out << p << ',' << t << ',' << format_number(series[k][t]) << '\n';
    }
  }
}

std::vector<std::string_view> preset_names() { return {"fig2a", "fig2b", "fig3"}; }

Preset make_preset(std::string_view name) {
  SweepSpec spec;
  spec.n = 1000;
  spec.beta = 0.5;
  spec.p_verify = 0.05;
  spec.p_forget = 0.1;
  spec.steps = 1000;
  if (name == "fig2a" || name == "fig2b") {
    spec.family = NetworkFamily::kEr;
    spec.p = {0.002, 0.004, 0.008, 0.016};
    spec.iterations = 50;
    if (name == "fig2a") {
      spec.alpha = {0.3};
      return {std::string(name), PresetKind::kTimeseries, spec};
    }
    spec.alpha = {0.1, 0.3, 0.5, 0.7};
    return {std::string(name), PresetKind::kSweep, spec};
  }
  if (name == "fig3") {
    spec.family = NetworkFamily::kSbm;
    spec.f0 = {0.1, 0.2, 0.3};
    spec.h00 = {0.01, 0.02, 0.04, 0.07, 0.10};
    spec.h01 = {0.002};
    spec.h11 = {0.004, 0.007, 0.010};
    spec.alpha = {0.3};
    spec.iterations = 100;
    return {std::string(name), PresetKind::kSweep, spec};
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) +
                              "' (expected fig2a, fig2b or fig3)");
}

}  // namespace hoaxnet
