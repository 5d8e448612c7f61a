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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoaxnet/engine.hpp"

namespace hoaxnet {

/// A parameter grid. Swept axes are `p` and `alpha` for ER networks, and
/// `f0`, `h00`, `h01`, `h11` and `alpha` for two-block networks; lists of the
/// other family are ignored.
struct SweepSpec {
  NetworkFamily family = NetworkFamily::kEr;
  std::size_t n = 1000;
  std::vector<double> p{0.006};
  std::vector<double> f0{0.2};
  std::vector<double> h00{0.01};
  std::vector<double> h01{0.002};
  std::vector<double> h11{0.007};
  std::vector<double> alpha{0.3};
  double beta = 0.5;
  double p_verify = 0.05;
  double p_forget = 0.1;
  InitialCondition initial{};
  std::size_t steps = 1000;
  std::size_t iterations = 50;
  std::uint64_t master_seed = 1;
  std::size_t window = 1;
  bool fixed_graph = false;

  /// One "key: message" entry per violated constraint.
  std::vector<std::string> violations() const;
  std::size_t grid_size() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct GridPoint {
  std::size_t index;
  NetworkSpec network;
  ModelParams params;
};

/// Grid points in lexicographic order of (p, alpha) or (f0, h00, h01, h11,
/// alpha), last axis fastest.
std::vector<GridPoint> expand_grid(const SweepSpec& spec);

/// Per-point ensemble options; the point's master seed is
/// derive_seed(spec.master_seed, point index).
EnsembleOptions point_options(const SweepSpec& spec, std::size_t point_index,
                              std::size_t workers);

struct ResultRow {
  NetworkSpec network;
  ModelParams params;
  std::size_t steps = 0;
  std::size_t iterations = 0;
  std::uint64_t master_seed = 0;
  Summary global;
  Summary minority;
  Summary majority;
};

/// Throws std::invalid_argument listing every violation of `spec`.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, std::size_t workers);

/// Mean believer fraction at every step for each grid point.
std::vector<std::vector<double>> run_timeseries_grid(const SweepSpec& spec,
                                                     std::size_t workers);
/// Single-point version; throws std::invalid_argument if the grid has more
/// than one point.
std::vector<double> run_timeseries(const SweepSpec& spec, std::size_t workers);

std::string_view csv_header();
void write_csv(std::span<const ResultRow> rows, std::ostream& out);
/// Writes to a sibling temporary and renames it into place; throws
/// std::runtime_error naming the path on I/O failure.
void write_csv(std::span<const ResultRow> rows, const std::filesystem::path& path);

/// `t,mean_believers`.
void write_timeseries_csv(std::span<const double> series, std::ostream& out);
/// `p,t,mean_believers`, one block per ER density.
void write_timeseries_csv(std::span<const double> densities,
                          std::span<const std::vector<double>> series,
                          std::ostream& out);

/// Writes `content` to `path` through a temporary file and rename.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

enum class PresetKind { kTimeseries, kSweep };

struct Preset {
  std::string name;
  PresetKind kind;
  SweepSpec spec;
};

/// "fig2a", "fig2b" or "fig3"; throws std::invalid_argument otherwise.
Preset make_preset(std::string_view name);
std::vector<std::string_view> preset_names();

}  // namespace hoaxnet
