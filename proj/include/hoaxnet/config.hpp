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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hoaxnet/experiments.hpp"

namespace hoaxnet {

/// Everything a CLI invocation needs: the sweep plus output routing.
struct RunConfig {
  SweepSpec spec;
  std::optional<std::string> preset;
  std::optional<std::string> output;
  std::optional<std::size_t> workers;
};

/// Carries every problem found while parsing and validating, one per entry,
/// each naming the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  std::vector<std::string> errors_;
};

/// Parses the flat `key = value` format:
///
///   # comment
///   [network]
///   family = sbm          # er | sbm
///   f0 = 0.1, 0.2, 0.3    # swept parameters take comma-separated lists
///   [model]
///   alpha = 0.3
///   [run]
///   preset = fig3
///
/// Keys may also appear before any section header. Overrides are `key=value`
/// or `section.key=value` and win over file values. A preset, from either
/// source, replaces the defaults before any other key is applied.
RunConfig parse_config(std::string_view text, std::span<const std::string> overrides);

/// Known keys grouped by section, for help output.
std::vector<std::pair<std::string_view, std::vector<std::string_view>>> config_keys();

}  // namespace hoaxnet
