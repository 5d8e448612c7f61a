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

#include "hoaxnet/config.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace hoaxnet {
namespace {

struct Entry {
  std::string section;  // empty when unqualified
  std::string key;
  std::string value;
  std::string origin;
};

struct KeySpec {
  std::string_view section;
  std::string_view key;
};

constexpr KeySpec kKeys[] = {
    {"network", "family"},    {"network", "n"},
    {"network", "p"},         {"network", "f0"},
    {"network", "h00"},       {"network", "h01"},
    {"network", "h11"},       {"network", "fixed_graph"},
    {"model", "alpha"},       {"model", "beta"},
    {"model", "p_verify"},    {"model", "p_forget"},
    {"run", "preset"},        {"run", "steps"},
    {"run", "iterations"},    {"run", "seed"},
    {"run", "window"},        {"run", "believer_fraction"},
    {"run", "factchecker_fraction"}, {"run", "seeding_scope"},
    {"run", "workers"},       {"run", "out"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const KeySpec* find_key(std::string_view key) {
  for (const auto& k : kKeys) {
    if (k.key == key) return &k;
  }
  return nullptr;
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_list(std::string_view text, std::vector<double>& out) {
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    double v;
    if (!parse_double(text.substr(0, comma), v)) return false;
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  out = std::move(values);
  return true;
}

bool parse_bool(std::string_view text, bool& out) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "1") return out = true, true;
  if (text == "false" || text == "no" || text == "0") return out = false, true;
  return false;
}

class Applier {
 public:
  Applier(RunConfig& config, std::vector<std::string>& errors)
      : config_(config), errors_(errors) {}

  void apply(const Entry& e) {
    SweepSpec& s = config_.spec;
    const std::string_view k = e.key;
    const std::string_view v = e.value;
    bool ok = true;
    std::string_view expected;
    if (k == "family") {
      expected = "er or sbm";
      if (v == "er") s.family = NetworkFamily::kEr;
      else if (v == "sbm") s.family = NetworkFamily::kSbm;
      else ok = false;
    } else if (k == "n") {
      expected = "a positive integer";
      ok = parse_int(v, s.n);
    } else if (k == "p" || k == "f0" || k == "h00" || k == "h01" || k == "h11" || k == "alpha") {
      expected = "a number or comma-separated list of numbers";
      std::vector<double>& list = k == "p"     ? s.p
                                  : k == "f0"  ? s.f0
                                  : k == "h00" ? s.h00
                                  : k == "h01" ? s.h01
                                  : k == "h11" ? s.h11
                                               : s.alpha;
      ok = parse_list(v, list);
    } else if (k == "fixed_graph") {
      expected = "true or false";
      ok = parse_bool(v, s.fixed_graph);
    } else if (k == "beta" || k == "p_verify" || k == "p_forget" ||
               k == "believer_fraction" || k == "factchecker_fraction") {
      expected = "a number";
      double& target = k == "beta"                ? s.beta
                       : k == "p_verify"          ? s.p_verify
                       : k == "p_forget"          ? s.p_forget
                       : k == "believer_fraction" ? s.initial.believer_fraction
                                                  : s.initial.factchecker_fraction;
      ok = parse_double(v, target);
    } else if (k == "seeding_scope") {
      expected = "whole, minority or majority";
      if (v == "whole") s.initial.scope = SeedingScope::kWholeNetwork;
      else if (v == "minority") s.initial.scope = SeedingScope::kMinorityOnly;
      else if (v == "majority") s.initial.scope = SeedingScope::kMajorityOnly;
      else ok = false;
    } else if (k == "steps") {
      expected = "a non-negative integer";
      ok = parse_int(v, s.steps);
    } else if (k == "iterations") {
      expected = "a positive integer";
      ok = parse_int(v, s.iterations);
    } else if (k == "window") {
      expected = "a positive integer";
      ok = parse_int(v, s.window);
    } else if (k == "seed") {
      expected = "an unsigned 64-bit integer";
      ok = parse_int(v, s.master_seed);
    } else if (k == "workers") {
      expected = "a positive integer";
      std::size_t w = 0;
      ok = parse_int(v, w);
      if (ok) config_.workers = w;
    } else if (k == "out") {
      expected = "a path";
      ok = !v.empty();
      if (ok) config_.output = std::string(v);
    }
    if (!ok) {
      errors_.push_back(e.key + ": expected " + std::string(expected) + ", got '" + e.value +
                        "' (" + e.origin + ")");
    }
  }

 private:
  RunConfig& config_;
  std::vector<std::string>& errors_;
};

std::string format_errors(const std::vector<std::string>& errors) {
  std::ostringstream msg;
  msg << "invalid configuration:";
  for (const auto& e : errors) msg << "\n  " << e;
  return msg.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(format_errors(errors)), errors_(std::move(errors)) {}

std::vector<std::pair<std::string_view, std::vector<std::string_view>>> config_keys() {
  std::vector<std::pair<std::string_view, std::vector<std::string_view>>> out;
  for (const auto& k : kKeys) {
    if (out.empty() || out.back().first != k.section) out.push_back({k.section, {}});
    out.back().second.push_back(k.key);
  }
  return out;
}

RunConfig parse_config(std::string_view text, std::span<const std::string> overrides) {
  std::vector<std::string> errors;
  std::vector<Entry> entries;

  auto accept = [&](Entry e) {
    const KeySpec* spec = find_key(e.key);
    if (spec == nullptr) {
      errors.push_back(e.key + ": unknown key (" + e.origin + ")");
      return;
    }
    if (!e.section.empty() && e.section != spec->section) {
      errors.push_back(e.key + ": belongs in [" + std::string(spec->section) + "], not [" +
                       e.section + "] (" + e.origin + ")");
      return;
    }
    e.value = std::string(trim(e.value));
    entries.push_back(std::move(e));
  };

  std::string section;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_no;
    const std::string origin = "line " + std::to_string(line_no);
    std::string_view line = raw;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back(origin + ": malformed section header");
        continue;
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "network" && section != "model" && section != "run") {
        errors.push_back(origin + ": unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back(origin + ": expected 'key = value'");
      continue;
    }
    accept({section, std::string(trim(line.substr(0, eq))), std::string(line.substr(eq + 1)),
            origin});
  }

  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      errors.push_back("override '" + item + "': expected key=value");
      continue;
    }
    std::string key(trim(std::string_view(item).substr(0, eq)));
    std::string qualifier;
    if (const auto dot = key.find('.'); dot != std::string::npos) {
      qualifier = key.substr(0, dot);
      key = key.substr(dot + 1);
    }
    accept({qualifier, key, item.substr(eq + 1), "override"});
  }

  RunConfig config;
  const auto preset_entry = std::find_if(entries.rbegin(), entries.rend(),
                                         [](const Entry& e) { return e.key == "preset"; });
  if (preset_entry != entries.rend()) {
    try {
      config.spec = make_preset(preset_entry->value).spec;
      config.preset = preset_entry->value;
    } catch (const std::invalid_argument& e) {
      errors.push_back("preset: " + std::string(e.what()));
    }
  }

  Applier applier(config, errors);
  for (const Entry& e : entries) {
    if (e.key != "preset") applier.apply(e);
  }

  for (auto& e : config.spec.violations()) errors.push_back(std::move(e));
  if (config.workers && *config.workers == 0) errors.push_back("workers: must be at least 1");

  if (!errors.empty()) throw ConfigError(std::move(errors));
  return config;
}

}  // namespace hoaxnet
