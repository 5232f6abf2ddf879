// Copyright 2026 The opmgr Authors
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

#include "opmgr/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "opmgr/error.hpp"

namespace opmgr::cli {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

const std::vector<std::string>& KeyValueConfig::known_keys() {
  static const std::vector<std::string> keys{
      "engine.variant",      "engine.episode_length", "engine.tau",
      "engine.partial_ls",   "engine.tie_break",      "engine.fixed_d",
      "engine.seed",         "engine.budget_mode",    "engine.iterations",
      "engine.t",            "engine.budget_ms",      "engine.lower_bound",
      "catalog.d_values",    "catalog.strategies",    "catalog.semi_random_fraction",
      "catalog.greediness",  "aos.epsilon",           "aos.alpha",
      "aos.beta",            "aos.gamma",             "aos.eta",
      "aos.tenure",          "aos.score_sigma",       "aos.score_reaction",
      "aos.score_segment",   "plan.variants",         "plan.reps",
      "plan.t",              "plan.seed",             "plan.threads",
      "plan.stop_at_optimum", "io.instance",          "io.dataset",
      "io.format",           "io.registry",           "io.out",
      "io.trace"};
  return keys;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected key=value");
    }
    try {
      config.set(trim(std::string_view(line).substr(0, eq)),
                 trim(std::string_view(line).substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return config;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
    throw ConfigError("unknown key '" + key + "'");
  }
  values_[key] = value;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> KeyValueConfig::get_int(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
  if (ec != std::errc() || ptr != raw->data() + raw->size()) {
    throw ConfigError(key + ": '" + *raw + "' is not an integer");
  }
  return value;
}

std::optional<double> KeyValueConfig::get_double(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(*raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != raw->size()) throw ConfigError(key + ": '" + *raw + "' is not a number");
  return value;
}

std::optional<bool> KeyValueConfig::get_bool(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  if (*raw == "true" || *raw == "1" || *raw == "on") return true;
  if (*raw == "false" || *raw == "0" || *raw == "off") return false;
  throw ConfigError(key + ": '" + *raw + "' is not a boolean");
}

std::optional<std::vector<std::string>> KeyValueConfig::get_list(const std::string& key) const {
  const auto raw = get(key);
  if (!raw) return std::nullopt;
  std::vector<std::string> items;
  std::istringstream in(*raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw ConfigError(key + ": empty list");
  return items;
}

engine::EngineConfig engine_config(const KeyValueConfig& config, engine::EngineConfig base) {
  auto to_int = [](const std::string& key, const std::string& text) {
    KeyValueConfig probe;
    probe.set(key, text);
    return *probe.get_int(key);
  };
  if (auto v = config.get("engine.variant")) {
    const auto parsed = engine::parse_variant(*v);
    if (!parsed) throw ConfigError("engine.variant: unknown variant '" + *v + "'");
    base.variant = *parsed;
  }
  if (auto v = config.get_int("engine.episode_length")) base.episode_length = static_cast<int>(*v);
  if (auto v = config.get_double("engine.tau")) base.tau = *v;
  if (auto v = config.get_bool("engine.partial_ls")) base.partial_local_search = *v;
  if (auto v = config.get_bool("engine.tie_break")) base.tie_break = *v;
  if (auto v = config.get_int("engine.fixed_d")) base.fixed_d = static_cast<int>(*v);
  if (auto v = config.get_int("engine.seed")) base.seed = static_cast<std::uint64_t>(*v);
  if (auto v = config.get_int("engine.lower_bound")) base.lower_bound = *v;
  if (auto v = config.get_int("engine.iterations")) base.budget.iterations = *v;
  if (auto v = config.get("engine.budget_mode")) {
    if (*v == "time") {
      base.budget.mode = engine::BudgetMode::Time;
    } else if (*v == "iters" || *v == "iterations") {
      base.budget.mode = engine::BudgetMode::Iterations;
    } else {
      throw ConfigError("engine.budget_mode: expected time or iters, got '" + *v + "'");
    }
  }
  if (auto list = config.get_list("catalog.d_values")) {
    base.catalog.d_values.clear();
    for (const auto& item : *list) base.catalog.d_values.insert(static_cast<int>(to_int("catalog.d_values", item)));
  }
  if (auto list = config.get_list("catalog.strategies")) {
    base.catalog.strategies.clear();
    for (const auto& item : *list) {
      const auto kind = operators::parse_strategy(item);
      if (!kind) throw ConfigError("catalog.strategies: unknown strategy '" + item + "'");
      base.catalog.strategies.insert(*kind);
    }
  }
  if (auto v = config.get_double("catalog.semi_random_fraction")) base.catalog.semi_random_fraction = *v;
  if (auto v = config.get_double("catalog.greediness")) base.catalog.greediness = *v;
  if (auto v = config.get_double("aos.epsilon")) base.learning.epsilon = *v;
  if (auto v = config.get_double("aos.alpha")) base.learning.alpha = *v;
  if (auto v = config.get_double("aos.beta")) base.learning.beta = *v;
  if (auto v = config.get_double("aos.gamma")) base.learning.gamma = *v;
  if (auto v = config.get_double("aos.eta")) base.learning.eta = *v;
  if (auto v = config.get_int("aos.tenure")) base.tenure = static_cast<int>(*v);
  if (auto list = config.get_list("aos.score_sigma")) {
    if (list->size() != 3) throw ConfigError("aos.score_sigma: expected three values");
    for (std::size_t k = 0; k < 3; ++k) {
      KeyValueConfig probe;
      probe.set("aos.score_sigma", (*list)[k]);
      base.score.sigma[k] = *probe.get_double("aos.score_sigma");
    }
  }
  if (auto v = config.get_double("aos.score_reaction")) base.score.reaction = *v;
  if (auto v = config.get_int("aos.score_segment")) base.score.segment_length = static_cast<int>(*v);
  base.validate();
  return base;
}

}  // namespace opmgr::cli
