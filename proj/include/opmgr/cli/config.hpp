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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opmgr/engine/config.hpp"

namespace opmgr::cli {

/// Flat key=value settings with dotted section prefixes (engine.*, catalog.*,
/// aos.*, plan.*, io.*). '#' starts a comment. Unknown keys are rejected.
class KeyValueConfig {
 public:
  /// Throws ConfigError naming the offending line.
  static KeyValueConfig parse(std::string_view text);
  static KeyValueConfig load(const std::filesystem::path& path);

  /// Throws ConfigError for keys outside the schema.
  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  bool contains(const std::string& key) const { return values_.contains(key); }
  const std::map<std::string, std::string>& values() const noexcept { return values_; }

  std::optional<std::int64_t> get_int(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;
  std::optional<std::vector<std::string>> get_list(const std::string& key) const;

  static const std::vector<std::string>& known_keys();

 private:
  std::map<std::string, std::string> values_;
};

/// Engine settings from engine.*, catalog.* and aos.* keys over `base`.
/// Budget fields are left for the caller, which knows the instance size.
engine::EngineConfig engine_config(const KeyValueConfig& config, engine::EngineConfig base = {});

}  // namespace opmgr::cli
