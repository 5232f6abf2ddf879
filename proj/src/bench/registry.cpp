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

#include "opmgr/bench/registry.hpp"

#include <fstream>
#include <sstream>

#include "opmgr/error.hpp"

namespace opmgr::bench {

BestKnownRegistry BestKnownRegistry::parse(std::string_view text) {
  BestKnownRegistry registry;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, value, flag, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> value)) {
      throw ParseError(ParseErrorKind::Truncated, number, line.find(name) + 1,
                       "entry '" + name + "' has no value");
    }
    const auto column = line.find(value, line.find(name) + name.size()) + 1;
    std::size_t used = 0;
    long long makespan = 0;
    try {
      makespan = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || used == 0) {
      throw ParseError(ParseErrorKind::NonInteger, number, column,
                       "'" + value + "' is not an integer");
    }
    bool optimal = false;
    if (fields >> flag) {
      if (flag != "optimal" || (fields >> extra)) {
        throw ParseError(ParseErrorKind::DimensionMismatch, number, line.find(flag) + 1,
                         "unexpected trailing field '" + flag + "'");
      }
      optimal = true;
    }
    if (makespan <= 0) {
      throw ParseError(ParseErrorKind::NonInteger, number, column,
                       "best-known makespan must be positive");
    }
    if (registry.contains(name)) {
      throw ParseError(ParseErrorKind::DimensionMismatch, number, 1,
                       "duplicate entry for '" + name + "'");
    }
    registry.add(name, makespan, optimal);
  }
  return registry;
}

BestKnownRegistry BestKnownRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void BestKnownRegistry::add(const std::string& name, pfsp::Time makespan, bool optimal) {
  if (makespan <= 0) throw InvalidArgument("best-known makespan must be positive");
  entries_[name] = {makespan, optimal};
}

std::optional<pfsp::Time> BestKnownRegistry::best_known(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.makespan;
}

std::optional<pfsp::Time> BestKnownRegistry::proven_optimum(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end() || !it->second.optimal) return std::nullopt;
  return it->second.makespan;
}

}  // namespace opmgr::bench
