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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "opmgr/pfsp/instance.hpp"

namespace opmgr::bench {

/// Best-known makespans by instance name.
///
/// Text form: one "name value [optimal]" entry per line; '#' starts a
/// comment. The "optimal" flag marks values proven optimal.
class BestKnownRegistry {
 public:
  struct Entry {
    pfsp::Time makespan = 0;
    bool optimal = false;
  };

  /// Throws ParseError on malformed lines, non-positive values or duplicates.
  static BestKnownRegistry parse(std::string_view text);
  static BestKnownRegistry load(const std::filesystem::path& path);

  void add(const std::string& name, pfsp::Time makespan, bool optimal = false);
  std::optional<pfsp::Time> best_known(const std::string& name) const;
  /// Value when it is flagged as proven optimal.
  std::optional<pfsp::Time> proven_optimum(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.contains(name); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, Entry, std::less<>>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

}  // namespace opmgr::bench
