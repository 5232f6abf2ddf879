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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "opmgr/pfsp/instance.hpp"

namespace opmgr::bench {

/// Taillard: optional label lines, a numeric line starting with "n m", then
/// m lines of n processing times (one line per machine).
/// VRF: a line "n m", then n job lines of m (machine index, time) pairs.
enum class InstanceFormat { Taillard, VRF };

std::string_view to_string(InstanceFormat format) noexcept;
std::optional<InstanceFormat> parse_format(std::string_view text);

/// Throws ParseError with the 1-based line/column of the first problem.
pfsp::Instance parse_instance(std::string_view text, InstanceFormat format);

/// Reads and parses a file; the instance is named after the file stem.
pfsp::Instance load_instance(const std::filesystem::path& path, InstanceFormat format);

/// Writes `instance` in a form parse_instance reads back. `seed` goes into
/// the Taillard header line when given.
void write_instance(std::ostream& out, const pfsp::Instance& instance, InstanceFormat format,
                    std::optional<std::int64_t> seed = std::nullopt);

/// Taillard's benchmark generator: linear congruential stream (a = 16807,
/// modulus 2^31 - 1) drawing U[1,99] times machine by machine.
pfsp::Instance generate_taillard(std::int64_t seed, int jobs, int machines);

/// Time seed of Taillard instance ta<number>, number in 1..120.
std::int64_t taillard_seed(int number);
/// (jobs, machines) of Taillard instance ta<number>.
std::pair<int, int> taillard_size(int number);

}  // namespace opmgr::bench
