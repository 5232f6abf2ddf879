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
#include <span>
#include <vector>

#include "opmgr/pfsp/instance.hpp"

namespace opmgr::bench {

/// Relative percentage deviation from the best-known makespan. Negative when
/// the best-known value was beaten.
double rpd(pfsp::Time makespan, pfsp::Time best_known);

/// Mean of a non-empty collection of RPDs.
double arpd(std::span<const double> rpds);

/// (n * m / 2) * t milliseconds.
std::int64_t time_budget_ms(int jobs, int machines, int timescale);

/// Min-max scaling to [0,1]; a constant input maps to all zeros.
std::vector<double> normalize(std::span<const double> values);

}  // namespace opmgr::bench
