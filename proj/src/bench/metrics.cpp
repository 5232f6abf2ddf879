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

#include "opmgr/bench/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "opmgr/error.hpp"

namespace opmgr::bench {

double rpd(pfsp::Time makespan, pfsp::Time best_known) {
  if (best_known <= 0) throw InvalidArgument("best-known makespan must be positive");
  return 100.0 * static_cast<double>(makespan - best_known) / static_cast<double>(best_known);
}

double arpd(std::span<const double> rpds) {
  if (rpds.empty()) throw InvalidArgument("ARPD of an empty collection");
  return std::accumulate(rpds.begin(), rpds.end(), 0.0) / static_cast<double>(rpds.size());
}

std::int64_t time_budget_ms(int jobs, int machines, int timescale) {
  if (jobs < 0 || machines < 0 || timescale < 0) {
    throw InvalidArgument("time budget inputs must be non-negative");
  }
  // n*m*t is even or the half millisecond is dropped.
  return static_cast<std::int64_t>(jobs) * machines * timescale / 2;
}

std::vector<double> normalize(std::span<const double> values) {
  if (values.empty()) return {};
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double low = *lo;
  const double range = *hi - low;
  std::vector<double> out(values.size(), 0.0);
  if (range > 0.0) {
    for (std::size_t k = 0; k < values.size(); ++k) out[k] = (values[k] - low) / range;
  }
  return out;
}

}  // namespace opmgr::bench
