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

#include <cstddef>
#include <span>

namespace opmgr::bench {

struct WilcoxonResult {
  /// False when fewer than `kMinPairs` non-zero differences remain.
  bool applicable = false;
  std::size_t pairs_used = 0;
  double rank_sum_positive = 0.0;  ///< W+ over d = x - y
  double rank_sum_negative = 0.0;  ///< W-
  double statistic = 0.0;          ///< min(W+, W-)
  double z = 0.0;
  double p_value = 1.0;  ///< two-sided
  bool significant = false;

  static constexpr std::size_t kMinPairs = 5;
};

/// Two-sided Wilcoxon signed-rank test on paired samples.
///
/// Zero differences are dropped, tied |d| get average ranks, and the p-value
/// comes from the normal approximation with tie-corrected variance (no
/// continuity correction). Never throws on degenerate data; mismatched
/// lengths throw InvalidArgument.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    double alpha = 0.05);

}  // namespace opmgr::bench
