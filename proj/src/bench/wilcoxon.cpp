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

#include "opmgr/bench/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "opmgr/error.hpp"

namespace opmgr::bench {

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    double alpha) {
  if (x.size() != y.size()) throw InvalidArgument("Wilcoxon needs paired samples of equal length");
  std::vector<double> diffs;
  diffs.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    if (d != 0.0) diffs.push_back(d);
  }
  WilcoxonResult result;
  result.pairs_used = diffs.size();
  if (diffs.size() < WilcoxonResult::kMinPairs) return result;

  std::sort(diffs.begin(), diffs.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  const double n = static_cast<double>(diffs.size());
  double tie_term = 0.0;
  for (std::size_t lo = 0; lo < diffs.size();) {
    std::size_t hi = lo;
    while (hi + 1 < diffs.size() && std::abs(diffs[hi + 1]) == std::abs(diffs[lo])) ++hi;
    const double rank = 0.5 * static_cast<double>(lo + hi) + 1.0;
    for (std::size_t k = lo; k <= hi; ++k) {
      (diffs[k] > 0 ? result.rank_sum_positive : result.rank_sum_negative) += rank;
    }
    const double t = static_cast<double>(hi - lo + 1);
    tie_term += t * t * t - t;
    lo = hi + 1;
  }

  result.applicable = true;
  result.statistic = std::min(result.rank_sum_positive, result.rank_sum_negative);
  const double mean = n * (n + 1.0) / 4.0;
  const double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
  result.z = (result.statistic - mean) / std::sqrt(variance);
  result.p_value = std::erfc(std::abs(result.z) / std::sqrt(2.0));
  result.significant = result.p_value < alpha;
  return result;
}

}  // namespace opmgr::bench
