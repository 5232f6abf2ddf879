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

#include <array>
#include <cstddef>
#include <vector>

#include "opmgr/operators/catalog.hpp"
#include "opmgr/random.hpp"

namespace opmgr::aos {

struct ScoreParams {
  /// Awarded for a new best, a local improvement, an accepted non-improving move.
  std::array<double, 3> sigma{10.0, 5.0, 1.0};
  double reaction = 0.1;
  int segment_length = 20;

  void validate() const;
};

enum class EpisodeOutcome { NewBest, LocalImprovement, AcceptedOnly, Nothing };

/// Roulette-wheel operator selection with segment-wise weight adaptation,
/// over a static catalog.
class ScoreState {
 public:
  ScoreState(std::size_t catalog_size, const ScoreParams& params);

  /// Draw proportional to the current weights.
  operators::OperatorId select(Rng& rng) const;

  /// Credit the operator used in the finished episode. At the end of each
  /// segment, w <- (1 - rho) * w + rho * score / uses for every used operator,
  /// then the counters reset.
  void record(operators::OperatorId id, EpisodeOutcome outcome);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& scores() const noexcept { return scores_; }
  const std::vector<int>& uses() const noexcept { return uses_; }
  /// For tests and restored runs.
  void set_weights(std::vector<double> weights);

 private:
  void close_segment();

  ScoreParams params_;
  std::vector<double> weights_;
  std::vector<double> scores_;
  std::vector<int> uses_;
  int episodes_in_segment_ = 0;
};

}  // namespace opmgr::aos
