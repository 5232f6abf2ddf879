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

#include "opmgr/aos/score_based.hpp"

#include <algorithm>
#include <numeric>

#include "opmgr/error.hpp"

namespace opmgr::aos {

void ScoreParams::validate() const {
  for (double s : sigma) {
    if (!(s >= 0.0)) throw InvalidArgument("score increments must be non-negative");
  }
  if (!(reaction > 0.0 && reaction < 1.0)) throw InvalidArgument("reaction factor must lie in (0,1)");
  if (segment_length < 1) throw InvalidArgument("segment length must be positive");
}

ScoreState::ScoreState(std::size_t catalog_size, const ScoreParams& params)
    : params_(params),
      weights_(catalog_size, 1.0),
      scores_(catalog_size, 0.0),
      uses_(catalog_size, 0) {
  params.validate();
  if (catalog_size == 0) throw InvalidArgument("score selector needs a non-empty catalog");
}

void ScoreState::set_weights(std::vector<double> weights) {
  if (weights.size() != weights_.size()) throw InvalidArgument("weight vector size mismatch");
  weights_ = std::move(weights);
}

operators::OperatorId ScoreState::select(Rng& rng) const {
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw StateCorruption("negative operator weight");
    total += w;
  }
  if (!(total > 0.0)) throw StateCorruption("all operator weights are zero");
  const double draw = rng.unit() * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t id = 0; id < weights_.size(); ++id) {
    if (weights_[id] <= 0.0) continue;
    running += weights_[id];
    last_positive = id;
    if (draw < running) return id;
  }
  return last_positive;
}

void ScoreState::record(operators::OperatorId id, EpisodeOutcome outcome) {
  if (id >= weights_.size()) throw InvalidArgument("operator id outside the catalog");
  ++uses_[id];
  switch (outcome) {
    case EpisodeOutcome::NewBest: scores_[id] += params_.sigma[0]; break;
    case EpisodeOutcome::LocalImprovement: scores_[id] += params_.sigma[1]; break;
    case EpisodeOutcome::AcceptedOnly: scores_[id] += params_.sigma[2]; break;
    case EpisodeOutcome::Nothing: break;
  }
  if (++episodes_in_segment_ == params_.segment_length) close_segment();
}

void ScoreState::close_segment() {
  for (std::size_t id = 0; id < weights_.size(); ++id) {
    if (uses_[id] == 0) continue;
    weights_[id] = (1.0 - params_.reaction) * weights_[id] +
                   params_.reaction * scores_[id] / static_cast<double>(uses_[id]);
  }
  std::fill(scores_.begin(), scores_.end(), 0.0);
  std::fill(uses_.begin(), uses_.end(), 0);
  episodes_in_segment_ = 0;
}

}  // namespace opmgr::aos
