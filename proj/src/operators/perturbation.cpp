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

#include "opmgr/operators/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opmgr/error.hpp"

namespace opmgr::operators {

using pfsp::JobId;
using pfsp::Time;

PartialSolution destruct(std::span<const JobId> sequence, int d, Rng& rng) {
  if (d < 1 || static_cast<std::size_t>(d) >= sequence.size()) {
    throw InvalidArgument("destruction size " + std::to_string(d) +
                          " needs 1 <= d < " + std::to_string(sequence.size()));
  }
  PartialSolution out;
  out.sequence.assign(sequence.begin(), sequence.end());
  out.removed.reserve(d);
  for (int k = 0; k < d; ++k) {
    const auto index = rng.below(out.sequence.size());
    out.removed.push_back(out.sequence[index]);
    out.sequence.erase(out.sequence.begin() + static_cast<std::ptrdiff_t>(index));
  }
  return out;
}

std::size_t probabilistic_position(std::span<const Time> makespans, double greediness,
                                   Rng& rng) {
  const Time worst = *std::max_element(makespans.begin(), makespans.end());
  std::vector<double> cumulative(makespans.size());
  double total = 0.0;
  for (std::size_t k = 0; k < makespans.size(); ++k) {
    total += std::pow(static_cast<double>(worst - makespans[k] + 1), greediness);
    cumulative[k] = total;
  }
  const double draw = rng.unit() * total;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), draw);
  return std::min<std::size_t>(it - cumulative.begin(), makespans.size() - 1);
}

pfsp::Solution construct(const pfsp::Instance& instance, PartialSolution partial,
                         const ConstructionStrategy& strategy, Rng& rng,
                         pfsp::InsertionEvaluator& evaluator, bool tie_break) {
  if (partial.removed.empty()) throw InvalidArgument("nothing to reinsert");
  strategy.validate();
  auto& sequence = partial.sequence;
  sequence.reserve(sequence.size() + partial.removed.size());
  for (JobId job : partial.removed) {
    std::size_t position = 0;
    switch (strategy.kind) {
      case StrategyKind::Best:
        position = evaluator.best(instance, sequence, job, tie_break).position;
        break;
      case StrategyKind::Random:
        position = rng.below(sequence.size() + 1);
        break;
      case StrategyKind::SemiRandom:
        if (rng.unit() < strategy.semi_random_fraction) {
          position = evaluator.best(instance, sequence, job, tie_break).position;
        } else {
          position = rng.below(sequence.size() + 1);
        }
        break;
      case StrategyKind::Probabilistic:
        position = probabilistic_position(evaluator.evaluate(instance, sequence, job),
                                          strategy.greediness, rng);
        break;
    }
    sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(position), job);
  }
  pfsp::Solution out;
  out.makespan = pfsp::compute_makespan(instance, sequence);
  out.sequence = std::move(sequence);
  return out;
}

pfsp::Solution construct(const pfsp::Instance& instance, PartialSolution partial,
                         const ConstructionStrategy& strategy, Rng& rng) {
  pfsp::InsertionEvaluator evaluator;
  return construct(instance, std::move(partial), strategy, rng, evaluator);
}

}  // namespace opmgr::operators
