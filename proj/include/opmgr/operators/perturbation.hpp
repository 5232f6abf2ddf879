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

#include <span>
#include <vector>

#include "opmgr/operators/catalog.hpp"
#include "opmgr/pfsp/instance.hpp"
#include "opmgr/pfsp/makespan.hpp"
#include "opmgr/random.hpp"

namespace opmgr::operators {

/// Sequence with jobs extracted; `removed` keeps extraction order.
struct PartialSolution {
  std::vector<pfsp::JobId> sequence;
  std::vector<pfsp::JobId> removed;
};

/// Removes `d` distinct jobs chosen uniformly at random. Surviving jobs keep
/// their relative order. Requires 1 <= d < |sequence|.
PartialSolution destruct(std::span<const pfsp::JobId> sequence, int d, Rng& rng);

/// Reinserts `partial.removed` one by one, in removal order, following
/// `strategy`. Returns the complete solution with its makespan.
pfsp::Solution construct(const pfsp::Instance& instance, PartialSolution partial,
                         const ConstructionStrategy& strategy, Rng& rng,
                         pfsp::InsertionEvaluator& evaluator, bool tie_break = true);

pfsp::Solution construct(const pfsp::Instance& instance, PartialSolution partial,
                         const ConstructionStrategy& strategy, Rng& rng);

/// Position drawn with probability proportional to
/// (max(makespans) - makespans[k] + 1)^greediness.
std::size_t probabilistic_position(std::span<const pfsp::Time> makespans,
                                   double greediness, Rng& rng);

}  // namespace opmgr::operators
