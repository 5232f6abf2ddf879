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

#include <vector>

#include "opmgr/pfsp/instance.hpp"
#include "opmgr/pfsp/makespan.hpp"
#include "opmgr/random.hpp"

namespace opmgr::pfsp {

struct NehOptions {
  bool tie_break = true;
  /// Run insertion local search on the growing partial sequence after each
  /// insertion. Needs `rng`.
  bool partial_local_search = false;
};

/// NEH: jobs by descending total processing time (ties: lower index first),
/// each inserted at its best position.
Solution neh_construct(const Instance& instance, const NehOptions& options = {},
                       Rng* rng = nullptr);

/// Insertion-neighborhood local search on a complete or partial sequence.
///
/// Each pass visits the jobs in a freshly shuffled order, removes each one and
/// reinserts it at its best position when that strictly lowers the makespan.
/// Stops after a pass without improvement, so the result is a fixpoint: no
/// single reinsertion improves it. Returns the final makespan.
Time insertion_local_search(const Instance& instance, std::vector<JobId>& sequence,
                            Rng& rng, InsertionEvaluator& evaluator,
                            bool tie_break = true);

/// Convenience overload working on a Solution.
Solution insertion_local_search(const Instance& instance, Solution start, Rng& rng,
                                bool tie_break = true);

}  // namespace opmgr::pfsp
