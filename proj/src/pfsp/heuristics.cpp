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

#include "opmgr/pfsp/heuristics.hpp"

#include <algorithm>
#include <numeric>

#include "opmgr/error.hpp"

namespace opmgr::pfsp {

Solution neh_construct(const Instance& instance, const NehOptions& options, Rng* rng) {
  if (options.partial_local_search && rng == nullptr) {
    throw InvalidArgument("NEH partial local search needs a random source");
  }
  std::vector<JobId> order(instance.jobs());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](JobId a, JobId b) {
    return instance.job_total(a) > instance.job_total(b);
  });

  InsertionEvaluator evaluator;
  Solution solution;
  solution.sequence.reserve(order.size());
  solution.sequence.push_back(order.front());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto choice = evaluator.best(instance, solution.sequence, order[k], options.tie_break);
    solution.sequence.insert(solution.sequence.begin() + choice.position, order[k]);
    if (options.partial_local_search) {
      insertion_local_search(instance, solution.sequence, *rng, evaluator, options.tie_break);
    }
  }
  solution.makespan = compute_makespan(instance, solution.sequence);
  return solution;
}

Time insertion_local_search(const Instance& instance, std::vector<JobId>& sequence,
                            Rng& rng, InsertionEvaluator& evaluator, bool tie_break) {
  Time current = compute_makespan(instance, sequence);
  if (sequence.size() < 2) return current;

  std::vector<JobId> order;
  bool improved = true;
  while (improved) {
    improved = false;
    order = sequence;
    rng.shuffle(std::span<JobId>(order));
    for (JobId job : order) {
      const auto at = std::find(sequence.begin(), sequence.end(), job);
      const auto original = static_cast<std::size_t>(at - sequence.begin());
      sequence.erase(at);
      const auto choice = evaluator.best(instance, sequence, job, tie_break);
      if (choice.makespan < current) {
        sequence.insert(sequence.begin() + choice.position, job);
        current = choice.makespan;
        improved = true;
      } else {
        sequence.insert(sequence.begin() + original, job);
      }
    }
  }
  return current;
}

Solution insertion_local_search(const Instance& instance, Solution start, Rng& rng,
                                bool tie_break) {
  InsertionEvaluator evaluator;
  start.makespan = insertion_local_search(instance, start.sequence, rng, evaluator, tie_break);
  return start;
}

}  // namespace opmgr::pfsp
