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
#include <vector>

#include "opmgr/pfsp/instance.hpp"

namespace opmgr::pfsp {

/// Throws InvalidSequence unless `sequence` lists distinct jobs of `instance`.
void validate_sequence(const Instance& instance, std::span<const JobId> sequence);

/// C_max of a (possibly partial) sequence by the completion-time recursion.
/// Empty sequences have makespan 0.
Time compute_makespan(const Instance& instance, std::span<const JobId> sequence);

/// Sum over machines of the gaps between consecutive operations in the
/// semi-active schedule of `sequence`. Time before a machine's first
/// operation is not idle.
Time schedule_idle_time(const Instance& instance, std::span<const JobId> sequence);

/// Inserting `job` before partial[position]; position == partial.size()
/// appends.
struct InsertionChoice {
  std::size_t position = 0;
  Time makespan = 0;
};

/// Evaluates every insertion position of one job into a partial sequence in
/// O(|partial| * m) using head/tail completion tables. Buffers are reused
/// across calls, so keep one evaluator per run.
class InsertionEvaluator {
 public:
  /// Entry k is the makespan after inserting `job` at position k. The span
  /// stays valid until the next call.
  std::span<const Time> evaluate(const Instance& instance,
                                 std::span<const JobId> partial, JobId job);

  /// Idle time (schedule_idle_time) of the sequence produced by inserting the
  /// last evaluated job at `position`. Only valid after evaluate().
  Time idle_if_inserted(std::size_t position) const;

  /// Minimum-makespan position. With `tie_break`, ties go to the lowest
  /// induced idle time; any remaining tie goes to the lowest position.
  InsertionChoice best(const Instance& instance, std::span<const JobId> partial,
                       JobId job, bool tie_break);

 private:
  const Instance* instance_ = nullptr;
  std::span<const JobId> partial_;
  JobId job_ = 0;
  std::size_t machines_ = 0;
  // heads_: row t+1 holds completion times of partial[0..t]; row 0 is zero.
  std::vector<Time> heads_;
  // tails_: row t holds the tail length from partial[t] to the end; row L is zero.
  std::vector<Time> tails_;
  // inserted_: row k holds completion times of the inserted job at position k.
  std::vector<Time> inserted_;
  // prefix_idle_[t]: idle accumulated by partial[0..t-1].
  std::vector<Time> prefix_idle_;
  std::vector<Time> makespans_;
  mutable std::vector<Time> scratch_;
  std::vector<char> seen_;
};

/// Convenience wrapper returning (position, makespan) for every position.
std::vector<InsertionChoice> evaluate_all_insertions(const Instance& instance,
                                                     std::span<const JobId> partial,
                                                     JobId job);

std::size_t best_insertion_position(const Instance& instance,
                                    std::span<const JobId> partial, JobId job,
                                    bool tie_break);

}  // namespace opmgr::pfsp
