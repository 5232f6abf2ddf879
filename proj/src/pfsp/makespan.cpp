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

#include "opmgr/pfsp/makespan.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "opmgr/error.hpp"

namespace opmgr::pfsp {

void validate_sequence(const Instance& instance, std::span<const JobId> sequence) {
  std::vector<bool> seen(instance.jobs(), false);
  for (JobId job : sequence) {
    if (job < 0 || job >= instance.jobs()) {
      throw InvalidSequence("job index " + std::to_string(job) + " outside 0.." +
                            std::to_string(instance.jobs() - 1));
    }
    if (seen[job]) throw InvalidSequence("job " + std::to_string(job) + " repeated");
    seen[job] = true;
  }
}

Time compute_makespan(const Instance& instance, std::span<const JobId> sequence) {
  validate_sequence(instance, sequence);
  const int m = instance.machines();
  std::vector<Time> completion(m, 0);
  for (JobId job : sequence) {
    const auto p = instance.job_times(job);
    Time previous_machine = 0;
    for (int i = 0; i < m; ++i) {
      completion[i] = std::max(completion[i], previous_machine) + p[i];
      previous_machine = completion[i];
    }
  }
  return sequence.empty() ? 0 : completion[m - 1];
}

Time schedule_idle_time(const Instance& instance, std::span<const JobId> sequence) {
  validate_sequence(instance, sequence);
  const int m = instance.machines();
  std::vector<Time> completion(m, 0);
  Time idle = 0;
  bool first = true;
  for (JobId job : sequence) {
    const auto p = instance.job_times(job);
    Time previous_machine = 0;
    for (int i = 0; i < m; ++i) {
      const Time start = std::max(completion[i], previous_machine);
      if (!first) idle += start - completion[i];
      completion[i] = start + p[i];
      previous_machine = completion[i];
    }
    first = false;
  }
  return idle;
}

std::span<const Time> InsertionEvaluator::evaluate(const Instance& instance,
                                                   std::span<const JobId> partial,
                                                   JobId job) {
  if (job < 0 || job >= instance.jobs()) {
    throw InvalidArgument("job index " + std::to_string(job) + " out of range");
  }
  seen_.assign(static_cast<std::size_t>(instance.jobs()), 0);
  for (JobId j : partial) {
    if (j < 0 || j >= instance.jobs() || seen_[j]) {
      throw InvalidSequence("partial sequence has an invalid or repeated job " + std::to_string(j));
    }
    seen_[j] = 1;
  }
  if (seen_[job]) {
    throw InvalidArgument("job " + std::to_string(job) + " already in the partial sequence");
  }
  instance_ = &instance;
  partial_ = partial;
  job_ = job;
  const std::size_t m = static_cast<std::size_t>(instance.machines());
  const std::size_t len = partial.size();
  machines_ = m;
  heads_.assign((len + 1) * m, 0);
  tails_.assign((len + 1) * m, 0);
  inserted_.assign((len + 1) * m, 0);
  prefix_idle_.assign(len + 1, 0);
  makespans_.assign(len + 1, 0);

  for (std::size_t t = 0; t < len; ++t) {
    const auto p = instance.job_times(partial[t]);
    const Time* above = &heads_[t * m];
    Time* row = &heads_[(t + 1) * m];
    Time gaps = 0;
    Time previous_machine = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Time start = std::max(above[i], previous_machine);
      gaps += start - above[i];
      row[i] = start + p[i];
      previous_machine = row[i];
    }
    prefix_idle_[t + 1] = prefix_idle_[t] + (t == 0 ? 0 : gaps);
  }

  for (std::size_t t = len; t-- > 0;) {
    const auto p = instance.job_times(partial[t]);
    const Time* below = &tails_[(t + 1) * m];
    Time* row = &tails_[t * m];
    Time next_machine = 0;
    for (std::size_t i = m; i-- > 0;) {
      row[i] = std::max(below[i], next_machine) + p[i];
      next_machine = row[i];
    }
  }

  const auto p = instance.job_times(job);
  for (std::size_t k = 0; k <= len; ++k) {
    const Time* head = &heads_[k * m];
    const Time* tail = &tails_[k * m];
    Time* row = &inserted_[k * m];
    Time previous_machine = 0;
    Time cmax = 0;
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = std::max(head[i], previous_machine) + p[i];
      previous_machine = row[i];
      cmax = std::max(cmax, row[i] + tail[i]);
    }
    makespans_[k] = cmax;
  }
  return makespans_;
}

Time InsertionEvaluator::idle_if_inserted(std::size_t position) const {
  if (instance_ == nullptr || position > partial_.size()) {
    throw InvalidArgument("idle_if_inserted called without a matching evaluate()");
  }
  const std::size_t m = machines_;
  const Time* head = &heads_[position * m];
  const Time* done = &inserted_[position * m];
  const auto p = instance_->job_times(job_);

  Time idle = prefix_idle_[position];
  if (position > 0) {
    for (std::size_t i = 0; i < m; ++i) idle += done[i] - p[i] - head[i];
  }
  scratch_.assign(done, done + m);
  for (std::size_t t = position; t < partial_.size(); ++t) {
    const auto q = instance_->job_times(partial_[t]);
    Time previous_machine = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Time start = std::max(scratch_[i], previous_machine);
      idle += start - scratch_[i];
      scratch_[i] = start + q[i];
      previous_machine = scratch_[i];
    }
  }
  return idle;
}

InsertionChoice InsertionEvaluator::best(const Instance& instance,
                                         std::span<const JobId> partial, JobId job,
                                         bool tie_break) {
  const auto makespans = evaluate(instance, partial, job);
  const Time lowest = *std::min_element(makespans.begin(), makespans.end());
  InsertionChoice choice{makespans.size(), lowest};
  Time best_idle = std::numeric_limits<Time>::max();
  for (std::size_t k = 0; k < makespans.size(); ++k) {
    if (makespans[k] != lowest) continue;
    if (choice.position == makespans.size()) {
      choice.position = k;
      if (!tie_break) break;
      continue;
    }
    if (best_idle == std::numeric_limits<Time>::max()) {
      best_idle = idle_if_inserted(choice.position);
    }
    const Time idle = idle_if_inserted(k);
    if (idle < best_idle) {
      best_idle = idle;
      choice.position = k;
    }
  }
  return choice;
}

std::vector<InsertionChoice> evaluate_all_insertions(const Instance& instance,
                                                     std::span<const JobId> partial,
                                                     JobId job) {
  InsertionEvaluator evaluator;
  const auto makespans = evaluator.evaluate(instance, partial, job);
  std::vector<InsertionChoice> out;
  out.reserve(makespans.size());
  for (std::size_t k = 0; k < makespans.size(); ++k) out.push_back({k, makespans[k]});
  return out;
}

std::size_t best_insertion_position(const Instance& instance,
                                    std::span<const JobId> partial, JobId job,
                                    bool tie_break) {
  InsertionEvaluator evaluator;
  return evaluator.best(instance, partial, job, tie_break).position;
}

}  // namespace opmgr::pfsp
