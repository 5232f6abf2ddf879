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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace opmgr::pfsp {

/// 0-based job index. Files and CLI output use 1-based numbering.
using JobId = std::int32_t;
/// Processing times and completion times are exact integers.
using Time = std::int64_t;

/// Permutation flowshop instance: n jobs, m machines, p[i][j] = time of job j
/// on machine i. Stored job-major so one job's machine chain is contiguous.
class Instance {
 public:
  /// `rows` holds m rows of n times each (machine-major, as in Taillard files).
  explicit Instance(const std::vector<std::vector<Time>>& rows,
                    std::string name = {});

  int jobs() const noexcept { return jobs_; }
  int machines() const noexcept { return machines_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Time time(int machine, JobId job) const noexcept {
    return times_[static_cast<std::size_t>(job) * machines_ + machine];
  }
  /// Times of `job` on machines 0..m-1.
  std::span<const Time> job_times(JobId job) const noexcept {
    return {times_.data() + static_cast<std::size_t>(job) * machines_,
            static_cast<std::size_t>(machines_)};
  }
  Time job_total(JobId job) const noexcept { return job_totals_[job]; }
  Time total() const noexcept { return total_; }

  /// Machine-major copy of the matrix.
  std::vector<std::vector<Time>> rows() const;

 private:
  int jobs_ = 0;
  int machines_ = 0;
  std::vector<Time> times_;
  std::vector<Time> job_totals_;
  Time total_ = 0;
  std::string name_;
};

/// A complete (or, inside local search, partial) sequence with its makespan.
struct Solution {
  std::vector<JobId> sequence;
  Time makespan = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace opmgr::pfsp
