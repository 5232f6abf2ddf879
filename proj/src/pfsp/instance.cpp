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

#include "opmgr/pfsp/instance.hpp"

#include <string>

#include "opmgr/error.hpp"

namespace opmgr::pfsp {

Instance::Instance(const std::vector<std::vector<Time>>& rows, std::string name)
    : name_(std::move(name)) {
  if (rows.empty()) throw InvalidArgument("instance needs at least one machine");
  machines_ = static_cast<int>(rows.size());
  jobs_ = static_cast<int>(rows.front().size());
  if (jobs_ == 0) throw InvalidArgument("instance needs at least one job");
  times_.assign(static_cast<std::size_t>(jobs_) * machines_, 0);
  job_totals_.assign(jobs_, 0);
  for (int i = 0; i < machines_; ++i) {
    if (static_cast<int>(rows[i].size()) != jobs_) {
      throw InvalidArgument("machine row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(jobs_));
    }
    for (int j = 0; j < jobs_; ++j) {
      const Time p = rows[i][j];
      if (p < 0) throw InvalidArgument("negative processing time");
      times_[static_cast<std::size_t>(j) * machines_ + i] = p;
      job_totals_[j] += p;
      total_ += p;
    }
  }
}

std::vector<std::vector<Time>> Instance::rows() const {
  std::vector<std::vector<Time>> out(machines_, std::vector<Time>(jobs_));
  for (int i = 0; i < machines_; ++i)
    for (int j = 0; j < jobs_; ++j) out[i][j] = time(i, j);
  return out;
}

}  // namespace opmgr::pfsp
