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

#include "opmgr/portfolio/portfolio.hpp"

#include <algorithm>
#include <string>

#include "opmgr/error.hpp"

namespace opmgr::portfolio {

PortfolioState::PortfolioState(std::size_t catalog_size, int tenure)
    : in_active_(catalog_size, true), tenure_(tenure) {
  if (catalog_size == 0) throw InvalidArgument("portfolio needs a non-empty catalog");
  if (tenure < 1) throw InvalidArgument("tabu tenure must be positive");
  active_.resize(catalog_size);
  for (std::size_t id = 0; id < catalog_size; ++id) active_[id] = id;
}

bool PortfolioState::is_active(OperatorId id) const {
  if (id >= in_active_.size()) {
    throw InvalidArgument("operator id " + std::to_string(id) + " outside the catalog");
  }
  return in_active_[id];
}

void PortfolioState::activate(OperatorId id) {
  active_.insert(std::lower_bound(active_.begin(), active_.end(), id), id);
  in_active_[id] = true;
}

void PortfolioState::determine(OperatorId last_action, double reward) {
  if (last_action >= in_active_.size() || !in_active_[last_action]) {
    throw StateCorruption("operator " + std::to_string(last_action) +
                          " finished an episode but is not active");
  }
  if (reward < 0.0) throw InvalidArgument("reward must be non-negative");

  // Entries already tabu before this call; a fresh death is not counted down.
  const std::size_t previously_tabu = tabu_.size();

  if (reward == 0.0 && active_.size() > 1) {
    active_.erase(std::lower_bound(active_.begin(), active_.end(), last_action));
    in_active_[last_action] = false;
    tabu_.push_back({last_action, tenure_});
  }

  for (std::size_t k = 0; k < previously_tabu; ++k) --tabu_[k].remaining;
  while (!tabu_.empty() && tabu_.front().remaining == 0) {
    activate(tabu_.front().id);
    tabu_.pop_front();
  }
}

void PortfolioState::check_invariants() const {
  if (active_.empty()) throw StateCorruption("active portfolio is empty");
  if (!std::is_sorted(active_.begin(), active_.end())) {
    throw StateCorruption("active set lost its ordering");
  }
  std::vector<int> seen(in_active_.size(), 0);
  for (auto id : active_) {
    if (!in_active_[id]) throw StateCorruption("active flag out of sync");
    ++seen[id];
  }
  for (const auto& entry : tabu_) {
    if (in_active_[entry.id]) throw StateCorruption("operator both active and tabu");
    if (entry.remaining < 1 || entry.remaining > tenure_) {
      throw StateCorruption("tabu tenure out of range");
    }
    ++seen[entry.id];
  }
  for (int count : seen) {
    if (count != 1) throw StateCorruption("active and tabu do not partition the catalog");
  }
}

}  // namespace opmgr::portfolio
