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
#include <deque>
#include <vector>

#include "opmgr/operators/catalog.hpp"

namespace opmgr::portfolio {

using operators::OperatorId;

struct TabuEntry {
  OperatorId id = 0;
  int remaining = 0;

  friend bool operator==(const TabuEntry&, const TabuEntry&) = default;
};

/// Active operators plus a FIFO tabu list of temporarily excluded ones.
///
/// Invariants: active and tabu partition the catalog, active is never empty,
/// every remaining tenure lies in [1, tenure].
class PortfolioState {
 public:
  /// All `catalog_size` operators start active with an empty tabu list.
  PortfolioState(std::size_t catalog_size, int tenure);

  /// End-of-episode update for the operator used in the episode.
  ///
  /// A zero reward moves `last_action` to the back of the tabu list with the
  /// full tenure, unless it is the only active operator. Then every entry that
  /// was already tabu before this call counts down by one, and entries that
  /// reach zero rejoin the active set in FIFO order. Throws StateCorruption if
  /// `last_action` is not active.
  void determine(OperatorId last_action, double reward);

  bool is_active(OperatorId id) const;

  /// Active ids in ascending order.
  const std::vector<OperatorId>& active() const noexcept { return active_; }
  const std::deque<TabuEntry>& tabu() const noexcept { return tabu_; }
  int tenure() const noexcept { return tenure_; }
  std::size_t catalog_size() const noexcept { return in_active_.size(); }

  /// Throws StateCorruption if an invariant is broken.
  void check_invariants() const;

 private:
  void activate(OperatorId id);

  std::vector<OperatorId> active_;
  std::deque<TabuEntry> tabu_;
  std::vector<bool> in_active_;
  int tenure_;
};

}  // namespace opmgr::portfolio
