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

#include "opmgr/aos/learning.hpp"

#include <algorithm>
#include <ostream>

#include "opmgr/error.hpp"

namespace opmgr::aos {

void LearningParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in (0,1]");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in (0,1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw InvalidArgument("epsilon must lie in [0,1]");
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidArgument("beta must lie in (0,1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in [0,1]");
}

double calculate_reward(const EpisodeSnapshot& snapshot, double eta) {
  if (snapshot.local_before <= 0 || snapshot.best_before <= 0 || snapshot.local <= 0 ||
      snapshot.best <= 0) {
    throw InvalidArgument("reward needs positive makespans");
  }
  const double local = static_cast<double>(std::max<pfsp::Time>(snapshot.local_before - snapshot.local, 0)) /
                       static_cast<double>(snapshot.local_before);
  const double global = static_cast<double>(std::max<pfsp::Time>(snapshot.best_before - snapshot.best, 0)) /
                        static_cast<double>(snapshot.best_before);
  return eta * local + (1.0 - eta) * global;
}

SearchState next_state(const EpisodeSnapshot& snapshot) noexcept {
  return snapshot.best < snapshot.best_before ? SearchState::Improved : SearchState::Stuck;
}

LearningState::LearningState(std::size_t catalog_size, const LearningParams& params)
    : params_(params), epsilon_(params.epsilon) {
  params.validate();
  if (catalog_size == 0) throw InvalidArgument("Q-table needs a non-empty catalog");
  table_[0].assign(catalog_size, 0.0);
  table_[1].assign(catalog_size, 0.0);
}

void LearningState::update(SearchState s, OperatorId a, SearchState s_next, double reward,
                           std::span<const OperatorId> active) {
  if (active.empty()) throw StateCorruption("Q update over an empty active set");
  if (a >= catalog_size()) throw InvalidArgument("operator id outside the Q-table");
  const auto& future_row = table_[index(s_next)];
  double future = future_row.at(active.front());
  for (OperatorId id : active) future = std::max(future, future_row.at(id));
  double& value = mutable_row(s)[a];
  value += params_.alpha * (reward + params_.gamma * future - value);
}

OperatorId LearningState::select_action(SearchState s_next, std::span<const OperatorId> active,
                                        Rng& rng) {
  if (active.empty()) throw StateCorruption("selection from an empty active set");
  OperatorId chosen = active.front();
  if (active.size() > 1) {
    if (rng.unit() >= epsilon_) {
      const auto& values = table_[index(s_next)];
      double top = values.at(active.front());
      for (OperatorId id : active) top = std::max(top, values.at(id));
      std::size_t ties = 0;
      for (OperatorId id : active) ties += values[id] == top ? 1 : 0;
      std::size_t pick = ties == 1 ? 0 : rng.below(ties);
      for (OperatorId id : active) {
        if (values[id] != top) continue;
        if (pick-- == 0) {
          chosen = id;
          break;
        }
      }
    } else {
      chosen = active[rng.below(active.size())];
    }
  }
  epsilon_ *= params_.beta;
  ++selections_;
  return chosen;
}

void LearningState::write_table(std::ostream& out) const {
  out << "state";
  for (std::size_t a = 0; a < catalog_size(); ++a) out << "\tq" << a;
  out << '\n';
  for (std::size_t s = 0; s < 2; ++s) {
    out << s;
    for (double v : table_[s]) out << '\t' << v;
    out << '\n';
  }
}

Selection select_operator(LearningState& learning, const EpisodeSnapshot& snapshot,
                          portfolio::PortfolioState* portfolio, OperatorId action, Rng& rng) {
  Selection out;
  out.reward = calculate_reward(snapshot, learning.params().eta);
  out.next_state = next_state(snapshot);

  std::vector<OperatorId> everything;
  std::span<const OperatorId> active;
  if (portfolio != nullptr) {
    if (!portfolio->is_active(action)) {
      throw StateCorruption("selected operator is not in the active portfolio");
    }
    active = portfolio->active();
  } else {
    everything.resize(learning.catalog_size());
    for (std::size_t id = 0; id < everything.size(); ++id) everything[id] = id;
    active = everything;
  }
  learning.update(learning.state(), action, out.next_state, out.reward, active);

  if (portfolio != nullptr) {
    portfolio->determine(action, out.reward);
    active = portfolio->active();
  }
  out.next_action = learning.select_action(out.next_state, active, rng);
  learning.set_state(out.next_state);
  return out;
}

OperatorId select_random(std::span<const OperatorId> active, Rng& rng) {
  if (active.empty()) throw StateCorruption("selection from an empty active set");
  return active[rng.below(active.size())];
}

OperatorId first_action(std::size_t catalog_size, Rng& rng) {
  if (catalog_size == 0) throw ConfigError("operator catalog is empty");
  return rng.below(catalog_size);
}

}  // namespace opmgr::aos
