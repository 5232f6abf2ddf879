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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "opmgr/operators/catalog.hpp"
#include "opmgr/pfsp/instance.hpp"
#include "opmgr/portfolio/portfolio.hpp"
#include "opmgr/random.hpp"

namespace opmgr::aos {

using operators::OperatorId;

/// Search state: 0 while stuck in a local optimum, 1 after the best-so-far
/// improved during the last episode.
enum class SearchState : int { Stuck = 0, Improved = 1 };

struct LearningParams {
  double epsilon = 0.8;
  double alpha = 0.6;
  double beta = 0.996;
  double gamma = 0.8;
  double eta = 0.3;

  void validate() const;
};

/// Makespans bracketing one episode.
struct EpisodeSnapshot {
  pfsp::Time local_before = 0;  ///< current solution at episode start
  pfsp::Time best_before = 0;   ///< best-so-far at episode start
  pfsp::Time local = 0;         ///< lowest current-solution makespan seen in the episode
  pfsp::Time best = 0;          ///< best-so-far at episode end
};

/// eta * local improvement ratio + (1 - eta) * global improvement ratio.
/// Always in [0, 1); zero exactly when neither improved.
double calculate_reward(const EpisodeSnapshot& snapshot, double eta);

/// Q-table over {stuck, improved} x catalog plus the epsilon-greedy schedule.
class LearningState {
 public:
  LearningState(std::size_t catalog_size, const LearningParams& params);

  double q(SearchState s, OperatorId a) const { return table_[index(s)].at(a); }
  void set_q(SearchState s, OperatorId a, double value) { table_[index(s)].at(a) = value; }
  std::span<const double> row(SearchState s) const { return table_[index(s)]; }

  SearchState state() const noexcept { return state_; }
  void set_state(SearchState s) noexcept { state_ = s; }
  double epsilon() const noexcept { return epsilon_; }
  const LearningParams& params() const noexcept { return params_; }
  std::size_t catalog_size() const noexcept { return table_[0].size(); }
  std::size_t selections() const noexcept { return selections_; }

  /// Q(s,a) += alpha * (r + gamma * max_{a' in active} Q(s_next,a') - Q(s,a)).
  void update(SearchState s, OperatorId a, SearchState s_next, double reward,
              std::span<const OperatorId> active);

  /// Epsilon-greedy choice over `active` in row `s_next`, then epsilon *= beta.
  /// Greedy ties are broken uniformly at random.
  OperatorId select_action(SearchState s_next, std::span<const OperatorId> active, Rng& rng);

  /// Tab-separated dump: header line, then one line per state.
  void write_table(std::ostream& out) const;

 private:
  static std::size_t index(SearchState s) { return static_cast<std::size_t>(s); }
  std::vector<double>& mutable_row(SearchState s) { return table_[index(s)]; }

  LearningParams params_;
  std::array<std::vector<double>, 2> table_;
  SearchState state_ = SearchState::Stuck;
  double epsilon_;
  std::size_t selections_ = 0;
};

struct Selection {
  double reward = 0.0;
  SearchState next_state = SearchState::Stuck;
  OperatorId next_action = 0;
};

/// One end-of-episode step of the Q-learning selector, in order: reward,
/// state update, Q update (future max over the pre-update active set),
/// portfolio update, epsilon-greedy choice from the updated active set.
/// With `portfolio == nullptr` the portfolio step is skipped and the whole
/// catalog stays selectable.
Selection select_operator(LearningState& learning, const EpisodeSnapshot& snapshot,
                          portfolio::PortfolioState* portfolio, OperatorId action, Rng& rng);

/// Uniform draw from `active`.
OperatorId select_random(std::span<const OperatorId> active, Rng& rng);

/// Uniform draw from the whole catalog, used before any feedback exists.
OperatorId first_action(std::size_t catalog_size, Rng& rng);

SearchState next_state(const EpisodeSnapshot& snapshot) noexcept;

}  // namespace opmgr::aos
