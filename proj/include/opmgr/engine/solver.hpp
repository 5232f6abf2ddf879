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
#include <iosfwd>
#include <vector>

#include "opmgr/aos/learning.hpp"
#include "opmgr/engine/config.hpp"
#include "opmgr/operators/catalog.hpp"
#include "opmgr/pfsp/instance.hpp"
#include "opmgr/random.hpp"

namespace opmgr::engine {

/// One completed episode.
struct EpisodeRecord {
  std::int64_t episode = 0;
  operators::OperatorId operator_id = 0;
  int d = 0;
  operators::StrategyKind strategy = operators::StrategyKind::Best;
  double reward = 0.0;
  aos::SearchState state = aos::SearchState::Stuck;
  std::size_t active_count = 0;
  pfsp::Time best_makespan = 0;
  operators::OperatorId next_operator = 0;
};

struct RunResult {
  pfsp::Solution best;
  std::int64_t elapsed_ms = 0;
  std::int64_t iterations = 0;
  std::int64_t episodes = 0;
  std::vector<EpisodeRecord> trace;
  /// Makespan after NEH and the first local search.
  pfsp::Time initial_makespan = 0;
  /// Wall time spent in end-of-episode reward, learning, portfolio and
  /// selection work.
  std::int64_t selection_ns = 0;
};

/// T_p = tau * sum(p) / (n * m * 10).
double compute_temperature(const pfsp::Instance& instance, double tau);

/// Metropolis rule: keep `candidate` if no worse than `current`, otherwise
/// with probability exp((C(current) - C(candidate)) / t_p). A worse candidate
/// draws one number from `rng`; t_p == 0 rejects it without drawing.
bool accept_candidate(pfsp::Time current, pfsp::Time candidate, double t_p, Rng& rng);

const pfsp::Solution& accept_solution(const pfsp::Solution& current,
                                      const pfsp::Solution& candidate, double t_p, Rng& rng);

/// Iterated greedy with one operator (d = config.fixed_d, best insertion).
RunResult run_ig(const pfsp::Instance& instance, const EngineConfig& config);

/// Episode-based iterated greedy with operator management; `config.variant`
/// picks the selector. IGRS is rejected here.
RunResult run_dqig(const pfsp::Instance& instance, const EngineConfig& config);

/// Dispatches on `config.variant`.
RunResult solve(const pfsp::Instance& instance, const EngineConfig& config);

/// One line per episode: episode,operator,d,strategy,reward,state,active,best.
void write_trace(const std::vector<EpisodeRecord>& trace, std::ostream& out);

}  // namespace opmgr::engine
