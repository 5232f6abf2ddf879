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
#include <optional>
#include <string_view>

#include "opmgr/aos/learning.hpp"
#include "opmgr/aos/score_based.hpp"
#include "opmgr/operators/catalog.hpp"
#include "opmgr/pfsp/instance.hpp"

namespace opmgr::engine {

/// DQIG: Q-learning selection over a tabu-gated portfolio.
/// SQIG: Q-learning over the full catalog. RIG: uniform choice over the
/// tabu-gated portfolio. ScIG: score-based roulette over the full catalog.
/// IGRS: plain iterated greedy with one fixed operator.
enum class Variant { DQIG, SQIG, RIG, ScIG, IGRS };

std::string_view to_string(Variant variant) noexcept;
std::optional<Variant> parse_variant(std::string_view text);

enum class BudgetMode { Time, Iterations };

struct Budget {
  BudgetMode mode = BudgetMode::Time;
  std::int64_t time_ms = 1000;
  std::int64_t iterations = 1000;
};

struct EngineConfig {
  Variant variant = Variant::DQIG;
  int episode_length = 6;
  double tau = 0.4;
  operators::CatalogConfig catalog;
  aos::LearningParams learning;
  int tenure = 4;
  aos::ScoreParams score;
  /// Local search on the partial sequence after destruction. Unset means the
  /// variant default: on for the operator-managing variants, off for IGRS.
  std::optional<bool> partial_local_search;
  bool tie_break = true;
  /// IGRS operator.
  int fixed_d = 4;
  std::uint64_t seed = 1;
  Budget budget;
  /// Stop as soon as the best makespan reaches this proven lower bound.
  std::optional<pfsp::Time> lower_bound;

  bool uses_partial_local_search() const noexcept {
    return partial_local_search.value_or(variant != Variant::IGRS);
  }

  /// Throws ConfigError on invalid values.
  void validate() const;
};

}  // namespace opmgr::engine
