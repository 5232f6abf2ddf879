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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace opmgr::operators {

/// How destroyed jobs are put back, from greediest to most random.
enum class StrategyKind { Best, Random, SemiRandom, Probabilistic };

std::string_view to_string(StrategyKind kind) noexcept;
std::optional<StrategyKind> parse_strategy(std::string_view text);

struct ConstructionStrategy {
  StrategyKind kind = StrategyKind::Best;
  /// SemiRandom: probability that a job goes to its best position.
  double semi_random_fraction = 0.5;
  /// Probabilistic: exponent on (C_worst - C_k + 1).
  double greediness = 2.0;

  /// Throws InvalidArgument on out-of-range parameters.
  void validate() const;
};

using OperatorId = std::size_t;

/// One perturbation operator: destroy `d` jobs, rebuild with `strategy`.
struct Operator {
  OperatorId id = 0;
  int d = 1;
  ConstructionStrategy strategy;
};

struct CatalogConfig {
  std::set<int> d_values{2, 3, 4, 5, 6, 7, 8};
  std::set<StrategyKind> strategies{StrategyKind::Best, StrategyKind::Random,
                                    StrategyKind::SemiRandom,
                                    StrategyKind::Probabilistic};
  double semi_random_fraction = 0.5;
  double greediness = 2.0;
};

/// The operator universe. Ids are 0..size()-1 in d-major, strategy-minor
/// order, so identical configurations always give identical id mappings.
class OperatorCatalog {
 public:
  static OperatorCatalog build(const CatalogConfig& config);

  /// Copy without operators whose d would not leave at least one job in
  /// place on an n-job instance. Ids are renumbered in the same order.
  /// Throws InvalidArgument if nothing survives.
  OperatorCatalog restricted_to(int jobs) const;

  std::size_t size() const noexcept { return operators_.size(); }
  const Operator& operator[](OperatorId id) const { return operators_.at(id); }
  const std::vector<Operator>& operators() const noexcept { return operators_; }
  const std::set<int>& d_values() const noexcept { return d_values_; }

 private:
  std::vector<Operator> operators_;
  std::set<int> d_values_;
};

/// Build from raw lists; duplicates collapse. Empty inputs throw.
OperatorCatalog build_catalog(const std::vector<int>& d_values,
                              const std::vector<StrategyKind>& strategies,
                              double semi_random_fraction = 0.5,
                              double greediness = 2.0);

}  // namespace opmgr::operators
