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

#include "opmgr/operators/catalog.hpp"

#include <string>

#include "opmgr/error.hpp"

namespace opmgr::operators {

std::string_view to_string(StrategyKind kind) noexcept {
  switch (kind) {
    case StrategyKind::Best: return "best";
    case StrategyKind::Random: return "random";
    case StrategyKind::SemiRandom: return "semi_random";
    case StrategyKind::Probabilistic: return "probabilistic";
  }
  return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view text) {
  for (auto kind : {StrategyKind::Best, StrategyKind::Random, StrategyKind::SemiRandom,
                    StrategyKind::Probabilistic}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

void ConstructionStrategy::validate() const {
  if (!(semi_random_fraction >= 0.0 && semi_random_fraction <= 1.0)) {
    throw InvalidArgument("semi_random_fraction must lie in [0,1]");
  }
  if (!(greediness > 0.0)) throw InvalidArgument("greediness must be positive");
}

OperatorCatalog OperatorCatalog::build(const CatalogConfig& config) {
  if (config.d_values.empty()) throw InvalidArgument("catalog needs at least one d value");
  if (config.strategies.empty()) throw InvalidArgument("catalog needs at least one strategy");
  OperatorCatalog catalog;
  catalog.d_values_ = config.d_values;
  for (int d : config.d_values) {
    if (d < 1) throw InvalidArgument("destruction size must be positive, got " + std::to_string(d));
    for (StrategyKind kind : config.strategies) {
      ConstructionStrategy strategy{kind, config.semi_random_fraction, config.greediness};
      strategy.validate();
      catalog.operators_.push_back({catalog.operators_.size(), d, strategy});
    }
  }
  return catalog;
}

OperatorCatalog OperatorCatalog::restricted_to(int jobs) const {
  OperatorCatalog out;
  for (const auto& op : operators_) {
    if (op.d >= jobs) continue;
    out.operators_.push_back({out.operators_.size(), op.d, op.strategy});
    out.d_values_.insert(op.d);
  }
  if (out.operators_.empty()) {
    throw InvalidArgument("no operator has d < " + std::to_string(jobs));
  }
  return out;
}

OperatorCatalog build_catalog(const std::vector<int>& d_values,
                              const std::vector<StrategyKind>& strategies,
                              double semi_random_fraction, double greediness) {
  CatalogConfig config;
  config.d_values = {d_values.begin(), d_values.end()};
  config.strategies = {strategies.begin(), strategies.end()};
  config.semi_random_fraction = semi_random_fraction;
  config.greediness = greediness;
  return OperatorCatalog::build(config);
}

}  // namespace opmgr::operators
