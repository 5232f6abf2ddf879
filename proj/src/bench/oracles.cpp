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

#include "opmgr/bench/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "opmgr/bench/wilcoxon.hpp"
#include "opmgr/engine/solver.hpp"
#include "opmgr/error.hpp"
#include "opmgr/pfsp/heuristics.hpp"
#include "opmgr/pfsp/makespan.hpp"

namespace opmgr::bench {

using pfsp::JobId;
using pfsp::Time;

Time naive_makespan(const pfsp::Instance& instance, const std::vector<JobId>& sequence) {
  const std::size_t n = sequence.size();
  const int m = instance.machines();
  if (n == 0) return 0;
  std::vector<std::vector<Time>> c(m + 1, std::vector<Time>(n + 1, 0));
  for (int i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      c[i][j] = std::max(c[i - 1][j], c[i][j - 1]) + instance.time(i - 1, sequence[j - 1]);
    }
  }
  return c[m][n];
}

pfsp::Solution brute_force_optimum(const pfsp::Instance& instance) {
  if (instance.jobs() > 10) throw InvalidArgument("exhaustive search limited to n <= 10");
  std::vector<JobId> perm(instance.jobs());
  std::iota(perm.begin(), perm.end(), 0);
  pfsp::Solution best{perm, naive_makespan(instance, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const Time c = naive_makespan(instance, perm);
    if (c < best.makespan) best = {perm, c};
  }
  return best;
}

pfsp::Instance random_instance(int jobs, int machines, Rng& rng, Time low, Time high) {
  std::vector<std::vector<Time>> rows(machines, std::vector<Time>(jobs));
  for (auto& row : rows) {
    for (auto& p : row) p = low + static_cast<Time>(rng.below(static_cast<std::size_t>(high - low + 1)));
  }
  return pfsp::Instance(rows);
}

OracleSuiteResult check_acceleration(int instances, std::uint64_t seed) {
  OracleSuiteResult result;
  result.name = "acceleration";
  Rng rng(seed);
  pfsp::InsertionEvaluator evaluator;
  for (int t = 0; t < instances; ++t) {
    const int n = 1 + static_cast<int>(rng.below(50));
    const int m = 1 + static_cast<int>(rng.below(20));
    const auto instance = random_instance(n, m, rng);
    std::vector<JobId> partial(n);
    std::iota(partial.begin(), partial.end(), 0);
    rng.shuffle(std::span<JobId>(partial));
    const JobId job = partial.back();
    partial.pop_back();

    const auto fast = evaluator.evaluate(instance, partial, job);
    bool same = fast.size() == partial.size() + 1;
    for (std::size_t k = 0; same && k <= partial.size(); ++k) {
      auto inserted = partial;
      inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(k), job);
      same = fast[k] == naive_makespan(instance, inserted);
    }
    if (same) {
      ++result.passed;
    } else {
      ++result.failed;
      result.failures.push_back("instance " + std::to_string(t) + " (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ") differs from naive recursion");
    }
  }
  return result;
}

OracleSuiteResult check_brute_force(int instances, std::int64_t iterations, int required_hits,
                                    std::uint64_t seed) {
  OracleSuiteResult result;
  result.name = "brute-force";
  Rng rng(seed);
  int hits = 0;
  for (int t = 0; t < instances; ++t) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const int m = 1 + static_cast<int>(rng.below(4));
    const auto instance = random_instance(n, m, rng);
    const auto optimum = brute_force_optimum(instance);
    const std::string label = "instance " + std::to_string(t);

    const auto neh = pfsp::neh_construct(instance);
    Rng ls_rng(seed + t);
    const auto polished = pfsp::insertion_local_search(instance, neh, ls_rng);
    bool ok = neh.makespan >= optimum.makespan && polished.makespan >= optimum.makespan &&
              polished.makespan == naive_makespan(instance, polished.sequence);
    // Fixpoint: no single reinsertion improves the local-search result.
    for (std::size_t from = 0; ok && from < polished.sequence.size(); ++from) {
      auto rest = polished.sequence;
      const JobId job = rest[from];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(from));
      for (std::size_t to = 0; to <= rest.size(); ++to) {
        auto moved = rest;
        moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(to), job);
        if (naive_makespan(instance, moved) < polished.makespan) ok = false;
      }
    }
    if (!ok) {
      ++result.failed;
      result.failures.push_back(label + ": heuristic undercuts optimum or is not a fixpoint");
      continue;
    }

    engine::EngineConfig config;
    config.seed = seed ^ mix64(static_cast<std::uint64_t>(t));
    config.budget = {engine::BudgetMode::Iterations, 0, iterations};
    const auto run = engine::run_dqig(instance, config);
    if (run.best.makespan < optimum.makespan) {
      ++result.failed;
      result.failures.push_back(label + ": solver reports a makespan below the optimum");
      continue;
    }
    hits += run.best.makespan == optimum.makespan;
    ++result.passed;
  }
  result.note = "optimum reached on " + std::to_string(hits) + "/" + std::to_string(instances);
  if (hits < required_hits) {
    ++result.failed;
    result.failures.push_back("optimum reached on " + std::to_string(hits) + "/" +
                              std::to_string(instances) + ", needed " +
                              std::to_string(required_hits));
  }
  return result;
}

OracleSuiteResult check_wilcoxon(double tolerance) {
  OracleSuiteResult result;
  result.name = "wilcoxon";
  for (const auto& ref : wilcoxon_reference_cases()) {
    const auto got = wilcoxon_signed_rank(ref.x, ref.y);
    if (got.applicable && std::abs(got.statistic - ref.statistic) <= tolerance &&
        std::abs(got.p_value - ref.p_value) <= tolerance) {
      ++result.passed;
    } else {
      ++result.failed;
      std::ostringstream msg;
      msg.precision(17);
      msg << ref.name << ": got W=" << got.statistic << " p=" << got.p_value
          << ", expected W=" << ref.statistic << " p=" << ref.p_value;
      result.failures.push_back(msg.str());
    }
  }
  return result;
}

}  // namespace opmgr::bench
