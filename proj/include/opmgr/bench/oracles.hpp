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
#include <string>
#include <vector>

#include "opmgr/pfsp/instance.hpp"
#include "opmgr/random.hpp"

namespace opmgr::bench {

/// Completion-time matrix recomputed from scratch; independent of the
/// accelerated evaluator.
pfsp::Time naive_makespan(const pfsp::Instance& instance, const std::vector<pfsp::JobId>& sequence);

/// Exhaustive search over all n! permutations (n <= 10).
pfsp::Solution brute_force_optimum(const pfsp::Instance& instance);

/// Uniform random processing times in [low, high].
pfsp::Instance random_instance(int jobs, int machines, Rng& rng, pfsp::Time low = 1,
                               pfsp::Time high = 99);

struct WilcoxonReferenceCase {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  double statistic;
  double p_value;
};

/// Paired samples with statistic and two-sided p-value from an external
/// statistics package (drop zeros, average ranks, tie-corrected normal
/// approximation, no continuity correction).
const std::vector<WilcoxonReferenceCase>& wilcoxon_reference_cases();

struct OracleSuiteResult {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::vector<std::string> failures;
  std::string note;  ///< optional one-line summary

  bool ok() const noexcept { return failed == 0; }
};

/// Accelerated insertion makespans against naive recomputation at every
/// position, on `instances` random instances with n <= 50, m <= 20.
OracleSuiteResult check_acceleration(int instances, std::uint64_t seed);

/// Random instances with n <= 8, m <= 4 against exhaustive optima: NEH and
/// local search never undercut the optimum, local-search results admit no
/// improving reinsertion, and DQIG with `iterations` iterations reaches the
/// optimum on at least `required_hits` instances.
OracleSuiteResult check_brute_force(int instances, std::int64_t iterations, int required_hits,
                                    std::uint64_t seed);

/// Stored reference vectors, statistic and p-value within `tolerance`.
OracleSuiteResult check_wilcoxon(double tolerance = 1e-9);

}  // namespace opmgr::bench
