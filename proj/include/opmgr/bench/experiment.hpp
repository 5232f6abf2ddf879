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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "opmgr/bench/registry.hpp"
#include "opmgr/bench/wilcoxon.hpp"
#include "opmgr/engine/config.hpp"
#include "opmgr/pfsp/instance.hpp"

namespace opmgr::bench {

struct BenchInstance {
  std::string dataset;
  pfsp::Instance instance;
};

struct VariantSpec {
  std::string label;
  engine::EngineConfig config;  ///< seed and budget are overwritten per run
};

struct ExperimentPlan {
  std::vector<BenchInstance> instances;
  std::vector<VariantSpec> variants;
  int replications = 30;
  std::vector<int> time_scales{60};
  std::uint64_t base_seed = 1;
  engine::BudgetMode budget_mode = engine::BudgetMode::Time;
  /// Per-run iteration budget in iteration mode.
  std::int64_t iterations = 1000;
  /// End a run once it reaches a registry value flagged optimal.
  bool stop_at_proven_optimum = false;
  std::size_t threads = 1;
  BestKnownRegistry registry;

  /// Throws ConfigError.
  void validate() const;
};

struct RunRecord {
  std::string dataset;
  std::string instance;
  int jobs = 0;
  int machines = 0;
  std::string variant;
  int timescale = 0;
  int replication = 0;
  std::uint64_t seed = 0;
  pfsp::Time makespan = 0;
  double rpd = 0.0;
  std::int64_t elapsed_ms = 0;
};

/// ARPD figures for one (dataset, n x m set, variant, timescale). `set` is
/// "all" for the whole dataset.
struct SetSummary {
  std::string dataset;
  std::string set;
  std::string variant;
  int timescale = 0;
  std::size_t instances = 0;
  std::size_t runs = 0;
  double average_arpd = 0.0;  ///< mean RPD over every run
  double best_arpd = 0.0;     ///< mean over instances of the best-of-R RPD
};

/// Wilcoxon test on RPDs paired by (instance, replication).
struct PairwiseComparison {
  std::string first;
  std::string second;
  int timescale = 0;
  WilcoxonResult test;
};

struct ExperimentReport {
  std::vector<RunRecord> records;
  std::vector<SetSummary> summaries;
  std::vector<PairwiseComparison> comparisons;
  std::vector<std::string> warnings;
  std::size_t skipped_instances = 0;
};

/// Run seed from the base seed, the instance name, the timescale and the
/// replication index (SplitMix64 chain). The variant does not enter, so all
/// variants face the same random streams and any subset of a plan reproduces
/// the corresponding runs of the full plan.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::string_view instance,
                              int timescale, int replication);

/// OPMGR_THREADS if set to a positive integer, else the hardware concurrency.
std::size_t default_thread_count();

/// Runs every (instance, timescale, variant, replication), then computes the
/// summaries. Instances without a registry entry are skipped with a warning.
ExperimentReport run_experiment(const ExperimentPlan& plan);

/// Summaries and pairwise tests recomputed from run records.
void summarize(ExperimentReport& report, const std::vector<std::string>& variant_order);

/// CSV: dataset,instance,n,m,variant,t,rep,seed,makespan,rpd,elapsed_ms.
/// In iteration-budget mode elapsed_ms is written as NA so that reruns are
/// byte-identical.
void write_csv(const ExperimentReport& report, engine::BudgetMode mode, std::ostream& out);

nlohmann::json summary_json(const ExperimentReport& report, const ExperimentPlan& plan);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace opmgr::bench
