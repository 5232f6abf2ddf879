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

#include "opmgr/bench/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "opmgr/bench/metrics.hpp"
#include "opmgr/engine/solver.hpp"
#include "opmgr/error.hpp"
#include "opmgr/random.hpp"

namespace opmgr::bench {

namespace {

struct Task {
  std::size_t instance;
  int timescale;
  std::size_t variant;
  int replication;
};

std::string set_label(int jobs, int machines) {
  return std::to_string(jobs) + "x" + std::to_string(machines);
}

}  // namespace

void ExperimentPlan::validate() const {
  if (replications < 1) throw ConfigError("replications must be at least 1");
  if (time_scales.empty()) throw ConfigError("plan needs at least one timescale");
  for (int t : time_scales) {
    if (t <= 0) throw ConfigError("timescales must be positive");
  }
  if (variants.empty()) throw ConfigError("plan needs at least one variant");
  if (budget_mode == engine::BudgetMode::Iterations && iterations < 0) {
    throw ConfigError("iteration budget must be non-negative");
  }
  std::set<std::string> labels;
  for (const auto& v : variants) {
    if (!labels.insert(v.label).second) {
      // Repeated labels would merge their runs in the summaries.
      throw ConfigError("variant label '" + v.label + "' used twice");
    }
    v.config.validate();
  }
}

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::string_view instance, int timescale,
                              int replication) {
  std::uint64_t s = mix64(base_seed);
  s = mix64(s ^ hash_name(instance));
  s = mix64(s ^ static_cast<std::uint64_t>(timescale));
  return mix64(s ^ static_cast<std::uint64_t>(replication));
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("OPMGR_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ExperimentReport run_experiment(const ExperimentPlan& plan) {
  plan.validate();
  ExperimentReport report;

  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < plan.instances.size(); ++k) {
    const auto& name = plan.instances[k].instance.name();
    if (plan.registry.best_known(name)) {
      usable.push_back(k);
    } else {
      report.warnings.push_back("no best-known value for '" + name + "'; instance skipped");
      ++report.skipped_instances;
    }
  }

  std::vector<Task> tasks;
  for (std::size_t k : usable) {
    for (int t : plan.time_scales) {
      for (std::size_t v = 0; v < plan.variants.size(); ++v) {
        for (int r = 0; r < plan.replications; ++r) tasks.push_back({k, t, v, r});
      }
    }
  }
  report.records.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < tasks.size(); idx = next++) {
      try {
        const Task& task = tasks[idx];
        const auto& entry = plan.instances[task.instance];
        const auto& instance = entry.instance;
        const auto& variant = plan.variants[task.variant];

        engine::EngineConfig config = variant.config;
        config.seed = derive_run_seed(plan.base_seed, instance.name(), task.timescale,
                                      task.replication);
        config.budget.mode = plan.budget_mode;
        config.budget.time_ms =
            time_budget_ms(instance.jobs(), instance.machines(), task.timescale);
        config.budget.iterations = plan.iterations;
        if (plan.stop_at_proven_optimum) {
          config.lower_bound = plan.registry.proven_optimum(instance.name());
        }
        const auto run = engine::solve(instance, config);
        const auto best_known = *plan.registry.best_known(instance.name());

        report.records[idx] = {entry.dataset,    instance.name(),   instance.jobs(),
                               instance.machines(), variant.label,   task.timescale,
                               task.replication, config.seed,       run.best.makespan,
                               rpd(run.best.makespan, best_known), run.elapsed_ms};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(plan.threads, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::string> order;
  for (const auto& v : plan.variants) order.push_back(v.label);
  summarize(report, order);
  return report;
}

void summarize(ExperimentReport& report, const std::vector<std::string>& variant_order) {
  report.summaries.clear();
  report.comparisons.clear();

  // (dataset, set, variant, t) -> instance -> RPDs
  using Key = std::tuple<std::string, std::string, std::string, int>;
  std::map<Key, std::map<std::string, std::vector<double>>> groups;
  for (const auto& r : report.records) {
    groups[{r.dataset, set_label(r.jobs, r.machines), r.variant, r.timescale}][r.instance]
        .push_back(r.rpd);
    groups[{r.dataset, "all", r.variant, r.timescale}][r.instance].push_back(r.rpd);
  }
  for (const auto& [key, by_instance] : groups) {
    SetSummary s{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key)};
    std::vector<double> all;
    std::vector<double> bests;
    for (const auto& [name, rpds] : by_instance) {
      all.insert(all.end(), rpds.begin(), rpds.end());
      bests.push_back(*std::min_element(rpds.begin(), rpds.end()));
    }
    s.instances = by_instance.size();
    s.runs = all.size();
    s.average_arpd = arpd(all);
    s.best_arpd = arpd(bests);
    report.summaries.push_back(std::move(s));
  }

  // Pair RPDs on (dataset, instance, replication) for each timescale.
  using PairKey = std::tuple<std::string, std::string, int>;
  std::map<std::pair<std::string, int>, std::map<PairKey, double>> by_variant;
  std::set<int> scales;
  for (const auto& r : report.records) {
    by_variant[{r.variant, r.timescale}][{r.dataset, r.instance, r.replication}] = r.rpd;
    scales.insert(r.timescale);
  }
  for (int t : scales) {
    for (std::size_t a = 0; a < variant_order.size(); ++a) {
      for (std::size_t b = a + 1; b < variant_order.size(); ++b) {
        const auto& first = by_variant[{variant_order[a], t}];
        const auto& second = by_variant[{variant_order[b], t}];
        std::vector<double> x, y;
        for (const auto& [key, value] : first) {
          if (const auto it = second.find(key); it != second.end()) {
            x.push_back(value);
            y.push_back(it->second);
          }
        }
        report.comparisons.push_back(
            {variant_order[a], variant_order[b], t, wilcoxon_signed_rank(x, y)});
      }
    }
  }
}

void write_csv(const ExperimentReport& report, engine::BudgetMode mode, std::ostream& out) {
  out << "dataset,instance,n,m,variant,t,rep,seed,makespan,rpd,elapsed_ms\n";
  for (const auto& r : report.records) {
    out << r.dataset << ',' << r.instance << ',' << r.jobs << ',' << r.machines << ','
        << r.variant << ',' << r.timescale << ',' << r.replication << ',' << r.seed << ','
        << r.makespan << ',' << std::fixed << std::setprecision(3) << r.rpd << ',';
    if (mode == engine::BudgetMode::Iterations) {
      out << "NA";
    } else {
      out << r.elapsed_ms;
    }
    out << '\n';
  }
}

nlohmann::json summary_json(const ExperimentReport& report, const ExperimentPlan& plan) {
  nlohmann::json doc;
  auto& echo = doc["plan"];
  echo["replications"] = plan.replications;
  echo["time_scales"] = plan.time_scales;
  echo["base_seed"] = plan.base_seed;
  echo["budget_mode"] = plan.budget_mode == engine::BudgetMode::Time ? "time" : "iterations";
  if (plan.budget_mode == engine::BudgetMode::Iterations) echo["iterations"] = plan.iterations;
  echo["stop_at_proven_optimum"] = plan.stop_at_proven_optimum;
  echo["variants"] = nlohmann::json::array();
  for (const auto& v : plan.variants) {
    echo["variants"].push_back({{"label", v.label}, {"variant", engine::to_string(v.config.variant)}});
  }
  echo["instances"] = nlohmann::json::array();
  for (const auto& i : plan.instances) {
    echo["instances"].push_back({{"dataset", i.dataset}, {"name", i.instance.name()}});
  }

  doc["summaries"] = nlohmann::json::array();
  for (const auto& s : report.summaries) {
    doc["summaries"].push_back({{"dataset", s.dataset},
                                {"set", s.set},
                                {"variant", s.variant},
                                {"t", s.timescale},
                                {"instances", s.instances},
                                {"runs", s.runs},
                                {"average_arpd", s.average_arpd},
                                {"best_arpd", s.best_arpd}});
  }
  doc["wilcoxon"] = nlohmann::json::array();
  for (const auto& c : report.comparisons) {
    nlohmann::json entry{{"first", c.first},
                         {"second", c.second},
                         {"t", c.timescale},
                         {"pairs", c.test.pairs_used},
                         {"applicable", c.test.applicable}};
    if (c.test.applicable) {
      entry["w_plus"] = c.test.rank_sum_positive;
      entry["w_minus"] = c.test.rank_sum_negative;
      entry["statistic"] = c.test.statistic;
      entry["p_value"] = c.test.p_value;
      entry["significant"] = c.test.significant;
    }
    doc["wilcoxon"].push_back(std::move(entry));
  }
  doc["warnings"] = report.warnings;
  return doc;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::filesystem::remove(temp);
      throw std::runtime_error("write to " + temp.string() + " failed");
    }
  }
  std::filesystem::rename(temp, path);
}

}  // namespace opmgr::bench
