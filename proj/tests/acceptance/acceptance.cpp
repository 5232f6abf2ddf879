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

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Set OPMGR_NIGHTLY=1 to add the 50x20 variant-ordering run.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "opmgr/aos/learning.hpp"
#include "opmgr/bench/experiment.hpp"
#include "opmgr/bench/instance_io.hpp"
#include "opmgr/bench/metrics.hpp"
#include "opmgr/bench/oracles.hpp"
#include "opmgr/bench/registry.hpp"
#include "opmgr/engine/solver.hpp"
#include "opmgr/portfolio/portfolio.hpp"

namespace {

using namespace opmgr;
namespace fs = std::filesystem;

struct Outcome {
  enum Status { Pass, Fail, NotApplicable } status;
  std::string detail;
};

const fs::path kData = OPMGR_DATA_DIR;

bench::BestKnownRegistry registry() {
  return bench::BestKnownRegistry::load(kData / "best_known_taillard.txt");
}

std::vector<bench::BenchInstance> taillard(int first, int last, const std::string& dataset) {
  std::vector<bench::BenchInstance> out;
  for (int k = first; k <= last; ++k) {
    std::ostringstream name;
    name << "ta" << std::setw(3) << std::setfill('0') << k;
    out.push_back({dataset, bench::load_instance(kData / "taillard" / name.str(),
                                                 bench::InstanceFormat::Taillard)});
  }
  return out;
}

engine::EngineConfig variant_config(engine::Variant v) {
  engine::EngineConfig c;
  c.variant = v;
  return c;
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

double all_set_arpd(const bench::ExperimentReport& report, const std::string& variant) {
  for (const auto& s : report.summaries) {
    if (s.set == "all" && s.variant == variant) return s.average_arpd;
  }
  return NAN;
}

// 1. Accelerated insertion evaluation equals the naive recursion.
Outcome accelerated_equivalence() {
  const auto r = bench::check_acceleration(1000, 20261016);
  return {r.ok() ? Outcome::Pass : Outcome::Fail,
          std::to_string(r.passed) + "/1000 random instances (n<=50, m<=20) match at every position"};
}

// 2. DQIG reaches brute-force optima on small instances.
Outcome brute_force_harness() {
  const auto r = bench::check_brute_force(50, 500, 48, 7);
  std::string detail = r.note + " (need >= 48) at 500 iterations, n<=8, m<=4";
  if (!r.failures.empty()) detail += "; " + r.failures.front();
  return {r.ok() ? Outcome::Pass : Outcome::Fail, detail};
}

// 3. Hand-derived arithmetic examples.
Outcome unit_arithmetic() {
  std::vector<std::string> wrong;
  auto near = [&](const char* what, double got, double want) {
    if (std::abs(got - want) > 1e-12) wrong.push_back(std::string(what) + "=" + fixed(got, 15));
  };
  auto exact = [&](const char* what, std::int64_t got, std::int64_t want) {
    if (got != want) wrong.push_back(std::string(what) + "=" + std::to_string(got));
  };
  near("reward_a", aos::calculate_reward({100, 100, 90, 90}, 0.3), 0.1);
  near("reward_b", aos::calculate_reward({200, 180, 190, 180}, 0.3), 0.015);
  near("reward_zero", aos::calculate_reward({100, 100, 100, 100}, 0.3), 0.0);

  const std::vector<std::size_t> active{0, 1};
  aos::LearningState q(2, {});
  q.update(aos::SearchState::Stuck, 0, aos::SearchState::Stuck, 1.0, active);
  near("q_from_zero", q.q(aos::SearchState::Stuck, 0), 0.6);
  aos::LearningState q2(2, {});
  q2.set_q(aos::SearchState::Stuck, 0, 0.5);
  q2.set_q(aos::SearchState::Improved, 1, 1.0);
  q2.update(aos::SearchState::Stuck, 0, aos::SearchState::Improved, 0.0, active);
  near("q_future", q2.q(aos::SearchState::Stuck, 0), 0.68);

  near("temperature", engine::compute_temperature(pfsp::Instance({{1, 2}, {3, 4}}), 0.4), 0.1);
  near("rpd_pos", bench::rpd(1010, 1000), 1.0);
  near("rpd_neg", bench::rpd(995, 1000), -0.5);
  near("arpd", bench::arpd(std::vector<double>{1.0, -0.5}), 0.25);
  exact("budget_20x5", bench::time_budget_ms(20, 5, 60), 3000);
  exact("budget_500x20", bench::time_budget_ms(500, 20, 120), 600000);
  if (!wrong.empty()) {
    std::string detail = "mismatch:";
    for (const auto& w : wrong) detail += " " + w;
    return {Outcome::Fail, detail};
  }
  return {Outcome::Pass, "reward, Q-update, temperature, RPD/ARPD and budget examples exact"};
}

// 4. Scripted 2-operator trace through the real selection path.
Outcome tabu_semantics() {
  int violations = 0;
  int runs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    aos::LearningParams params;
    params.epsilon = 1.0;  // explore: any active operator may be drawn
    params.beta = 1.0;
    aos::LearningState learning(2, params);
    portfolio::PortfolioState portfolio(2, 4);
    Rng rng(seed);
    // End 1: operator 0 earns nothing and is deactivated.
    auto sel = aos::select_operator(learning, {100, 100, 100, 100}, &portfolio, 0, rng);
    std::vector<bool> selectable{portfolio.is_active(0)};
    if (sel.next_action == 0) ++violations;
    // Ends 2..6: operator 1 keeps improving.
    for (int end = 2; end <= 6; ++end) {
      sel = aos::select_operator(learning, {100, 100, 99, 100}, &portfolio, 1, rng);
      selectable.push_back(portfolio.is_active(0));
      if (!portfolio.is_active(0) && sel.next_action == 0) ++violations;
      if (!portfolio.is_active(1)) ++violations;
    }
    // Unselectable after ends 1-4, selectable from end 5.
    const std::vector<bool> expected{false, false, false, false, true, true};
    violations += selectable != expected;
    ++runs;
  }
  return {violations == 0 ? Outcome::Pass : Outcome::Fail,
          "operator out for exactly 4 episode-ends, back at the 5th; " + std::to_string(runs) +
              " seeded traces, " + std::to_string(violations) + " violations"};
}

// 5. Taillard 20x5: best-of-30 hits the optimum on >= 8/10, average ARPD <= 0.10%.
Outcome taillard_20x5() {
  bench::ExperimentPlan plan;
  plan.instances = taillard(1, 10, "taillard");
  plan.variants = {{"dqig", variant_config(engine::Variant::DQIG)}};
  plan.replications = 30;
  plan.time_scales = {120};
  plan.base_seed = 5;
  plan.stop_at_proven_optimum = true;
  plan.threads = bench::default_thread_count();
  plan.registry = registry();
  const auto report = bench::run_experiment(plan);
  std::map<std::string, double> best;
  for (const auto& r : report.records) {
    auto it = best.find(r.instance);
    if (it == best.end() || r.rpd < it->second) best[r.instance] = r.rpd;
  }
  int hits = 0;
  for (const auto& [name, v] : best) hits += v == 0.0;
  const double avg = all_set_arpd(report, "dqig");
  const bool ok = report.records.size() == 300 && hits >= 8 && avg <= 0.10;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "optimum hit on " + std::to_string(hits) + "/10 (need >= 8), average ARPD " +
              fixed(avg) + "% (need <= 0.10), 300 runs at t=120"};
}

// 6. Variant ordering. CI: 20x10 analogue. Nightly: full 50x20 set.
Outcome variant_ordering() {
  bench::ExperimentPlan plan;
  plan.instances = taillard(11, 20, "taillard");
  for (auto v : {engine::Variant::DQIG, engine::Variant::SQIG, engine::Variant::RIG,
                 engine::Variant::ScIG}) {
    plan.variants.push_back({std::string(engine::to_string(v)), variant_config(v)});
  }
  plan.replications = 30;
  plan.time_scales = {60};
  plan.base_seed = 6;
  plan.stop_at_proven_optimum = true;
  plan.threads = bench::default_thread_count();
  plan.registry = registry();
  const auto report = bench::run_experiment(plan);
  bool ok = report.records.size() == 1200;
  std::string detail = "20x10 t=60 ARPD (need <= 0.01 each):";
  for (const auto& v : plan.variants) {
    const double a = all_set_arpd(report, v.label);
    ok = ok && a <= 0.01;
    detail += " " + v.label + "=" + fixed(a);
  }

  const char* nightly = std::getenv("OPMGR_NIGHTLY");
  if (nightly != nullptr && std::string(nightly) == "1") {
    bench::ExperimentPlan full;
    full.instances = taillard(51, 60, "taillard");
    for (auto v : {engine::Variant::DQIG, engine::Variant::RIG, engine::Variant::ScIG}) {
      full.variants.push_back({std::string(engine::to_string(v)), variant_config(v)});
    }
    full.replications = 30;
    full.time_scales = {60};
    full.base_seed = 6;
    full.threads = bench::default_thread_count();
    full.registry = registry();
    const auto big = bench::run_experiment(full);
    const double dqig = all_set_arpd(big, "dqig");
    const double rig = all_set_arpd(big, "rig");
    const double scig = all_set_arpd(big, "scig");
    ok = ok && dqig <= rig && dqig <= scig;
    detail += "; 50x20 t=60 ARPD dqig=" + fixed(dqig) + " rig=" + fixed(rig) +
              " scig=" + fixed(scig) + " (need dqig <= both)";
  } else {
    detail += "; 50x20 run skipped (set OPMGR_NIGHTLY=1)";
  }
  return {ok ? Outcome::Pass : Outcome::Fail, detail};
}

// 7. Per-episode selection cost does not grow with n.
Outcome selection_overhead() {
  auto per_episode_ns = [](int number, std::int64_t iterations) {
    const auto [n, m] = bench::taillard_size(number);
    const auto instance = bench::generate_taillard(bench::taillard_seed(number), n, m);
    engine::EngineConfig c;
    c.episode_length = 1;
    c.seed = 7;
    c.budget.mode = engine::BudgetMode::Iterations;
    c.budget.iterations = iterations;
    const auto r = engine::solve(instance, c);
    return static_cast<double>(r.selection_ns) / static_cast<double>(r.episodes);
  };
  const double small = per_episode_ns(51, 2000);  // 50x20
  const double large = per_episode_ns(111, 150);  // 500x20
  const double ratio = std::max(small, large) / std::min(small, large);
  return {ratio <= 2.0 ? Outcome::Pass : Outcome::Fail,
          "mean selection time per episode " + fixed(small / 1000.0, 2) + " us at n=50, " +
              fixed(large / 1000.0, 2) + " us at n=500, ratio " + fixed(ratio, 2) +
              " (need <= 2), 28 operators"};
}

// 8. Wilcoxon against the stored reference vectors.
Outcome wilcoxon_reference() {
  const auto r = bench::check_wilcoxon(1e-9);
  return {r.ok() ? Outcome::Pass : Outcome::Fail,
          std::to_string(r.passed) + "/20 reference vectors match statistic and p-value within 1e-9"};
}

// 9. Full benchmark campaigns are out of scope at desk scale.
Outcome full_campaigns() {
  return {Outcome::NotApplicable,
          "360-instance, three-timescale campaigns not run; criteria 1-8 and 10 substitute"};
}

// 10. Same plan in iteration mode gives byte-identical CSV, across thread counts.
Outcome determinism() {
  auto csv = [](std::size_t threads) {
    bench::ExperimentPlan plan;
    plan.instances = taillard(1, 5, "taillard");
    for (auto v : {engine::Variant::DQIG, engine::Variant::SQIG, engine::Variant::RIG,
                   engine::Variant::ScIG, engine::Variant::IGRS}) {
      plan.variants.push_back({std::string(engine::to_string(v)), variant_config(v)});
    }
    plan.replications = 3;
    plan.budget_mode = engine::BudgetMode::Iterations;
    plan.iterations = 120;
    plan.base_seed = 10;
    plan.threads = threads;
    plan.registry = registry();
    std::ostringstream out;
    bench::write_csv(bench::run_experiment(plan), plan.budget_mode, out);
    return out.str();
  };
  const auto first = csv(1);
  const auto second = csv(1);
  const auto threaded = csv(3);
  const bool ok = first == second && first == threaded;
  return {ok ? Outcome::Pass : Outcome::Fail,
          "two runs (plus a 3-thread run) of a 75-run plan produce " +
              std::string(ok ? "identical" : "different") + " CSV (" +
              std::to_string(first.size()) + " bytes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"accelerated insertion equals naive recursion", accelerated_equivalence},
      {"brute-force optimality harness", brute_force_harness},
      {"unit arithmetic", unit_arithmetic},
      {"tabu semantics", tabu_semantics},
      {"Taillard 20x5 reproduction", taillard_20x5},
      {"variant ordering", variant_ordering},
      {"constant selection overhead", selection_overhead},
      {"Wilcoxon correctness", wilcoxon_reference},
      {"full benchmark campaigns", full_campaigns},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{Outcome::Fail, ""};
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {Outcome::Fail, std::string("exception: ") + e.what()};
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = outcome.status == Outcome::Pass   ? "PASS"
                      : outcome.status == Outcome::Fail ? "FAIL"
                                                        : "N/A ";
    failures += outcome.status == Outcome::Fail;
    std::cout << tag << "  criterion " << k + 1 << " (" << criteria[k].first
              << "): " << outcome.detail << " [" << fixed(seconds, 1) << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
