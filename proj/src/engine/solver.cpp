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

#include "opmgr/engine/solver.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <ostream>
#include <string>

#include "opmgr/aos/score_based.hpp"
#include "opmgr/error.hpp"
#include "opmgr/operators/perturbation.hpp"
#include "opmgr/pfsp/heuristics.hpp"
#include "opmgr/portfolio/portfolio.hpp"

namespace opmgr::engine {

namespace {

using Clock = std::chrono::steady_clock;
using pfsp::Solution;
using pfsp::Time;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

class BudgetGuard {
 public:
  BudgetGuard(const EngineConfig& config, Clock::time_point start)
      : budget_(config.budget), lower_bound_(config.lower_bound), start_(start) {}

  bool exhausted(std::int64_t iterations, Time best) const {
    if (lower_bound_ && best <= *lower_bound_) return true;
    if (budget_.mode == BudgetMode::Iterations) return iterations >= budget_.iterations;
    return ms_since(start_) >= budget_.time_ms;
  }

 private:
  Budget budget_;
  std::optional<Time> lower_bound_;
  Clock::time_point start_;
};

// State shared by both loops: current and best solutions plus reusable buffers.
struct Search {
  const pfsp::Instance& instance;
  const EngineConfig& config;
  Rng rng;
  pfsp::InsertionEvaluator evaluator;
  Solution current;
  Solution best;
  double temperature;

  Search(const pfsp::Instance& inst, const EngineConfig& cfg)
      : instance(inst), config(cfg), rng(cfg.seed),
        temperature(compute_temperature(inst, cfg.tau)) {
    current = pfsp::neh_construct(instance, {.tie_break = config.tie_break});
    current.makespan = pfsp::insertion_local_search(instance, current.sequence, rng, evaluator,
                                                    config.tie_break);
    best = current;
  }

  // Destruct, optionally polish the partial sequence, rebuild, local search,
  // then the acceptance test. Returns true if the candidate was accepted.
  bool iterate(const operators::Operator& op) {
    auto partial = operators::destruct(current.sequence, op.d, rng);
    if (config.uses_partial_local_search()) {
      pfsp::insertion_local_search(instance, partial.sequence, rng, evaluator, config.tie_break);
    }
    Solution candidate = operators::construct(instance, std::move(partial), op.strategy, rng,
                                              evaluator, config.tie_break);
    candidate.makespan = pfsp::insertion_local_search(instance, candidate.sequence, rng,
                                                      evaluator, config.tie_break);
    const bool improves_best = candidate.makespan < best.makespan;
    const bool accepted =
        accept_candidate(current.makespan, candidate.makespan, temperature, rng);
    if (improves_best) best = candidate;
    if (accepted) current = std::move(candidate);
    return accepted;
  }
};

aos::EpisodeOutcome outcome_of(const aos::EpisodeSnapshot& snap, bool accepted_any) {
  if (snap.best < snap.best_before) return aos::EpisodeOutcome::NewBest;
  if (snap.local < snap.local_before) return aos::EpisodeOutcome::LocalImprovement;
  if (accepted_any) return aos::EpisodeOutcome::AcceptedOnly;
  return aos::EpisodeOutcome::Nothing;
}

}  // namespace

std::string_view to_string(Variant variant) noexcept {
  switch (variant) {
    case Variant::DQIG: return "dqig";
    case Variant::SQIG: return "sqig";
    case Variant::RIG: return "rig";
    case Variant::ScIG: return "scig";
    case Variant::IGRS: return "igrs";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (auto v : {Variant::DQIG, Variant::SQIG, Variant::RIG, Variant::ScIG, Variant::IGRS}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

void EngineConfig::validate() const {
  try {
    if (episode_length < 1) throw ConfigError("episode length must be at least 1");
    if (!(tau >= 0.0)) throw ConfigError("tau must be non-negative");
    if (tenure < 1) throw ConfigError("tabu tenure must be positive");
    if (fixed_d < 1) throw ConfigError("fixed_d must be positive");
    if (budget.mode == BudgetMode::Time && budget.time_ms <= 0) {
      throw ConfigError("time budget must be positive");
    }
    if (budget.mode == BudgetMode::Iterations && budget.iterations < 0) {
      throw ConfigError("iteration budget must be non-negative");
    }
    learning.validate();
    score.validate();
    (void)operators::OperatorCatalog::build(catalog);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

double compute_temperature(const pfsp::Instance& instance, double tau) {
  if (tau < 0.0) throw InvalidArgument("tau must be non-negative");
  return tau * static_cast<double>(instance.total()) /
         (static_cast<double>(instance.jobs()) * instance.machines() * 10.0);
}

bool accept_candidate(Time current, Time candidate, double t_p, Rng& rng) {
  if (candidate <= current) return true;
  if (t_p <= 0.0) return false;
  return rng.unit() < std::exp(static_cast<double>(current - candidate) / t_p);
}

const Solution& accept_solution(const Solution& current, const Solution& candidate, double t_p,
                                Rng& rng) {
  return accept_candidate(current.makespan, candidate.makespan, t_p, rng) ? candidate : current;
}

RunResult run_ig(const pfsp::Instance& instance, const EngineConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const BudgetGuard guard(config, start);
  if (instance.jobs() < 2) {
    Solution only{{0}, instance.job_total(0)};
    return {only, ms_since(start), 0, 0, {}, only.makespan, 0};
  }
  Search search(instance, config);
  RunResult result;
  result.initial_makespan = search.best.makespan;

  operators::Operator op{0, std::min(config.fixed_d, instance.jobs() - 1),
                         {operators::StrategyKind::Best}};
  while (!guard.exhausted(result.iterations, search.best.makespan)) {
    search.iterate(op);
    ++result.iterations;
  }
  result.best = std::move(search.best);
  result.elapsed_ms = ms_since(start);
  return result;
}

RunResult run_dqig(const pfsp::Instance& instance, const EngineConfig& config) {
  config.validate();
  if (config.variant == Variant::IGRS) {
    throw ConfigError("IGRS is a single-operator variant; use run_ig");
  }
  const auto start = Clock::now();
  const BudgetGuard guard(config, start);
  if (instance.jobs() < 2) {
    Solution only{{0}, instance.job_total(0)};
    return {only, ms_since(start), 0, 0, {}, only.makespan, 0};
  }
  const auto full = operators::OperatorCatalog::build(config.catalog);
  if (*full.d_values().begin() >= instance.jobs()) {
    // Every operator destroys too much; fall back to the largest feasible d.
    auto single = config;
    single.variant = Variant::IGRS;
    single.fixed_d = instance.jobs() - 1;
    single.partial_local_search = config.uses_partial_local_search();
    return run_ig(instance, single);
  }
  const auto catalog = full.restricted_to(instance.jobs());
  Search search(instance, config);
  RunResult result;
  result.initial_makespan = search.best.makespan;

  aos::LearningState learning(catalog.size(), config.learning);
  std::unique_ptr<portfolio::PortfolioState> tabu;
  if (config.variant == Variant::DQIG || config.variant == Variant::RIG) {
    tabu = std::make_unique<portfolio::PortfolioState>(catalog.size(), config.tenure);
  }
  std::unique_ptr<aos::ScoreState> scores;
  if (config.variant == Variant::ScIG) {
    scores = std::make_unique<aos::ScoreState>(catalog.size(), config.score);
  }

  auto action = aos::first_action(catalog.size(), search.rng);
  while (true) {
    aos::EpisodeSnapshot snap;
    snap.local_before = search.current.makespan;
    snap.best_before = search.best.makespan;
    snap.local = snap.local_before;
    snap.best = snap.best_before;

    bool accepted_any = false;
    int done = 0;
    for (; done < config.episode_length; ++done) {
      if (guard.exhausted(result.iterations, search.best.makespan)) break;
      accepted_any |= search.iterate(catalog[action]);
      ++result.iterations;
      snap.local = std::min(snap.local, search.current.makespan);
      snap.best = search.best.makespan;
    }
    if (done < config.episode_length) break;

    const auto selection_start = Clock::now();
    EpisodeRecord record;
    record.episode = result.episodes;
    record.operator_id = action;
    record.d = catalog[action].d;
    record.strategy = catalog[action].strategy.kind;
    record.best_makespan = snap.best;

    switch (config.variant) {
      case Variant::DQIG:
      case Variant::SQIG: {
        const auto sel = aos::select_operator(learning, snap, tabu.get(), action, search.rng);
        record.reward = sel.reward;
        record.state = sel.next_state;
        action = sel.next_action;
        break;
      }
      case Variant::RIG: {
        record.reward = aos::calculate_reward(snap, config.learning.eta);
        record.state = aos::next_state(snap);
        tabu->determine(action, record.reward);
        action = aos::select_random(tabu->active(), search.rng);
        break;
      }
      case Variant::ScIG: {
        record.reward = aos::calculate_reward(snap, config.learning.eta);
        record.state = aos::next_state(snap);
        scores->record(action, outcome_of(snap, accepted_any));
        action = scores->select(search.rng);
        break;
      }
      case Variant::IGRS: break;
    }
    record.active_count = tabu ? tabu->active().size() : catalog.size();
    record.next_operator = action;
    result.trace.push_back(record);
    ++result.episodes;
    result.selection_ns +=
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - selection_start)
            .count();
  }

  result.best = std::move(search.best);
  result.elapsed_ms = ms_since(start);
  return result;
}

RunResult solve(const pfsp::Instance& instance, const EngineConfig& config) {
  return config.variant == Variant::IGRS ? run_ig(instance, config) : run_dqig(instance, config);
}

void write_trace(const std::vector<EpisodeRecord>& trace, std::ostream& out) {
  out << "episode,operator,d,strategy,reward,state,active,best\n";
  for (const auto& r : trace) {
    out << r.episode << ',' << r.operator_id << ',' << r.d << ','
        << operators::to_string(r.strategy) << ',' << r.reward << ','
        << static_cast<int>(r.state) << ',' << r.active_count << ',' << r.best_makespan
        << '\n';
  }
}

}  // namespace opmgr::engine
