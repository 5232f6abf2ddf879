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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "opmgr/bench/experiment.hpp"
#include "opmgr/bench/instance_io.hpp"
#include "opmgr/bench/metrics.hpp"
#include "opmgr/bench/oracles.hpp"
#include "opmgr/bench/registry.hpp"
#include "opmgr/bench/wilcoxon.hpp"
#include "opmgr/error.hpp"
#include "opmgr/pfsp/heuristics.hpp"

namespace opmgr::bench {
namespace {

using pfsp::Instance;
using pfsp::Time;

template <typename F>
ParseError capture(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError(ParseErrorKind::Truncated, 0, 0, "none");
}

// ---- instance files ----

TEST(Parse, MinimalTaillard) {
  const auto inst = parse_instance("number of jobs, number of machines :\n1 1\nprocessing times :\n7\n",
                                   InstanceFormat::Taillard);
  EXPECT_EQ(inst.jobs(), 1);
  EXPECT_EQ(inst.machines(), 1);
  EXPECT_EQ(inst.time(0, 0), 7);
  EXPECT_EQ(parse_instance("1 1\n7", InstanceFormat::Taillard).time(0, 0), 7);
}

TEST(Parse, TaillardHeaderExtrasAndCrlf) {
  const auto inst = parse_instance("2 2 12345 10 8\r\nprocessing times :\r\n1 2\r\n3 4\r\n",
                                   InstanceFormat::Taillard);
  EXPECT_EQ(inst.rows(), (std::vector<std::vector<Time>>{{1, 2}, {3, 4}}));
}

TEST(Parse, VrfPairs) {
  const auto inst = parse_instance("2 2\n0 3 1 4\n1 5 0 6\n", InstanceFormat::VRF);
  EXPECT_EQ(inst.time(0, 0), 3);
  EXPECT_EQ(inst.time(1, 0), 4);
  EXPECT_EQ(inst.time(0, 1), 6);
  EXPECT_EQ(inst.time(1, 1), 5);
}

TEST(Parse, TaillardErrorsCarryPosition) {
  auto e = capture([] { parse_instance("2 2\n1 x\n3 4\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::NonInteger);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 3u);

  e = capture([] { parse_instance("2 2\n1 2 5\n3 4\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);
  EXPECT_EQ(e.line(), 2u);

  e = capture([] { parse_instance("2 3\n1 2\n3 4\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::Truncated);

  e = capture([] { parse_instance("2 1\n1 2\n3 4\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);
  EXPECT_EQ(e.line(), 3u);

  e = capture([] { parse_instance("", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::Truncated);

  e = capture([] { parse_instance("0 2\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);

  e = capture([] { parse_instance("1 1\n-4\n", InstanceFormat::Taillard); });
  EXPECT_EQ(e.kind(), ParseErrorKind::NonInteger);
}

TEST(Parse, VrfErrors) {
  auto e = capture([] { parse_instance("2 2\n0 3 1\n1 5 0 6\n", InstanceFormat::VRF); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);
  EXPECT_EQ(e.line(), 2u);
  e = capture([] { parse_instance("2 2\n0 3 0 4\n1 5 0 6\n", InstanceFormat::VRF); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);
  e = capture([] { parse_instance("2 2\n0 3 2 4\n1 5 0 6\n", InstanceFormat::VRF); });
  EXPECT_EQ(e.kind(), ParseErrorKind::DimensionMismatch);
  e = capture([] { parse_instance("2 2\n0 3 1 4\n", InstanceFormat::VRF); });
  EXPECT_EQ(e.kind(), ParseErrorKind::Truncated);
  e = capture([] { parse_instance("2 2\n0 3 1 q\n1 5 0 6\n", InstanceFormat::VRF); });
  EXPECT_EQ(e.kind(), ParseErrorKind::NonInteger);
  EXPECT_EQ(e.column(), 7u);
}

TEST(Parse, Ta001ChecksumAgainstRawFile) {
  const std::filesystem::path path = std::filesystem::path(OPMGR_DATA_DIR) / "taillard" / "ta001";
  const auto inst = load_instance(path, InstanceFormat::Taillard);
  EXPECT_EQ(inst.name(), "ta001");
  EXPECT_EQ(inst.jobs(), 20);
  EXPECT_EQ(inst.machines(), 5);
  // Independent oracle: sum every integer after the "processing times" label.
  std::ifstream in(path);
  std::string line;
  bool body = false;
  Time sum = 0;
  while (std::getline(in, line)) {
    if (line.find("processing") != std::string::npos) {
      body = true;
      continue;
    }
    if (!body) continue;
    std::istringstream fields(line);
    Time v = 0;
    while (fields >> v) sum += v;
  }
  EXPECT_EQ(inst.total(), sum);
  EXPECT_EQ(inst.time(0, 0), 54);
  EXPECT_EQ(inst.time(0, 19), 94);
}

TEST(Generator, ReproducesTa001) {
  const auto [n, m] = taillard_size(1);
  const auto inst = generate_taillard(taillard_seed(1), n, m);
  const std::vector<Time> first_row{54, 83, 15, 71, 77, 36, 53, 38, 27, 87,
                                    76, 91, 14, 29, 12, 77, 32, 87, 68, 94};
  EXPECT_EQ(inst.rows().front(), first_row);
  EXPECT_EQ(taillard_size(111), (std::pair<int, int>{500, 20}));
  EXPECT_THROW(taillard_seed(0), InvalidArgument);
  EXPECT_THROW(taillard_size(121), InvalidArgument);
}

TEST(Parse, RoundTripProperty) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(1 + static_cast<int>(rng.below(30)),
                                      1 + static_cast<int>(rng.below(10)), rng, 0, 999);
    for (auto format : {InstanceFormat::Taillard, InstanceFormat::VRF}) {
      std::ostringstream out;
      write_instance(out, inst, format, trial % 2 ? std::optional<std::int64_t>(trial) : std::nullopt);
      ASSERT_EQ(parse_instance(out.str(), format).rows(), inst.rows());
    }
  }
}

TEST(Format, Names) {
  EXPECT_EQ(parse_format("vrf"), InstanceFormat::VRF);
  EXPECT_EQ(to_string(InstanceFormat::Taillard), "taillard");
  EXPECT_FALSE(parse_format("csv").has_value());
}

TEST(Load, MissingFileThrows) {
  EXPECT_THROW(load_instance("/nonexistent/instance", InstanceFormat::Taillard), std::runtime_error);
}

// ---- registry ----

TEST(Registry, ParsesEntriesAndFlags) {
  const auto r = BestKnownRegistry::parse("# comment\nta001 1278 optimal\n\nta051 3850  # upper bound\n");
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.best_known("ta001"), 1278);
  EXPECT_EQ(r.proven_optimum("ta001"), 1278);
  EXPECT_EQ(r.best_known("ta051"), 3850);
  EXPECT_FALSE(r.proven_optimum("ta051").has_value());
  EXPECT_FALSE(r.best_known("ta999").has_value());
}

TEST(Registry, RejectsCorruptEntries) {
  EXPECT_THROW(BestKnownRegistry::parse("ta001\n"), ParseError);
  EXPECT_THROW(BestKnownRegistry::parse("ta001 12x\n"), ParseError);
  EXPECT_THROW(BestKnownRegistry::parse("ta001 0\n"), ParseError);
  EXPECT_THROW(BestKnownRegistry::parse("ta001 5 maybe\n"), ParseError);
  EXPECT_THROW(BestKnownRegistry::parse("ta001 5\nta001 6\n"), ParseError);
  const auto e = capture([] { BestKnownRegistry::parse("a 1\nb 2\nc x\n"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 3u);
}

TEST(Registry, ShippedFileLoads) {
  const auto r =
      BestKnownRegistry::load(std::filesystem::path(OPMGR_DATA_DIR) / "best_known_taillard.txt");
  EXPECT_EQ(r.size(), 40u);
  EXPECT_EQ(r.proven_optimum("ta001"), 1278);
}

// ---- metrics ----

TEST(Metrics, Rpd) {
  EXPECT_EQ(rpd(1000, 1000), 0.0);
  EXPECT_NEAR(rpd(1010, 1000), 1.0, 1e-12);
  EXPECT_NEAR(rpd(995, 1000), -0.5, 1e-12);
  EXPECT_THROW(rpd(10, 0), InvalidArgument);
}

TEST(Metrics, Arpd) {
  EXPECT_EQ(arpd(std::vector<double>{0, 0, 0}), 0.0);
  EXPECT_NEAR(arpd(std::vector<double>{1.0, -0.5}), 0.25, 1e-12);
  EXPECT_EQ(arpd(std::vector<double>{0.7}), 0.7);
  EXPECT_THROW(arpd(std::vector<double>{}), InvalidArgument);
}

TEST(Metrics, TimeBudget) {
  EXPECT_EQ(time_budget_ms(20, 5, 60), 3000);
  EXPECT_EQ(time_budget_ms(500, 20, 120), 600000);
  EXPECT_EQ(time_budget_ms(20, 5, 0), 0);
  EXPECT_EQ(time_budget_ms(5, 1, 3), 7);  // 7.5 truncated
  EXPECT_THROW(time_budget_ms(-1, 5, 60), InvalidArgument);
}

TEST(Metrics, Normalize) {
  EXPECT_EQ(normalize(std::vector<double>{5}), std::vector<double>{0});
  EXPECT_EQ(normalize(std::vector<double>{1, 3}), (std::vector<double>{0, 1}));
  EXPECT_EQ(normalize(std::vector<double>{2, 2, 2}), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(normalize(std::vector<double>{4, 2, 3}), (std::vector<double>{1, 0, 0.5}));
  EXPECT_TRUE(normalize(std::vector<double>{}).empty());
}

// ---- Wilcoxon ----

TEST(Wilcoxon, AllZeroDifferencesNotApplicable) {
  const std::vector<double> x{1, 2, 3, 4, 5, 6};
  const auto r = wilcoxon_signed_rank(x, x);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.significant);
  EXPECT_EQ(r.pairs_used, 0u);
}

TEST(Wilcoxon, TooFewPairsOrMismatch) {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{0, 0, 0, 0};
  EXPECT_FALSE(wilcoxon_signed_rank(x, y).applicable);
  EXPECT_THROW(wilcoxon_signed_rank(x, std::vector<double>{1}), InvalidArgument);
}

TEST(Wilcoxon, ReferenceVectors) {
  const auto& cases = wilcoxon_reference_cases();
  ASSERT_EQ(cases.size(), 20u);
  for (const auto& c : cases) {
    const auto r = wilcoxon_signed_rank(c.x, c.y);
    ASSERT_TRUE(r.applicable) << c.name;
    EXPECT_NEAR(r.statistic, c.statistic, 1e-9) << c.name;
    EXPECT_NEAR(r.p_value, c.p_value, 1e-9) << c.name;
  }
}

// Exact two-sided p-value by enumerating all 2^n sign patterns.
double exact_p(const std::vector<double>& ranks, double statistic) {
  const std::size_t n = ranks.size();
  std::size_t extreme = 0;
  const double total = std::accumulate(ranks.begin(), ranks.end(), 0.0);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    double plus = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1U) plus += ranks[k];
    }
    if (std::min(plus, total - plus) <= statistic + 1e-9) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(1ULL << n);
}

TEST(Wilcoxon, UniformShiftAgainstExactEnumeration) {
  std::vector<double> x(20), y(20);
  for (int k = 0; k < 20; ++k) {
    y[k] = 10.0 + 3.0 * k;
    x[k] = y[k] + 1.0;
  }
  const auto r = wilcoxon_signed_rank(x, y);
  ASSERT_TRUE(r.applicable);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_LT(r.p_value, 0.001);
  EXPECT_TRUE(r.significant);
  // All |d| tie, so every rank is 10.5.
  const double exact = exact_p(std::vector<double>(20, 10.5), 0.0);
  EXPECT_LT(exact, 0.001);
  EXPECT_NEAR(exact, 2.0 / (1 << 20), 1e-15);
}

TEST(Wilcoxon, SmallSampleApproximationNearExact) {
  const std::vector<double> x{1.8, 2.9, 3.1, 4.7, 5.2, 6.6, 7.0, 8.4, 9.9, 10.3, 11.1, 12.5};
  const std::vector<double> y{1.0, 3.5, 2.0, 3.9, 5.0, 7.1, 5.5, 7.0, 8.0, 11.0, 9.0, 10.0};
  const auto r = wilcoxon_signed_rank(x, y);
  std::vector<double> diffs(12);
  for (int k = 0; k < 12; ++k) diffs[k] = std::fabs(x[k] - y[k]);
  std::vector<double> ranks(12);
  for (int k = 0; k < 12; ++k) {
    double less = 0, equal = 0;
    for (double d : diffs) {
      less += d < diffs[k];
      equal += d == diffs[k];
    }
    ranks[k] = less + (equal + 1) / 2;
  }
  EXPECT_NEAR(r.p_value, exact_p(ranks, r.statistic), 0.03);
}

TEST(Wilcoxon, SymmetricInArguments) {
  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(15), y(15);
    for (int k = 0; k < 15; ++k) {
      x[k] = static_cast<double>(rng.below(10));
      y[k] = static_cast<double>(rng.below(10));
    }
    const auto a = wilcoxon_signed_rank(x, y);
    const auto b = wilcoxon_signed_rank(y, x);
    ASSERT_EQ(a.applicable, b.applicable);
    EXPECT_EQ(a.statistic, b.statistic);
    EXPECT_NEAR(a.p_value, b.p_value, 1e-15);
    EXPECT_EQ(a.rank_sum_positive, b.rank_sum_negative);
  }
}

// ---- experiment runner ----

ExperimentPlan tiny_plan(std::vector<Instance> instances, BestKnownRegistry registry) {
  ExperimentPlan plan;
  for (auto& i : instances) plan.instances.push_back({"synthetic", std::move(i)});
  engine::EngineConfig dqig;
  plan.variants = {{"dqig", dqig}};
  plan.replications = 1;
  plan.budget_mode = engine::BudgetMode::Iterations;
  plan.iterations = 30;
  plan.registry = std::move(registry);
  return plan;
}

TEST(Experiment, SingleRun) {
  Rng rng(50);
  auto inst = random_instance(8, 3, rng);
  inst.set_name("x1");
  BestKnownRegistry reg;
  reg.add("x1", brute_force_optimum(inst).makespan, true);
  const auto report = run_experiment(tiny_plan({inst}, reg));
  ASSERT_EQ(report.records.size(), 1u);
  EXPECT_GE(report.records[0].rpd, 0.0);
  std::ostringstream csv;
  write_csv(report, engine::BudgetMode::Iterations, csv);
  const auto text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_NE(text.find(",NA\n"), std::string::npos);
  const auto json = summary_json(report, tiny_plan({inst}, reg));
  EXPECT_EQ(json["plan"]["replications"], 1);
  EXPECT_EQ(json["plan"]["instances"][0]["name"], "x1");
}

TEST(Experiment, IdenticalVariantsMatch) {
  Rng rng(51);
  std::vector<Instance> instances;
  BestKnownRegistry reg;
  for (int k = 0; k < 3; ++k) {
    auto inst = random_instance(12, 4, rng);
    inst.set_name("r" + std::to_string(k));
    reg.add(inst.name(), pfsp::neh_construct(inst).makespan);
    instances.push_back(inst);
  }
  auto plan = tiny_plan(instances, reg);
  plan.replications = 3;
  plan.variants.push_back({"dqig_again", plan.variants.front().config});
  const auto report = run_experiment(plan);
  ASSERT_EQ(report.records.size(), 18u);
  std::map<std::string, double> avg;
  for (const auto& s : report.summaries) {
    if (s.set == "all") avg[s.variant] = s.average_arpd;
  }
  EXPECT_EQ(avg["dqig"], avg["dqig_again"]);
  ASSERT_EQ(report.comparisons.size(), 1u);
  EXPECT_FALSE(report.comparisons[0].test.applicable);
}

TEST(Experiment, BestArpdZeroExactlyWhenOptimumHit) {
  Rng rng(52);
  std::vector<Instance> instances;
  BestKnownRegistry reg;
  std::map<std::string, Time> optimum;
  for (int k = 0; k < 10; ++k) {
    auto inst = random_instance(5, 2, rng);
    inst.set_name("s" + std::to_string(k));
    optimum[inst.name()] = brute_force_optimum(inst).makespan;
    reg.add(inst.name(), optimum[inst.name()], true);
    instances.push_back(inst);
  }
  auto plan = tiny_plan(instances, reg);
  plan.iterations = 12;
  plan.replications = 2;
  const auto report = run_experiment(plan);
  for (const auto& r : report.records) {
    EXPECT_GE(r.rpd, 0.0);
    EXPECT_EQ(r.rpd == 0.0, r.makespan == optimum[r.instance]);
  }
  for (const auto& s : report.summaries) EXPECT_GE(s.best_arpd, 0.0);
}

TEST(Experiment, MissingBestKnownSkipsWithWarning) {
  Rng rng(53);
  auto a = random_instance(6, 2, rng);
  a.set_name("known");
  auto b = random_instance(6, 2, rng);
  b.set_name("unknown");
  BestKnownRegistry reg;
  reg.add("known", 1);
  const auto report = run_experiment(tiny_plan({a, b}, reg));
  EXPECT_EQ(report.records.size(), 1u);
  EXPECT_EQ(report.skipped_instances, 1u);
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_NE(report.warnings[0].find("unknown"), std::string::npos);
}

TEST(Experiment, PlanValidation) {
  ExperimentPlan plan;
  plan.variants = {{"a", {}}, {"a", {}}};
  EXPECT_THROW(plan.validate(), ConfigError);
  plan.variants = {{"a", {}}};
  plan.replications = 0;
  EXPECT_THROW(plan.validate(), ConfigError);
  plan.replications = 1;
  plan.time_scales = {};
  EXPECT_THROW(plan.validate(), ConfigError);
}

TEST(Experiment, SeedsIgnoreVariantAndDifferAcrossRuns) {
  EXPECT_EQ(derive_run_seed(1, "ta001", 60, 0), derive_run_seed(1, "ta001", 60, 0));
  EXPECT_NE(derive_run_seed(1, "ta001", 60, 0), derive_run_seed(1, "ta001", 60, 1));
  EXPECT_NE(derive_run_seed(1, "ta001", 60, 0), derive_run_seed(1, "ta002", 60, 0));
  EXPECT_NE(derive_run_seed(1, "ta001", 60, 0), derive_run_seed(2, "ta001", 60, 0));
  EXPECT_NE(derive_run_seed(1, "ta001", 60, 0), derive_run_seed(1, "ta001", 120, 0));
}

TEST(Experiment, AtomicWriteReplacesFile) {
  const auto dir = std::filesystem::temp_directory_path() / "opmgr_atomic_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomically(path, "first\n");
  write_file_atomically(path, "second\n");
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, "second\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  std::filesystem::remove_all(dir);
}

// ---- built-in oracle suites ----

TEST(Oracles, SuitesPass) {
  EXPECT_TRUE(check_acceleration(100, 3).ok());
  EXPECT_TRUE(check_wilcoxon().ok());
  const auto bf = check_brute_force(10, 300, 9, 4);
  EXPECT_TRUE(bf.ok()) << (bf.failures.empty() ? "" : bf.failures.front());
}

TEST(Oracles, BruteForceAndNaiveAgree) {
  Rng rng(60);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_instance(6, 3, rng);
    const auto opt = brute_force_optimum(inst);
    EXPECT_EQ(opt.makespan, naive_makespan(inst, opt.sequence));
    EXPECT_LE(opt.makespan, pfsp::neh_construct(inst).makespan);
  }
  EXPECT_THROW(brute_force_optimum(random_instance(11, 2, rng)), InvalidArgument);
}

}  // namespace
}  // namespace opmgr::bench
