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

#include "opmgr/cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opmgr/bench/experiment.hpp"
#include "opmgr/bench/instance_io.hpp"
#include "opmgr/bench/metrics.hpp"
#include "opmgr/bench/oracles.hpp"
#include "opmgr/bench/registry.hpp"
#include "opmgr/cli/config.hpp"
#include "opmgr/engine/solver.hpp"
#include "opmgr/error.hpp"

namespace opmgr::cli {

namespace {

namespace fs = std::filesystem;

// Flag values as given on the command line; unset flags defer to the file.
struct Flags {
  std::string config;
  std::string instance;
  std::string dataset;
  std::string format;
  std::string variant;
  std::string timescale;
  std::string reps;
  std::string seed;
  std::string budget_mode;
  std::string iterations;
  std::string out;
  std::string registry;
  std::string trace;
  std::string filter;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path, const char* what) {
  if (!fs::exists(path)) throw UsageError(std::string(what) + " not found: " + path);
}

// Config file first, then flags on top.
KeyValueConfig merged_config(const Flags& flags, CLI::App& sub, bool experiment) {
  KeyValueConfig config;
  if (!flags.config.empty()) {
    require_file(flags.config, "config file");
    config = KeyValueConfig::load(flags.config);
  }
  auto apply = [&](const char* flag, const std::string& value, const std::string& key) {
    const auto* option = sub.get_option_no_throw(flag);
    if (option != nullptr && option->count() > 0) config.set(key, value);
  };
  apply("--instance", flags.instance, "io.instance");
  apply("--dataset", flags.dataset, "io.dataset");
  apply("--format", flags.format, "io.format");
  apply("--variant", flags.variant, experiment ? "plan.variants" : "engine.variant");
  apply("--t", flags.timescale, experiment ? "plan.t" : "engine.t");
  apply("--reps", flags.reps, "plan.reps");
  apply("--seed", flags.seed, experiment ? "plan.seed" : "engine.seed");
  apply("--budget-mode", flags.budget_mode, "engine.budget_mode");
  apply("--iterations", flags.iterations, "engine.iterations");
  apply("--out", flags.out, "io.out");
  apply("--registry", flags.registry, "io.registry");
  apply("--trace", flags.trace, "io.trace");
  return config;
}

bench::InstanceFormat format_of(const KeyValueConfig& config) {
  const auto text = config.get("io.format").value_or("taillard");
  const auto format = bench::parse_format(text);
  if (!format) throw ConfigError("io.format: expected taillard or vrf, got '" + text + "'");
  return *format;
}

std::optional<bench::BestKnownRegistry> registry_of(const KeyValueConfig& config) {
  const auto path = config.get("io.registry");
  if (!path) return std::nullopt;
  require_file(*path, "registry");
  return bench::BestKnownRegistry::load(*path);
}

struct LoadedDataset {
  std::string name;
  std::vector<pfsp::Instance> instances;
  std::size_t failures = 0;
};

LoadedDataset load_dataset(const std::string& dir, bench::InstanceFormat format,
                           std::ostream& err) {
  require_file(dir, "dataset");
  LoadedDataset data;
  data.name = fs::path(dir).lexically_normal().filename().string();
  if (data.name.empty()) data.name = fs::path(dir).lexically_normal().parent_path().filename().string();
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      data.instances.push_back(bench::load_instance(file, format));
    } catch (const std::exception& e) {
      ++data.failures;
      err << "warning: skipping " << file.string() << ": " << e.what() << '\n';
    }
  }
  return data;
}

std::string sequence_text(const std::vector<pfsp::JobId>& sequence) {
  std::ostringstream text;
  for (std::size_t k = 0; k < sequence.size(); ++k) text << (k ? " " : "") << sequence[k] + 1;
  return text.str();
}

int cmd_solve(const Flags& flags, CLI::App& sub, std::ostream& out, std::ostream& err) {
  const auto config = merged_config(flags, sub, false);
  const auto path = config.get("io.instance");
  if (!path) throw UsageError("solve needs --instance");
  require_file(*path, "instance");
  const auto instance = bench::load_instance(*path, format_of(config));
  const auto registry = registry_of(config);

  auto engine = engine_config(config);
  const auto timescale = config.get_int("engine.t").value_or(60);
  if (timescale <= 0) throw ConfigError("engine.t must be positive");
  engine.budget.time_ms = config.get_int("engine.budget_ms")
                              .value_or(bench::time_budget_ms(instance.jobs(), instance.machines(),
                                                              static_cast<int>(timescale)));
  engine.validate();
  const auto result = engine::solve(instance, engine);

  std::ostringstream report;
  report << "instance: " << instance.name() << " (" << instance.jobs() << "x"
         << instance.machines() << ")\n";
  report << "variant: " << engine::to_string(engine.variant) << '\n';
  report << "seed: " << engine.seed << '\n';
  report << "best_makespan: " << result.best.makespan << '\n';
  report << "sequence: " << sequence_text(result.best.sequence) << '\n';
  if (registry) {
    if (const auto known = registry->best_known(instance.name())) {
      report << "rpd: " << std::fixed << std::setprecision(3)
             << bench::rpd(result.best.makespan, *known) << '\n';
    } else {
      err << "warning: no best-known value for " << instance.name() << '\n';
    }
  }
  report << "iterations: " << result.iterations << '\n';
  report << "episodes: " << result.episodes << '\n';
  if (engine.budget.mode == engine::BudgetMode::Time) {
    report << "elapsed_ms: " << result.elapsed_ms << '\n';
  }
  out << report.str();

  if (const auto trace = config.get("io.trace")) {
    std::ostringstream text;
    engine::write_trace(result.trace, text);
    bench::write_file_atomically(*trace, text.str());
  }
  if (const auto target = config.get("io.out")) bench::write_file_atomically(*target, report.str());
  return kOk;
}

int cmd_experiment(const Flags& flags, CLI::App& sub, std::ostream& out, std::ostream& err) {
  const auto config = merged_config(flags, sub, true);
  const auto dir = config.get("io.dataset");
  if (!dir) throw UsageError("experiment needs --dataset");
  const auto target = config.get("io.out");
  if (!target) throw UsageError("experiment needs --out");
  auto registry = registry_of(config);
  if (!registry) throw UsageError("experiment needs --registry");

  auto data = load_dataset(*dir, format_of(config), err);
  const std::size_t total = data.instances.size() + data.failures;

  bench::ExperimentPlan plan;
  plan.registry = std::move(*registry);
  for (auto& instance : data.instances) plan.instances.push_back({data.name, std::move(instance)});
  const auto base = engine_config(config);
  for (const auto& label : config.get_list("plan.variants").value_or(std::vector<std::string>{"dqig"})) {
    const auto variant = engine::parse_variant(label);
    if (!variant) throw ConfigError("plan.variants: unknown variant '" + label + "'");
    auto spec = base;
    spec.variant = *variant;
    plan.variants.push_back({label, spec});
  }
  plan.replications = static_cast<int>(config.get_int("plan.reps").value_or(30));
  if (auto scales = config.get_list("plan.t")) {
    plan.time_scales.clear();
    for (const auto& s : *scales) {
      KeyValueConfig probe;
      probe.set("plan.t", s);
      plan.time_scales.push_back(static_cast<int>(*probe.get_int("plan.t")));
    }
  }
  plan.base_seed = static_cast<std::uint64_t>(config.get_int("plan.seed").value_or(1));
  plan.budget_mode = base.budget.mode;
  plan.iterations = base.budget.iterations;
  plan.stop_at_proven_optimum = config.get_bool("plan.stop_at_optimum").value_or(false);
  plan.threads = static_cast<std::size_t>(
      config.get_int("plan.threads").value_or(static_cast<std::int64_t>(bench::default_thread_count())));
  plan.validate();

  const auto report = bench::run_experiment(plan);
  for (const auto& warning : report.warnings) err << "warning: " << warning << '\n';

  std::ostringstream csv;
  bench::write_csv(report, plan.budget_mode, csv);
  bench::write_file_atomically(*target + ".csv", csv.str());
  bench::write_file_atomically(*target + ".json", bench::summary_json(report, plan).dump(2) + "\n");

  for (const auto& s : report.summaries) {
    if (s.set != "all") continue;
    out << s.dataset << " t=" << s.timescale << " " << s.variant << ": average ARPD "
        << std::fixed << std::setprecision(3) << s.average_arpd << ", best ARPD " << s.best_arpd
        << " (" << s.runs << " runs)\n";
  }
  out << "wrote " << *target << ".csv and " << *target << ".json\n";
  const bool all_failed = total > 0 && report.records.empty();
  return (total == 0 || all_failed) ? kFailure : kOk;
}

int cmd_validate(const Flags& flags, CLI::App& sub, std::ostream& out, std::ostream& err) {
  const auto config = merged_config(flags, sub, false);
  const auto format = format_of(config);
  const auto registry = registry_of(config);
  std::vector<pfsp::Instance> instances;
  std::size_t failures = 0;
  if (const auto path = config.get("io.instance")) {
    require_file(*path, "instance");
    instances.push_back(bench::load_instance(*path, format));
  }
  if (const auto dir = config.get("io.dataset")) {
    auto data = load_dataset(*dir, format, err);
    failures += data.failures;
    for (auto& i : data.instances) instances.push_back(std::move(i));
  }
  if (instances.empty() && failures == 0 && !registry) {
    throw UsageError("validate needs --instance, --dataset or --registry");
  }
  for (const auto& instance : instances) {
    out << instance.name() << ": " << instance.jobs() << "x" << instance.machines()
        << ", total processing time " << instance.total();
    if (registry) {
      if (const auto known = registry->best_known(instance.name())) {
        out << ", best known " << *known;
      } else {
        out << ", no best-known value";
      }
    }
    out << '\n';
  }
  if (registry) out << "registry: " << registry->size() << " entries\n";
  return failures == 0 ? kOk : kFailure;
}

int cmd_oracle_check(const Flags& flags, CLI::App& sub, std::ostream& out) {
  const auto config = merged_config(flags, sub, false);
  const std::vector<std::string> suites{"acceleration", "brute-force", "wilcoxon", "registry"};
  if (!flags.filter.empty() &&
      std::find(suites.begin(), suites.end(), flags.filter) == suites.end()) {
    throw UsageError("unknown oracle suite '" + flags.filter + "'");
  }
  auto wanted = [&](const std::string& name) { return flags.filter.empty() || flags.filter == name; };

  std::vector<bench::OracleSuiteResult> results;
  if (wanted("acceleration")) results.push_back(bench::check_acceleration(1000, 1));
  if (wanted("brute-force")) results.push_back(bench::check_brute_force(50, 500, 48, 7));
  if (wanted("wilcoxon")) results.push_back(bench::check_wilcoxon());
  if (wanted("registry") && config.get("io.registry")) {
    bench::OracleSuiteResult suite;
  suite.name = "registry";
    try {
      const auto registry = registry_of(config);
      suite.passed = static_cast<std::int64_t>(registry->size());
    } catch (const std::exception& e) {
      suite.failed = 1;
      suite.failures.push_back(e.what());
    }
    results.push_back(std::move(suite));
  }

  int failed_suites = 0;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.passed << " passed, "
        << r.failed << " failed)" << (r.note.empty() ? "" : "; " + r.note) << '\n';
    for (const auto& f : r.failures) out << "  " << r.name << ": " << f << '\n';
    failed_suites += !r.ok();
  }
  out << "oracle-check: " << results.size() - failed_suites << " suites passed, " << failed_suites
      << " failed\n";
  return failed_suites == 0 ? kOk : kFailure;
}

void add_common(CLI::App& sub, Flags& flags) {
  sub.add_option("--config", flags.config, "key=value config file; flags override it");
  sub.add_option("--format", flags.format, "instance format: taillard or vrf");
  sub.add_option("--registry", flags.registry, "best-known makespan registry");
}

void add_run_options(CLI::App& sub, Flags& flags) {
  sub.add_option("--variant", flags.variant, "dqig, sqig, rig, scig or igrs");
  sub.add_option("--t", flags.timescale, "timescale t; budget is (n*m/2)*t ms");
  sub.add_option("--seed", flags.seed, "random seed");
  sub.add_option("--budget-mode", flags.budget_mode, "time or iters");
  sub.add_option("--iterations", flags.iterations, "iteration budget in iters mode");
  sub.add_option("--out", flags.out, "output path");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated greedy flowshop solver with Q-learning operator management"};
  app.require_subcommand(1);
  Flags flags;

  auto* solve = app.add_subcommand("solve", "solve one instance");
  add_common(*solve, flags);
  add_run_options(*solve, flags);
  solve->add_option("--instance", flags.instance, "instance file");
  solve->add_option("--trace", flags.trace, "write the per-episode trace here");

  auto* experiment = app.add_subcommand("experiment", "run a replicated benchmark plan");
  add_common(*experiment, flags);
  add_run_options(*experiment, flags);
  experiment->add_option("--dataset", flags.dataset, "directory of instance files");
  experiment->add_option("--reps", flags.reps, "replications per instance");

  auto* validate = app.add_subcommand("validate", "parse instances and registry");
  add_common(*validate, flags);
  validate->add_option("--instance", flags.instance, "instance file");
  validate->add_option("--dataset", flags.dataset, "directory of instance files");

  auto* oracle = app.add_subcommand("oracle-check", "run the built-in oracle suites");
  add_common(*oracle, flags);
  oracle->add_option("--filter", flags.filter, "acceleration, brute-force, wilcoxon or registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(flags, *solve, out, err);
    if (experiment->parsed()) return cmd_experiment(flags, *experiment, out, err);
    if (validate->parsed()) return cmd_validate(flags, *validate, out, err);
    return cmd_oracle_check(flags, *oracle, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace opmgr::cli
