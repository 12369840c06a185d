// Copyright 2026 The gtsched Authors
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

// gtsched: command-line front end for the give-and-take exchange library.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gt/algorithms.hpp"
#include "gt/analysis.hpp"
#include "gt/harness.hpp"
#include "gt/io.hpp"
#include "gt/oracle.hpp"

namespace {

constexpr const char* kSeedEnv = "GTSCHED_SEED";

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    gt::write_file(path, text);
  }
}

// Seed flag wins, then the environment, then the fallback.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kSeedEnv) + " is not an integer");
    }
  }
  return fallback;
}

gt::TieRule make_tie(const std::string& mode, std::uint64_t seed) {
  if (mode == "lowest") return gt::TieRule::lowest_pair();
  if (mode == "random") return gt::TieRule::seeded_random(seed);
  throw std::invalid_argument("--tie must be lowest or random");
}

gt::Validation validation(bool relaxed) {
  return relaxed ? gt::Validation::kRelaxed : gt::Validation::kStrict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Give-and-take segment exchange scheduling"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  std::size_t gen_m = 4, gen_n = 5, gen_k = 2;
  std::optional<std::uint64_t> gen_seed;
  bool gen_relaxed = false;
  std::string gen_out;
  gen->add_option("-m", gen_m, "Number of nodes")->required();
  gen->add_option("-n", gen_n, "Universe size")->required();
  gen->add_option("-k", gen_k, "Segments per node")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_flag("--relaxed", gen_relaxed, "Allow empty or full initial sets");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on an instance");
  std::string run_instance, run_algorithm = "glink", run_tie = "lowest",
                            run_schedule_out, run_out;
  std::optional<std::uint64_t> run_seed;
  std::uint64_t run_tie_seed = 0;
  bool run_relaxed = false;
  run->add_option("instance", run_instance, "Instance file")->required();
  run->add_option("-a,--algorithm", run_algorithm, "rand|glink|poly|ginc|rare");
  run->add_option("--seed", run_seed, "Seed for the randomized algorithm");
  run->add_option("--tie", run_tie, "Tie rule: lowest|random");
  run->add_option("--tie-seed", run_tie_seed, "Seed for random tie breaking");
  run->add_option("--schedule-out", run_schedule_out, "Write the schedule file");
  run->add_option("-o,--output", run_out, "Trace output (default stdout)");
  run->add_flag("--relaxed", run_relaxed, "Allow empty or full initial sets");

  // replay
  auto* replay = app.add_subcommand("replay", "Replay a schedule file");
  std::string replay_instance, replay_schedule;
  bool replay_relaxed = false;
  replay->add_option("instance", replay_instance, "Instance file")->required();
  replay->add_option("schedule", replay_schedule, "Schedule file")->required();
  replay->add_flag("--relaxed", replay_relaxed, "Allow empty or full sets");

  // optimal
  auto* optimal = app.add_subcommand("optimal", "Exact optimum by search");
  std::string opt_instance, opt_out;
  gt::SearchLimits opt_limits;
  bool opt_relaxed = false;
  optimal->add_option("instance", opt_instance, "Instance file")->required();
  optimal->add_option("--max-states", opt_limits.max_states, "Visited-state budget");
  optimal->add_option("--max-seconds", opt_limits.max_seconds, "Time budget");
  optimal->add_option("-o,--output", opt_out, "Output file (default stdout)");
  optimal->add_flag("--relaxed", opt_relaxed, "Allow empty or full sets");

  // batch
  auto* batch = app.add_subcommand("batch", "Benchmark algorithms on random instances");
  std::string batch_config_path, batch_csv, batch_json, batch_oracle, batch_tie;
  std::optional<std::size_t> batch_m, batch_n, batch_k, batch_runs;
  std::optional<std::uint64_t> batch_seed, batch_max_states;
  std::optional<double> batch_max_seconds;
  std::vector<std::string> batch_algorithms;
  batch->add_option("--config", batch_config_path, "JSON batch configuration");
  batch->add_option("-m", batch_m, "Number of nodes");
  batch->add_option("-n", batch_n, "Universe size");
  batch->add_option("-k", batch_k, "Segments per node");
  batch->add_option("--runs", batch_runs, "Random instances");
  batch->add_option("--seed", batch_seed, "Master seed");
  batch->add_option("--algorithms", batch_algorithms, "Subset of rand glink poly ginc rare");
  batch->add_option("--oracle", batch_oracle, "exact|skip");
  batch->add_option("--max-states", batch_max_states, "Oracle state budget per run");
  batch->add_option("--max-seconds", batch_max_seconds, "Oracle time budget per run");
  batch->add_option("--tie", batch_tie, "Tie rule: lowest|random");
  batch->add_option("--csv", batch_csv, "Per-run CSV output");
  batch->add_option("--json", batch_json, "JSON summary output");

  // pmnk
  auto* pmnk = app.add_subcommand("pmnk", "Coverage probability of random sets");
  std::size_t p_m = 2, p_n = 2, p_k = 1;
  std::optional<std::uint64_t> p_trials, p_seed;
  pmnk->add_option("-m", p_m)->required();
  pmnk->add_option("-n", p_n)->required();
  pmnk->add_option("-k", p_k)->required();
  pmnk->add_option("--trials", p_trials, "Estimate by Monte Carlo instead");
  pmnk->add_option("--seed", p_seed, "Monte Carlo seed");

  // bound
  auto* bound = app.add_subcommand("bound", "Randomized-algorithm lower bound");
  std::size_t b_m = 60, b_n = 100, b_k = 3;
  bool b_trace = false;
  bound->add_option("-m", b_m)->required();
  bound->add_option("-n", b_n)->required();
  bound->add_option("-k", b_k)->required();
  bound->add_flag("--trace", b_trace, "Print the per-phase sequence");

  // table
  auto* table = app.add_subcommand("table", "Comparison tables");
  std::string t_preset = "bounds";
  std::size_t t_runs = 100;
  std::optional<std::uint64_t> t_seed;
  table->add_option("--preset", t_preset, "bounds|heuristics");
  table->add_option("--runs", t_runs, "Runs per row");
  table->add_option("--seed", t_seed, "Master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto instance = gt::gen_instance(gen_m, gen_n, gen_k,
                                             resolve_seed(gen_seed, 1),
                                             validation(gen_relaxed));
      emit(gt::format_instance(instance), gen_out);
    } else if (*run) {
      const auto instance = gt::parse_instance(gt::read_file(run_instance),
                                               validation(run_relaxed));
      const auto id = gt::parse_algorithm(run_algorithm);
      if (!id) throw std::invalid_argument("unknown algorithm " + run_algorithm);
      const auto result =
          gt::run_algorithm(*id, instance, resolve_seed(run_seed, 1),
                            make_tie(run_tie, run_tie_seed));
      if (!run_schedule_out.empty()) {
        gt::write_file(run_schedule_out,
                       gt::format_schedule(result.schedule.links()));
      }
      emit(gt::format_run(result), run_out);
    } else if (*replay) {
      const auto instance = gt::parse_instance(gt::read_file(replay_instance),
                                               validation(replay_relaxed));
      const auto steps = gt::parse_schedule(gt::read_file(replay_schedule));
      const auto result = gt::apply_schedule(instance, steps);
      std::cout << "steps " << result.schedule.size() << "\nalpha "
                << gt::aggregate_cardinality(result.final_state) << "\nmaximal "
                << (gt::is_maximal(result.final_state) ? "yes" : "no") << '\n';
    } else if (*optimal) {
      const auto instance = gt::parse_instance(gt::read_file(opt_instance),
                                               validation(opt_relaxed));
      emit(gt::format_oracle(gt::optimal_alpha(instance, opt_limits)), opt_out);
    } else if (*batch) {
      gt::BatchConfig config;
      config.seed = resolve_seed(std::nullopt, config.seed);
      if (!batch_config_path.empty()) {
        config = gt::batch_config_from_json(gt::read_file(batch_config_path),
                                            config);
      }
      if (batch_m) config.m = *batch_m;
      if (batch_n) config.n = *batch_n;
      if (batch_k) config.k = *batch_k;
      if (batch_runs) config.runs = *batch_runs;
      if (batch_seed) config.seed = *batch_seed;
      if (batch_max_states) config.limits.max_states = *batch_max_states;
      if (batch_max_seconds) config.limits.max_seconds = *batch_max_seconds;
      if (!batch_oracle.empty()) {
        if (batch_oracle != "exact" && batch_oracle != "skip") {
          throw std::invalid_argument("--oracle must be exact or skip");
        }
        config.oracle = batch_oracle == "exact" ? gt::OracleMode::kExact
                                                : gt::OracleMode::kSkip;
      }
      if (!batch_tie.empty()) config.tie = make_tie(batch_tie, config.seed);
      if (!batch_algorithms.empty()) {
        config.algorithms.clear();
        for (const auto& name : batch_algorithms) {
          const auto id = gt::parse_algorithm(name);
          if (!id) throw std::invalid_argument("unknown algorithm " + name);
          config.algorithms.push_back(*id);
        }
      }
      const auto report = gt::run_batch(config);
      if (!batch_csv.empty()) {
        std::ofstream out(batch_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + batch_csv);
        gt::write_csv(out, report.records);
      }
      if (!batch_json.empty()) gt::write_file(batch_json, gt::report_to_json(report));
      std::cout << gt::format_report(report);
    } else if (*pmnk) {
      if (p_trials) {
        const std::uint64_t seed = resolve_seed(p_seed, 1);
        const auto mc = gt::pmnk_montecarlo(p_m, p_n, p_k, *p_trials, seed);
        std::printf("p^{%zu,%zu,%zu} ~= %.6f +- %.6f (monte carlo, %llu trials, seed %llu)\n",
                    p_m, p_n, p_k, mc.estimate, mc.stderr_,
                    static_cast<unsigned long long>(mc.trials),
                    static_cast<unsigned long long>(mc.seed));
      } else {
        const auto p = gt::pmnk_exact(p_m, p_n, p_k);
        std::printf("p^{%zu,%zu,%zu} = %s = %.12g (exact)\n", p_m, p_n, p_k,
                    p.to_string().c_str(), p.value());
      }
    } else if (*bound) {
      const auto trace = gt::randomized_lower_bound(b_m, b_n, b_k);
      std::printf("bound %.4f\n", trace.bound);
      std::printf("upper %zu\n", b_m * b_n);
      std::printf("approx_condition %s\n",
                  gt::approx_condition_holds(b_m, b_n, b_k) ? "holds" : "fails");
      if (b_trace) {
        for (std::size_t p = 0; p < trace.expected_sizes.size(); ++p) {
          std::printf("s_%zu %.6f", p + 1, trace.expected_sizes[p]);
          if (p < trace.phase_factors.size()) {
            std::printf("  factor %.6f", trace.phase_factors[p]);
          }
          std::printf("\n");
        }
      }
    } else if (*table) {
      const std::uint64_t seed = resolve_seed(t_seed, 1);
      std::vector<gt::BatchConfig> configs;
      if (t_preset == "bounds") {
        configs = gt::bound_table_configs(t_runs, seed);
      } else if (t_preset == "heuristics") {
        for (auto [m, n, k] : {std::tuple{15, 20, 5}, std::tuple{40, 50, 5}}) {
          gt::BatchConfig c;
          c.m = m;
          c.n = n;
          c.k = k;
          c.runs = t_runs;
          c.seed = seed;
          configs.push_back(c);
        }
      } else {
        throw std::invalid_argument("--preset must be bounds or heuristics");
      }
      std::cout << gt::compare_table(configs);
    }
  } catch (const std::exception& e) {
    std::cerr << "gtsched: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
