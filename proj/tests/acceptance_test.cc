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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gt/algorithms.hpp"
#include "gt/analysis.hpp"
#include "gt/harness.hpp"
#include "gt/oracle.hpp"
#include "test_util.hpp"

namespace gt {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome TableBounds() {
  struct Row {
    std::size_t m, n, k;
    double published;
  };
  const Row rows[] = {{60, 100, 3, 3867.4},
                      {60, 100, 5, 4829.2},
                      {60, 100, 7, 5318.0},
                      {80, 200, 15, 15106.0},
                      {100, 300, 15, 27486.0}};
  bool pass = true;
  double worst_rel = 0.0, slowest_ms = 0.0;
  for (const Row& r : rows) {
    const auto start = Clock::now();
    const double bound = randomized_lower_bound(r.m, r.n, r.k).bound;
    slowest_ms = std::max(slowest_ms, 1e3 * SecondsSince(start));
    const double rel = std::abs(bound - r.published) / r.published;
    worst_rel = std::max(worst_rel, rel);
    pass = pass && rel <= 1e-3;
  }
  pass = pass && slowest_ms < 1.0;
  return {pass, Fmt("worst relative error %.2e (limit 1e-3), slowest %.3f ms",
                    worst_rel, slowest_ms)};
}

Outcome RandomizedVsTable() {
  const auto start = Clock::now();
  BatchConfig config;
  config.m = 60;
  config.n = 100;
  config.k = 3;
  config.runs = 100;
  config.seed = 1;
  config.algorithms = {AlgorithmId::kRandomized};
  const BatchReport report = run_batch(config);
  const double mean = report.summaries.at(0).mean_alpha;
  const double secs = SecondsSince(start);
  const bool pass =
      std::abs(mean - 5027.0) <= 347.9 && mean >= 3867.4 && secs < 30.0;
  return {pass, Fmt("mean alpha %.1f (table 5027.0 +- 347.9, bound 3867.4), %.1f s",
                    mean, secs)};
}

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  Rng rng(20260301);
  std::size_t mismatches = 0, truncated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 2 + uniform_below(rng, 3);
    const std::size_t n = 2 + uniform_below(rng, 4);
    const Instance inst = testing::RandomInstance(m, n, rng);
    const OracleResult memo = optimal_alpha(inst);
    const std::size_t plain = optimal_alpha_reference(inst);
    std::size_t best = 0;
    const EnumerationStats stats = enumerate_maximal_schedules(
        inst, static_cast<std::size_t>(-1) - 1,
        [&](const Schedule&, const SystemState& s) {
          best = std::max(best, aggregate_cardinality(s));
        });
    truncated += stats.truncated;
    mismatches += !memo.exact || memo.alpha != plain || plain != best;
  }
  const double secs = SecondsSince(start);
  return {mismatches == 0 && truncated == 0 && secs < 60.0,
          Fmt("200 instances, %zu mismatches, %zu truncated enumerations, %.1f s",
              mismatches, truncated, secs)};
}

Outcome LemmaSuite() {
  Rng rng(20260302);
  std::size_t instances = 0, checked = 0, violations = 0, skipped = 0;
  while (instances < 500) {
    const std::size_t m = 2 + uniform_below(rng, 4);
    const std::size_t n = 2 + uniform_below(rng, 5);
    const Instance inst = testing::RandomInstance(m, n, rng);
    // Hypothesis of the lemma: no node starts out holding the union.
    if (!no_initial_universe_holder(inst)) {
      ++skipped;
      continue;
    }
    ++instances;
    auto check = [&](const SystemState& final_state) {
      ++checked;
      violations += !testing::CheckTerminal(inst, final_state).ok();
    };
    for (AlgorithmId id : kAllAlgorithms) {
      check(run_algorithm(id, inst, instances, TieRule::lowest_pair()).final_state);
    }
    enumerate_maximal_schedules(
        inst, 50, [&](const Schedule&, const SystemState& s) { check(s); });
  }
  return {violations == 0,
          Fmt("%zu instances, %zu terminal states, %zu violations "
              "(%zu draws with an initial union holder skipped)",
              instances, checked, violations, skipped)};
}

// Best alpha over every tie resolution consistent with the Greedy-Links
// score. Diagnostic only.
std::size_t BestGreedyLinksResolution(const SystemState& s) {
  const std::vector<Link> available = links(s);
  if (available.empty()) return aggregate_cardinality(s);
  std::size_t top = 0;
  for (Link l : available) {
    top = std::max(top, links_after_activation(s, l, available.size()));
  }
  std::size_t best = 0;
  for (Link l : available) {
    if (links_after_activation(s, l, available.size()) == top) {
      best = std::max(best, BestGreedyLinksResolution(activate(s, l)));
    }
  }
  return best;
}

Outcome GreedyLinksUniformK() {
  Rng rng(20260303);
  std::size_t agree = 0, reachable = 0;
  const std::size_t total = 300;
  for (std::size_t t = 0; t < total; ++t) {
    const std::size_t k = 1 + uniform_below(rng, 3);
    const std::size_t n = 4 + uniform_below(rng, 3);
    const Instance inst = gen_instance(4, n, k, rng());
    const OracleResult best = optimal_alpha(inst);
    agree += best.exact && run_greedy_links(inst).alpha == best.alpha;
    reachable +=
        BestGreedyLinksResolution(SystemState::initial(inst)) == best.alpha;
  }
  return {agree == total,
          Fmt("%zu/%zu instances at the oracle optimum with lowest-pair ties "
              "(%zu/%zu reachable under some tie resolution)",
              agree, total, reachable, total)};
}

Outcome GreedyLinksFullUniverse() {
  Rng rng(20260304);
  std::size_t eligible = 0, attained = 0, drawn = 0;
  while (eligible < 300) {
    ++drawn;
    const Instance inst = testing::RandomInstance(4, 3 + uniform_below(rng, 5), rng);
    const std::size_t target = 4 * inst.realized_universe_size();
    const OracleResult best = optimal_alpha(inst);
    if (!best.exact || best.alpha != target) continue;
    ++eligible;
    attained += run_greedy_links(inst).alpha == target;
  }
  return {attained == eligible,
          Fmt("%zu/%zu instances with optimum 4u attained (%zu drawn)", attained,
              eligible, drawn)};
}

Outcome PolygonUniqueOwners() {
  Rng rng(20260305);
  std::size_t ok = 0, total = 0, not_admitted = 0;
  for (std::size_t m = 3; m <= 8; ++m) {
    for (int t = 0; t < 100; ++t) {
      const Instance inst = testing::UniqueOwnerInstance(m, uniform_below(rng, 8), rng);
      ++total;
      if (find_unique_set(SystemState::initial(inst)).size() != m) {
        ++not_admitted;
        continue;
      }
      const std::size_t u = inst.realized_universe_size();
      const std::size_t want = m % 2 == 0 ? m * u : m * u - 1;
      ok += run_polygon(inst).alpha == want;
    }
  }
  return {ok == total && not_admitted == 0,
          Fmt("%zu/%zu instances (m = 3..8) at m*u / m*u-1, %zu not fully admitted",
              ok, total, not_admitted)};
}

// Probability by iterating every tuple of k-subsets.
ExactProbability CoverageByTuples(std::size_t m, std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
      subsets.push_back(mask);
    }
  }
  std::uint64_t covering = 0, total = 0;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::uint32_t u = 0;
    for (std::size_t i : idx) u |= subsets[i];
    covering += u == (1u << n) - 1;
    ++total;
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == subsets.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  return ExactProbability::reduced(covering, total);
}

Outcome CoverageProbability() {
  const auto start = Clock::now();
  std::size_t mismatches = 0, cases = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        ++cases;
        mismatches += !(pmnk_exact(m, n, k) == CoverageByTuples(m, n, k));
      }
    }
  }
  const bool half = pmnk_exact(2, 2, 1) == ExactProbability::reduced(1, 2);
  struct Triple {
    std::size_t m, n, k;
  };
  const Triple sampled[] = {{2, 2, 1},  {3, 4, 2},  {4, 5, 2},  {5, 10, 3},
                            {6, 12, 4}, {10, 20, 3}, {8, 10, 5}, {15, 20, 5},
                            {3, 9, 3},  {20, 40, 4}};
  std::size_t mc_outside = 0;
  double worst_z = 0.0;
  for (std::size_t i = 0; i < std::size(sampled); ++i) {
    const Triple& t = sampled[i];
    const double exact = pmnk_exact(t.m, t.n, t.k).value();
    const MonteCarloEstimate mc = pmnk_montecarlo(t.m, t.n, t.k, 100000, 900 + i);
    const double diff = std::abs(mc.estimate - exact);
    if (mc.stderr_ == 0.0) {
      mc_outside += diff != 0.0;
    } else {
      worst_z = std::max(worst_z, diff / mc.stderr_);
      mc_outside += diff > 4 * mc.stderr_;
    }
  }
  const double secs = SecondsSince(start);
  return {mismatches == 0 && half && mc_outside == 0 && secs < 60.0,
          Fmt("%zu/%zu exact matches, p(2,2,1) %s 1/2, Monte Carlo worst |z| %.2f "
              "(%zu outside 4 sigma), %.1f s",
              cases - mismatches, cases, half ? "=" : "!=", worst_z, mc_outside,
              secs)};
}

Outcome QualitativeOrdering() {
  const auto start = Clock::now();
  BatchConfig config;
  config.m = 15;
  config.n = 20;
  config.k = 5;
  config.runs = 100;
  config.seed = 1;
  config.algorithms = {AlgorithmId::kGreedyLinks, AlgorithmId::kRarestFirst,
                       AlgorithmId::kRandomized};
  const BatchReport report = run_batch(config);
  const AlgorithmSummary& gl = report.summaries.at(0);
  const AlgorithmSummary& rf = report.summaries.at(1);
  const AlgorithmSummary& rand = report.summaries.at(2);
  const double gap = 1.0 - gl.mean_alpha / report.mean_upper_bound;
  const double secs = SecondsSince(start);
  const bool pass = gl.mean_alpha >= rf.mean_alpha &&
                    rf.mean_alpha >= rand.mean_alpha - rand.ci_half_width &&
                    gap <= 0.01 && secs < 120.0;
  return {pass, Fmt("glink %.2f >= rare %.2f >= rand %.2f - %.2f; glink %.3f%% "
                    "below bound %.2f; %.1f s",
                    gl.mean_alpha, rf.mean_alpha, rand.mean_alpha,
                    rand.ci_half_width, 100 * gap, report.mean_upper_bound, secs)};
}

Outcome Determinism() {
  BatchConfig config;
  config.m = 8;
  config.n = 10;
  config.k = 3;
  config.runs = 30;
  config.seed = 77;
  config.oracle = OracleMode::kExact;
  config.tie = TieRule::seeded_random(5);
  std::ostringstream a, b;
  write_csv(a, run_batch(config).records);
  write_csv(b, run_batch(config).records);
  return {a.str() == b.str(),
          Fmt("two %zu-byte CSVs %s", a.str().size(),
              a.str() == b.str() ? "identical" : "differ")};
}

Outcome Asymptotics() {
  for (std::size_t m = 2; m <= (1u << 14); m *= 2) {
    const double ratio = randomized_lower_bound(m, 100, 5).bound / (100.0 * m);
    if (ratio >= 0.99) {
      return {true, Fmt("bound/(n m) = %.5f at m = %zu", ratio, m)};
    }
  }
  return {false, "ratio stays below 0.99 for m <= 16384"};
}

}  // namespace
}  // namespace gt

int main() {
  struct Criterion {
    const char* name;
    std::function<gt::Outcome()> run;
  };
  const Criterion criteria[] = {
      {"bound table regression", gt::TableBounds},
      {"randomized simulation vs table", gt::RandomizedVsTable},
      {"oracle equivalence", gt::OracleEquivalence},
      {"terminal-state lemma", gt::LemmaSuite},
      {"greedy-links optimal, m=4 uniform k", gt::GreedyLinksUniformK},
      {"greedy-links reaches 4u when optimal does", gt::GreedyLinksFullUniverse},
      {"polygon with unique owners", gt::PolygonUniqueOwners},
      {"coverage probability exactness", gt::CoverageProbability},
      {"qualitative ordering at (15,20,5)", gt::QualitativeOrdering},
      {"batch determinism", gt::Determinism},
      {"lower bound asymptotics", gt::Asymptotics},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const gt::Outcome out = c.run();
    failures += !out.pass;
    std::printf("[%s] %2d %s: %s\n", out.pass ? "PASS" : "FAIL", index, c.name,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
