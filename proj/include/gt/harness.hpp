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

#ifndef GT_HARNESS_HPP_
#define GT_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gt/algorithms.hpp"
#include "gt/analysis.hpp"
#include "gt/instance.hpp"
#include "gt/oracle.hpp"

namespace gt {

// An instance where every node holds an independent uniform k-subset.
// Throws std::invalid_argument when k > n, or when k == n under strict
// validation.
Instance gen_instance(std::size_t m, std::size_t n, std::size_t k,
                      std::uint64_t seed,
                      Validation validation = Validation::kStrict);

enum class OracleMode { kExact, kSkip };

struct BatchConfig {
  std::size_t m = 15;
  std::size_t n = 20;
  std::size_t k = 5;
  std::size_t runs = 100;
  std::uint64_t seed = 1;
  std::vector<AlgorithmId> algorithms{kAllAlgorithms.begin(),
                                      kAllAlgorithms.end()};
  OracleMode oracle = OracleMode::kSkip;
  SearchLimits limits;
  TieRule tie;
  Validation validation = Validation::kStrict;

  // Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

// One CSV row: the outcome of one algorithm on one run.
struct RunRecord {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  AlgorithmId algorithm = AlgorithmId::kRandomized;
  std::size_t alpha = 0;
  std::optional<std::size_t> optimal;  // oracle value, when computed
  bool exact = false;                  // oracle value certified optimal
  std::size_t steps = 0;
  std::size_t post_sweep_steps = 0;

  bool operator==(const RunRecord&) const = default;
};

struct AlgorithmSummary {
  AlgorithmId algorithm = AlgorithmId::kRandomized;
  std::size_t runs = 0;
  double mean_alpha = 0.0;
  double ci_half_width = 0.0;  // 1.96 s / sqrt(runs)
  // Only over runs with a certified-exact optimum; absent when there are none.
  std::size_t exact_runs = 0;
  std::optional<double> success_rate;
  std::optional<double> mean_shortfall_pct;

  bool operator==(const AlgorithmSummary&) const = default;
};

struct BatchReport {
  BatchConfig config;
  std::vector<RunRecord> records;
  std::vector<AlgorithmSummary> summaries;
  ExactProbability coverage;        // p^{m,n,k}
  std::size_t exact_oracle_runs = 0;
  std::size_t inexact_oracle_runs = 0;
  double mean_upper_bound = 0.0;    // parity bound averaged over runs
  std::optional<double> mean_optimal;  // over exact runs
};

// Per-run seeds: derive_seed(config.seed, run).
BatchReport run_batch(const BatchConfig& config);

// Aggregates records per algorithm, in order of first appearance.
std::vector<AlgorithmSummary> summarize(const std::vector<RunRecord>& records);

// Fixed columns: run,seed,algorithm,alpha,optimal,exact_flag,steps,
// post_sweep_steps. Runs are 1-based; `optimal` is empty when skipped.
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& in);

// Human-readable summary of one batch.
std::string format_report(const BatchReport& report);
std::string report_to_json(const BatchReport& report);

// Parses a batch configuration document; fields absent from the document
// keep the values in `defaults`.
BatchConfig batch_config_from_json(const std::string& text,
                                   BatchConfig defaults = {});

// One block per configuration: coverage probability, per-algorithm means
// and, for the randomized algorithm, the lower-bound column next to the
// simulated mean.
std::string compare_table(const std::vector<BatchConfig>& configs);

// The five (m, n, k) rows of the randomized-algorithm bound table.
std::vector<BatchConfig> bound_table_configs(std::size_t runs,
                                             std::uint64_t seed);

}  // namespace gt

#endif  // GT_HARNESS_HPP_
