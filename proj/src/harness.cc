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

#include "gt/harness.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gt {
namespace {

constexpr double kZ95 = 1.96;

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(std::string("csv: bad ") + what + " '" + text +
                                "'");
  }
  return v;
}

constexpr const char* kCsvHeader =
    "run,seed,algorithm,alpha,optimal,exact_flag,steps,post_sweep_steps";

}  // namespace

Instance gen_instance(std::size_t m, std::size_t n, std::size_t k,
                      std::uint64_t seed, Validation validation) {
  if (k > n) {
    throw std::invalid_argument("gen_instance: k=" + std::to_string(k) +
                                " exceeds n=" + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<SegmentSet> sets;
  sets.reserve(m);
  for (std::size_t i = 0; i < m; ++i) sets.push_back(sample_subset(n, k, rng));
  return Instance(n, std::move(sets), validation);
}

void BatchConfig::validate() const {
  if (m < 2) throw std::invalid_argument("batch: m must be >= 2");
  if (n < 1 || n > SegmentSet::kMaxUniverse) {
    throw std::invalid_argument("batch: n out of range");
  }
  if (k < 1 || k > n) throw std::invalid_argument("batch: need 1 <= k <= n");
  if (validation == Validation::kStrict && k == n) {
    throw std::invalid_argument(
        "batch: k == n gives every node the universe (use relaxed validation)");
  }
  if (runs < 1) throw std::invalid_argument("batch: runs must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("batch: no algorithms");
  if (oracle == OracleMode::kExact &&
      (limits.max_states == 0 || !(limits.max_seconds > 0))) {
    throw std::invalid_argument("batch: exact oracle needs positive limits");
  }
}

BatchReport run_batch(const BatchConfig& config) {
  config.validate();
  BatchReport report;
  report.config = config;
  report.coverage = pmnk_exact(config.m, config.n, config.k);

  double bound_sum = 0.0;
  double optimal_sum = 0.0;
  for (std::size_t run = 0; run < config.runs; ++run) {
    const std::uint64_t seed = derive_seed(config.seed, run);
    const Instance instance =
        gen_instance(config.m, config.n, config.k, seed, config.validation);
    const std::size_t bound = upper_bound(instance);
    bound_sum += static_cast<double>(bound);

    std::optional<OracleResult> oracle;
    if (config.oracle == OracleMode::kExact) {
      oracle = optimal_alpha(instance, config.limits);
      if (oracle->exact) {
        ++report.exact_oracle_runs;
        optimal_sum += static_cast<double>(oracle->alpha);
      } else {
        ++report.inexact_oracle_runs;
      }
    }

    TieRule tie = config.tie;
    if (tie.mode == TieRule::Mode::kSeededRandom) {
      tie.seed = derive_seed(config.tie.seed, run);
    }
    for (AlgorithmId id : config.algorithms) {
      const AlgorithmRun result = run_algorithm(id, instance, mix64(seed), tie);
      RunRecord rec;
      rec.run = run;
      rec.seed = seed;
      rec.algorithm = id;
      rec.alpha = result.alpha;
      rec.steps = result.schedule.size();
      rec.post_sweep_steps = result.post_sweep_steps;
      if (oracle) {
        rec.optimal = oracle->alpha;
        rec.exact = oracle->exact;
        if (rec.exact && rec.alpha > oracle->alpha) {
          throw std::logic_error("run " + std::to_string(run + 1) + ": " +
                                 std::string(algorithm_name(id)) +
                                 " exceeds the certified optimum");
        }
      }
      report.records.push_back(rec);
    }
  }
  report.mean_upper_bound = bound_sum / static_cast<double>(config.runs);
  if (report.exact_oracle_runs > 0) {
    report.mean_optimal =
        optimal_sum / static_cast<double>(report.exact_oracle_runs);
  }
  report.summaries = summarize(report.records);
  return report;
}

std::vector<AlgorithmSummary> summarize(const std::vector<RunRecord>& records) {
  std::vector<AlgorithmSummary> out;
  for (const RunRecord& first : records) {
    bool seen = false;
    for (const AlgorithmSummary& s : out) seen |= s.algorithm == first.algorithm;
    if (seen) continue;

    AlgorithmSummary s;
    s.algorithm = first.algorithm;
    double sum = 0.0;
    std::size_t successes = 0;
    double shortfall_sum = 0.0;
    for (const RunRecord& r : records) {
      if (r.algorithm != s.algorithm) continue;
      ++s.runs;
      sum += static_cast<double>(r.alpha);
      if (r.optimal && r.exact) {
        ++s.exact_runs;
        successes += r.alpha == *r.optimal;
        shortfall_sum += 100.0 *
                         static_cast<double>(*r.optimal - r.alpha) /
                         static_cast<double>(*r.optimal);
      }
    }
    s.mean_alpha = sum / static_cast<double>(s.runs);
    if (s.runs > 1) {
      double sq = 0.0;
      for (const RunRecord& r : records) {
        if (r.algorithm != s.algorithm) continue;
        const double d = static_cast<double>(r.alpha) - s.mean_alpha;
        sq += d * d;
      }
      const double sd = std::sqrt(sq / static_cast<double>(s.runs - 1));
      s.ci_half_width = kZ95 * sd / std::sqrt(static_cast<double>(s.runs));
    }
    if (s.exact_runs > 0) {
      const double exact = static_cast<double>(s.exact_runs);
      s.success_rate = static_cast<double>(successes) / exact;
      s.mean_shortfall_pct = shortfall_sum / exact;
    }
    out.push_back(s);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.run + 1 << ',' << r.seed << ',' << algorithm_name(r.algorithm)
        << ',' << r.alpha << ',';
    if (r.optimal) out << *r.optimal;
    out << ',' << (r.exact ? 1 : 0) << ',' << r.steps << ','
        << r.post_sweep_steps << '\n';
  }
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("csv: missing or unexpected header");
  }
  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 8) {
      throw std::invalid_argument("csv: expected 8 fields in '" + line + "'");
    }
    RunRecord r;
    const std::uint64_t run = parse_u64(f[0], "run");
    if (run < 1) throw std::invalid_argument("csv: runs are 1-based");
    r.run = run - 1;
    r.seed = parse_u64(f[1], "seed");
    const auto id = parse_algorithm(f[2]);
    if (!id) throw std::invalid_argument("csv: unknown algorithm '" + f[2] + "'");
    r.algorithm = *id;
    r.alpha = parse_u64(f[3], "alpha");
    if (!f[4].empty()) r.optimal = parse_u64(f[4], "optimal");
    r.exact = parse_u64(f[5], "exact_flag") != 0;
    r.steps = parse_u64(f[6], "steps");
    r.post_sweep_steps = parse_u64(f[7], "post_sweep_steps");
    out.push_back(r);
  }
  return out;
}

std::string format_report(const BatchReport& report) {
  const BatchConfig& c = report.config;
  std::ostringstream out;
  out << "(m,n,k) = (" << c.m << "," << c.n << "," << c.k << ")  runs = "
      << c.runs << "  seed = " << c.seed << '\n';
  out << "p^{m,n,k} = " << format("%.6g", report.coverage.value())
      << "  (exact)\n";
  out << "mean parity upper bound = " << format("%.2f", report.mean_upper_bound)
      << '\n';
  if (c.oracle == OracleMode::kExact) {
    out << "oracle: " << report.exact_oracle_runs << " exact, "
        << report.inexact_oracle_runs << " over budget";
    if (report.mean_optimal) {
      out << ", mean optimum = " << format("%.2f", *report.mean_optimal);
    }
    out << '\n';
  }
  out << "algorithm  mean_alpha  ci95      success  shortfall%\n";
  for (const AlgorithmSummary& s : report.summaries) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-9s  %10.2f  %8.2f  %7s  %10s\n",
                  std::string(algorithm_name(s.algorithm)).c_str(),
                  s.mean_alpha, s.ci_half_width,
                  s.success_rate ? format("%.3f", *s.success_rate).c_str() : "-",
                  s.mean_shortfall_pct
                      ? format("%.3f", *s.mean_shortfall_pct).c_str()
                      : "-");
    out << line;
  }
  return out.str();
}

std::string report_to_json(const BatchReport& report) {
  using nlohmann::json;
  const BatchConfig& c = report.config;
  json doc;
  doc["m"] = c.m;
  doc["n"] = c.n;
  doc["k"] = c.k;
  doc["runs"] = c.runs;
  doc["seed"] = c.seed;
  doc["oracle"] = c.oracle == OracleMode::kExact ? "exact" : "skip";
  doc["coverage_probability"] = {
      {"method", "exact"},
      {"fraction", report.coverage.to_string()},
      {"value", report.coverage.value()}};
  doc["exact_oracle_runs"] = report.exact_oracle_runs;
  doc["inexact_oracle_runs"] = report.inexact_oracle_runs;
  doc["mean_upper_bound"] = report.mean_upper_bound;
  doc["mean_optimal"] =
      report.mean_optimal ? json(*report.mean_optimal) : json(nullptr);
  json algs = json::array();
  for (const AlgorithmSummary& s : report.summaries) {
    algs.push_back({
        {"algorithm", algorithm_name(s.algorithm)},
        {"runs", s.runs},
        {"mean_alpha", s.mean_alpha},
        {"ci95_half_width", s.ci_half_width},
        {"exact_runs", s.exact_runs},
        {"success_rate", s.success_rate ? json(*s.success_rate) : json(nullptr)},
        {"mean_shortfall_pct",
         s.mean_shortfall_pct ? json(*s.mean_shortfall_pct) : json(nullptr)},
    });
  }
  doc["algorithms"] = std::move(algs);
  return doc.dump(2) + "\n";
}

namespace {

std::uint64_t unsigned_field(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_unsigned()) {
    throw std::invalid_argument(std::string("batch config: ") + key +
                                " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

BatchConfig batch_config_from_json(const std::string& text,
                                   BatchConfig defaults) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("batch config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("batch config: expected a JSON object");
  }
  BatchConfig c = std::move(defaults);
  try {
    if (doc.contains("m")) c.m = unsigned_field(doc, "m");
    if (doc.contains("n")) c.n = unsigned_field(doc, "n");
    if (doc.contains("k")) c.k = unsigned_field(doc, "k");
    if (doc.contains("runs")) c.runs = unsigned_field(doc, "runs");
    if (doc.contains("seed")) c.seed = unsigned_field(doc, "seed");
    if (doc.contains("algorithms")) {
      c.algorithms.clear();
      for (const auto& name : doc.at("algorithms")) {
        const auto id = parse_algorithm(name.get<std::string>());
        if (!id) {
          throw std::invalid_argument("batch config: unknown algorithm " +
                                      name.dump());
        }
        c.algorithms.push_back(*id);
      }
    }
    if (doc.contains("oracle")) {
      const auto mode = doc.at("oracle").get<std::string>();
      if (mode == "exact") {
        c.oracle = OracleMode::kExact;
      } else if (mode == "skip") {
        c.oracle = OracleMode::kSkip;
      } else {
        throw std::invalid_argument("batch config: oracle must be exact|skip");
      }
    }
    if (doc.contains("max_states")) {
      c.limits.max_states = unsigned_field(doc, "max_states");
    }
    if (doc.contains("max_seconds")) {
      c.limits.max_seconds = doc.at("max_seconds").get<double>();
    }
    if (doc.contains("tie")) {
      const auto tie = doc.at("tie").get<std::string>();
      if (tie == "lowest") {
        c.tie.mode = TieRule::Mode::kLowestPair;
      } else if (tie == "random") {
        c.tie.mode = TieRule::Mode::kSeededRandom;
      } else {
        throw std::invalid_argument("batch config: tie must be lowest|random");
      }
    }
    if (doc.contains("tie_seed")) {
      c.tie.seed = unsigned_field(doc, "tie_seed");
    }
    if (doc.contains("strict")) {
      c.validation = doc.at("strict").get<bool>() ? Validation::kStrict
                                                  : Validation::kRelaxed;
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("batch config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string compare_table(const std::vector<BatchConfig>& configs) {
  std::ostringstream out;
  for (const BatchConfig& config : configs) {
    const BatchReport report = run_batch(config);
    out << format_report(report);
    for (const AlgorithmSummary& s : report.summaries) {
      if (s.algorithm != AlgorithmId::kRandomized) continue;
      const double bound =
          randomized_lower_bound(config.m, config.n, config.k).bound;
      out << "rand: simulated " << format("%.1f", s.mean_alpha) << " +- "
          << format("%.1f", s.ci_half_width) << "  lower bound "
          << format("%.1f", bound) << "  "
          << (s.mean_alpha >= bound ? "ok" : "BELOW BOUND") << '\n';
    }
    out << '\n';
  }
  return out.str();
}

std::vector<BatchConfig> bound_table_configs(std::size_t runs,
                                             std::uint64_t seed) {
  const std::size_t rows[][3] = {
      {60, 100, 3}, {60, 100, 5}, {60, 100, 7}, {80, 200, 15}, {100, 300, 15}};
  std::vector<BatchConfig> out;
  for (const auto& row : rows) {
    BatchConfig c;
    c.m = row[0];
    c.n = row[1];
    c.k = row[2];
    c.runs = runs;
    c.seed = seed;
    c.algorithms = {AlgorithmId::kRandomized};
    c.oracle = OracleMode::kSkip;
    out.push_back(c);
  }
  return out;
}

}  // namespace gt
