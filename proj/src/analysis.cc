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

#include "gt/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gt/random.hpp"

namespace gt {
namespace {

void check_pmnk_args(std::size_t m, std::size_t n, std::size_t k) {
  if (m < 1) throw std::invalid_argument("pmnk: need m >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("pmnk: need 1 <= k <= n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
  }
}

// Binomial coefficients C(a, b) for 0 <= a <= n, as exact integers.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t n) : rows_(n + 1) {
    for (std::size_t a = 0; a <= n; ++a) {
      rows_[a].resize(a + 1);
      rows_[a][0] = rows_[a][a] = 1;
      for (std::size_t b = 1; b < a; ++b) {
        rows_[a][b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
      }
    }
  }

  // Zero outside 0 <= b <= a <= n.
  BigInt operator()(long long a, long long b) const {
    if (a < 0 || b < 0 || b > a ||
        static_cast<std::size_t>(a) >= rows_.size()) {
      return 0;
    }
    return rows_[a][b];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt power(const BigInt& base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t e = 0; e < exp; ++e) out *= base;
  return out;
}

}  // namespace

double ExactProbability::value() const {
  using Float = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(Float(numerator) / Float(denominator));
}

std::string ExactProbability::to_string() const {
  return numerator.str() + "/" + denominator.str();
}

ExactProbability ExactProbability::reduced(BigInt numerator,
                                           BigInt denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (numerator == 0) return {0, 1};
  const BigInt g = boost::multiprecision::gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

ExactProbability pmnk_exact(std::size_t m, std::size_t n, std::size_t k) {
  check_pmnk_args(m, n, k);
  if (m * k < n) return {0, 1};
  const BinomialTable binom(n);

  // ways[c]: number of ways to choose the first j sets with union size c.
  std::vector<BigInt> ways(n + 1);
  ways[k] = binom(n, k);
  for (std::size_t j = 2; j <= m; ++j) {
    std::vector<BigInt> next(n + 1);
    for (std::size_t c = k; c <= n; ++c) {
      if (ways[c] == 0) continue;
      // overlap: segments of set j already in the union
      for (std::size_t overlap = 0; overlap <= std::min(c, k); ++overlap) {
        const std::size_t fresh = k - overlap;
        if (fresh > n - c) continue;
        next[c + fresh] += ways[c] * binom(c, overlap) * binom(n - c, fresh);
      }
    }
    ways = std::move(next);
  }
  return ExactProbability::reduced(ways[n], power(binom(n, k), m));
}

std::optional<ExactProbability> pmnk_by_compositions(
    std::size_t m, std::size_t n, std::size_t k,
    std::uint64_t max_compositions) {
  check_pmnk_args(m, n, k);
  if (m * k < n) return ExactProbability{0, 1};
  const BinomialTable binom(n);
  const long long K = static_cast<long long>(k);
  const long long N = static_cast<long long>(n);
  const long long total_overlap = static_cast<long long>(m * k - n);

  BigInt favourable = 0;
  std::uint64_t visited = 0;
  bool exceeded = false;
  // j is the 1-based node being placed; `prefix` = k_1 + ... + k_{j-2}.
  std::function<void(std::size_t, long long, const BigInt&)> place =
      [&](std::size_t j, long long prefix, const BigInt& product) {
        if (exceeded) return;
        if (j > m) {
          if (prefix == total_overlap) {
            favourable += product;
            if (++visited > max_compositions) exceeded = true;
          }
          return;
        }
        const long long held = static_cast<long long>(j - 1) * K - prefix;
        const long long room = total_overlap - prefix;
        for (long long kj = 0; kj <= std::min(K, room); ++kj) {
          const BigInt term = binom(held, kj) * binom(N - held, K - kj);
          if (term == 0) continue;
          place(j + 1, prefix + kj, product * term);
        }
      };
  // Node 1 has no predecessor: its factor is C(0, 0) C(n, k).
  place(2, 0, binom(N, K));
  if (exceeded) return std::nullopt;
  return ExactProbability::reduced(favourable, power(binom(N, K), m));
}

MonteCarloEstimate pmnk_montecarlo(std::size_t m, std::size_t n, std::size_t k,
                                   std::uint64_t trials, std::uint64_t seed) {
  check_pmnk_args(m, n, k);
  if (trials < 1) throw std::invalid_argument("pmnk_montecarlo: trials >= 1");
  Rng rng(seed);
  std::uint64_t covered = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SegmentSet all(n);
    for (std::size_t i = 0; i < m; ++i) all = all | sample_subset(n, k, rng);
    covered += all.size() == n;
  }
  MonteCarloEstimate out;
  out.trials = trials;
  out.seed = seed;
  out.estimate = static_cast<double>(covered) / static_cast<double>(trials);
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) /
                          static_cast<double>(trials));
  return out;
}

BoundTrace randomized_lower_bound(std::size_t m, std::size_t n, std::size_t k) {
  if (m < 2) throw std::invalid_argument("bound: need m >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("bound: need 1 <= k <= n");
  const double nn = static_cast<double>(n);
  const double denom = static_cast<double>(m - 1);

  BoundTrace trace;
  double s = static_cast<double>(k);
  trace.expected_sizes.push_back(s);
  // influence = 2^{p-1}
  for (std::uint64_t influence = 1; influence < m; influence *= 2) {
    const double factor = static_cast<double>(m - influence) / denom;
    s += s * (1.0 - s / nn) * factor;
    trace.phase_factors.push_back(factor);
    trace.expected_sizes.push_back(s);
  }
  trace.bound = static_cast<double>(m) * s;
  return trace;
}

bool approx_condition_holds(std::size_t m, std::size_t n, std::size_t k) {
  if (m < 2) throw std::invalid_argument("approx condition: need m >= 2");
  const double nn = static_cast<double>(n);
  const double lower = std::min(nn / std::log2(static_cast<double>(m)), nn / 4);
  return lower <= static_cast<double>(k) && k + 1 <= n;
}

}  // namespace gt
