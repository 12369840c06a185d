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

#ifndef GT_ANALYSIS_HPP_
#define GT_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gt {

using BigInt = boost::multiprecision::cpp_int;

// A probability as a reduced fraction.
struct ExactProbability {
  BigInt numerator;
  BigInt denominator;

  double value() const;
  std::string to_string() const;  // "num/den"
  bool operator==(const ExactProbability&) const = default;

  static ExactProbability reduced(BigInt numerator, BigInt denominator);
};

// Probability that m independent uniform k-subsets of an n-segment universe
// jointly cover it. Zero when m*k < n.
//
// Sums, over the overlap sizes k_1..k_{m-1} (k_j = how many of node j+1's
// segments were already held by nodes 1..j), the number of ways to pick the
// sets with those overlaps. Compositions sharing a prefix share the running
// union size, so the sum is accumulated per union size instead of per
// composition; the result is the same integer.
//
// Throws std::invalid_argument unless m >= 1 and 1 <= k <= n.
ExactProbability pmnk_exact(std::size_t m, std::size_t n, std::size_t k);

// The same quantity by explicit enumeration of every composition of m*k-n
// into m-1 parts bounded by k. Returns nullopt when more than
// `max_compositions` compositions would be visited.
std::optional<ExactProbability> pmnk_by_compositions(
    std::size_t m, std::size_t n, std::size_t k,
    std::uint64_t max_compositions = 50'000'000);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

MonteCarloEstimate pmnk_montecarlo(std::size_t m, std::size_t n, std::size_t k,
                                   std::uint64_t trials, std::uint64_t seed);

// Expected per-node cardinality at the start of each phase of the
// randomized algorithm, under the lower-bound recursion.
struct BoundTrace {
  std::vector<double> expected_sizes;  // s_1 = k, s_2, ..., s_P
  std::vector<double> phase_factors;   // factor applied going from s_p to s_{p+1}
  double bound = 0.0;                  // m * s_P
};

// s_{p+1} = s_p + s_p (1 - s_p/n) max(m - 2^{p-1}, 0)/(m - 1), starting at
// s_1 = k and stopping at the first phase whose factor is zero.
BoundTrace randomized_lower_bound(std::size_t m, std::size_t n, std::size_t k);

// min(n / log2 m, n / 4) <= k <= n - 1
bool approx_condition_holds(std::size_t m, std::size_t n, std::size_t k);

}  // namespace gt

#endif  // GT_ANALYSIS_HPP_
