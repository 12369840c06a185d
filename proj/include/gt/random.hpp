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

#ifndef GT_RANDOM_HPP_
#define GT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <span>

#include "gt/segment_set.hpp"

namespace gt {

// All randomness in the library flows through this engine, seeded
// explicitly. Sampling below avoids the standard distributions so that a
// seed produces the same draws on every standard library.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. A bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

// Seed for the index-th child stream of `master`. Distinct indices give
// distinct seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t r = items.size(); r > 1; --r) {
    std::swap(items[r - 1], items[uniform_below(rng, r)]);
  }
}

// A uniformly random k-subset of {0, ..., universe-1} (Floyd's algorithm).
SegmentSet sample_subset(std::size_t universe, std::size_t k, Rng& rng);

}  // namespace gt

#endif  // GT_RANDOM_HPP_
