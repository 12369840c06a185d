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

// Helpers shared by the unit and acceptance tests.

#ifndef GT_TESTS_TEST_UTIL_HPP_
#define GT_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gt/instance.hpp"
#include "gt/random.hpp"
#include "gt/state.hpp"

namespace gt::testing {

// Random instance whose sets have independent sizes in [1, n-1].
inline Instance RandomInstance(std::size_t m, std::size_t n, Rng& rng) {
  std::vector<SegmentSet> sets;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = 1 + uniform_below(rng, n - 1);
    sets.push_back(sample_subset(n, k, rng));
  }
  return Instance(n, std::move(sets));
}

// Random instance in which every node owns at least one segment nobody else
// holds; the remaining segments are sprinkled at random.
inline Instance UniqueOwnerInstance(std::size_t m, std::size_t extra,
                                    Rng& rng) {
  // Node i owns segment i privately. Extra segments go to no node or to at
  // least two, so every node has exactly one private segment. No set can be
  // full since node i never holds segment j < m for j != i.
  const std::size_t n = m + extra;
  std::vector<SegmentSet> sets(m, SegmentSet(n));
  for (std::size_t i = 0; i < m; ++i) sets[i].insert(i);
  for (std::size_t e = m; e < n; ++e) {
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < m; ++i) {
      if (uniform_below(rng, 3) == 0) holders.push_back(i);
    }
    if (holders.size() == 1) {
      holders.push_back((holders[0] + 1 + uniform_below(rng, m - 1)) % m);
    }
    for (std::size_t i : holders) sets[i].insert(e);
  }
  return Instance(n, std::move(sets));
}

struct TerminalCheck {
  bool maximal = false;
  bool two_universe_holders = false;
  bool chain = false;
  bool cardinality_floor = false;

  bool ok() const {
    return maximal && two_universe_holders && chain && cardinality_floor;
  }
};

// Properties every maximal schedule's final state must have.
inline TerminalCheck CheckTerminal(const Instance& instance,
                                   const SystemState& final_state) {
  TerminalCheck c;
  c.maximal = is_maximal(final_state);
  c.two_universe_holders = universe_holder_count(final_state) >= 2;
  c.chain = is_inclusion_chain(final_state);
  std::vector<std::size_t> sizes;
  for (const auto& s : instance.initial_sets()) sizes.push_back(s.size());
  std::sort(sizes.rbegin(), sizes.rend());
  const std::size_t floor = 2 * instance.realized_universe_size() +
                            instance.total_initial_cardinality() - sizes[0] -
                            sizes[1];
  c.cardinality_floor = aggregate_cardinality(final_state) >= floor;
  return c;
}

}  // namespace gt::testing

#endif  // GT_TESTS_TEST_UTIL_HPP_
