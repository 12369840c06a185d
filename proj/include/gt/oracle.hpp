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

#ifndef GT_ORACLE_HPP_
#define GT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gt/instance.hpp"
#include "gt/state.hpp"

namespace gt {

// Budget for the exhaustive search. The search stops at whichever limit is
// hit first and reports its incumbent as inexact.
struct SearchLimits {
  std::uint64_t max_states = 10'000'000;
  double max_seconds = 60.0;
};

struct OracleResult {
  std::size_t alpha = 0;
  // Replays to a maximal state with aggregate cardinality `alpha`.
  Schedule witness;
  // False when a limit was hit; `alpha` is then only a lower bound.
  bool exact = false;
  std::uint64_t states_visited = 0;
};

// Node sets sorted into a canonical order, identities erased. Two states
// with the same key have the same future, since an activation outcome only
// depends on the two sets involved.
std::vector<SegmentSet> canonical_key(const SystemState& state);

// Maximum aggregate cardinality over all maximal schedules. Depth-first
// search over available links with a memo keyed on canonical_key, stopping
// early once the incumbent reaches upper_bound(instance).
OracleResult optimal_alpha(const Instance& instance, SearchLimits limits = {});

// Plain exhaustive DFS without memo or pruning. Reference for small
// instances only.
std::size_t optimal_alpha_reference(const Instance& instance);

struct EnumerationStats {
  std::size_t yielded = 0;
  bool truncated = false;
};

// Calls `visit` for each distinct maximal schedule (as a link sequence) in
// depth-first order, stopping after `cap` schedules.
EnumerationStats enumerate_maximal_schedules(
    const Instance& instance, std::size_t cap,
    const std::function<void(const Schedule&, const SystemState&)>& visit);

}  // namespace gt

#endif  // GT_ORACLE_HPP_
