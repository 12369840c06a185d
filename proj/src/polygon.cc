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

#include <algorithm>

#include "gt/algorithms.hpp"

namespace gt {
namespace {

// |O_i \ union of the other members| for every member, in member order.
std::vector<std::size_t> unique_counts(const SystemState& state,
                                       const std::vector<NodeIndex>& members) {
  std::vector<std::size_t> counts;
  counts.reserve(members.size());
  for (NodeIndex i : members) {
    SegmentSet others(state.universe_size());
    for (NodeIndex j : members) {
      if (j != i) others = others | state.set(j);
    }
    counts.push_back(state.set(i).count_outside(others));
  }
  return counts;
}

// Starting permutation: descending unique count so the node with the fewest
// unique segments sits rightmost; ties by ascending node index.
std::vector<NodeIndex> starting_permutation(
    const SystemState& state, const std::vector<NodeIndex>& members) {
  const std::vector<std::size_t> counts = unique_counts(state, members);
  std::vector<std::size_t> order(members.size());
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (counts[a] != counts[b]) return counts[a] > counts[b];
                     return members[a] < members[b];
                   });
  std::vector<NodeIndex> perm;
  perm.reserve(order.size());
  for (std::size_t r : order) perm.push_back(members[r]);
  return perm;
}

}  // namespace

std::vector<NodeIndex> find_unique_set(const SystemState& state) {
  std::vector<NodeIndex> members;
  SegmentSet covered(state.universe_size());
  for (NodeIndex i = 0; i < state.node_count(); ++i) {
    const SegmentSet& candidate = state.set(i);
    if (!candidate.has_member_outside(covered)) continue;
    const bool keeps_members_distinct =
        std::all_of(members.begin(), members.end(), [&](NodeIndex j) {
          return state.set(j).has_member_outside(candidate);
        });
    if (!keeps_members_distinct) continue;
    members.push_back(i);
    covered = covered | candidate;
  }
  return members;
}

AlgorithmRun run_polygon(const Instance& instance) {
  Execution exec(instance);
  std::size_t iterations = 0;

  std::vector<NodeIndex> members = find_unique_set(exec.state());
  while (members.size() >= 2) {
    std::vector<NodeIndex> perm = starting_permutation(exec.state(), members);
    const std::size_t rounds = (perm.size() - 1) / 2 + 1;
    for (std::size_t l = 0; l < rounds; ++l) {
      // A pair whose link vanished earlier in the round is skipped.
      for (std::size_t p = 0; p + 1 < perm.size(); p += 2) {
        exec.activate_if_linked(Link::make(perm[p], perm[p + 1]));
      }
      std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    }
    ++iterations;
    // Members pairwise satisfy the criterion, so every iteration activates
    // at least its first pair and the loop terminates.
    members = find_unique_set(exec.state());
  }

  std::size_t sweep = 0;
  for (;;) {
    const std::vector<Link> remaining = links(exec.state());
    if (remaining.empty()) break;
    exec.activate(remaining.front());
    ++sweep;
  }

  AlgorithmRun run{AlgorithmId::kPolygon, exec.schedule(), exec.state()};
  run.alpha = aggregate_cardinality(run.final_state);
  run.rounds = iterations;
  run.post_sweep_steps = sweep;
  return run;
}

}  // namespace gt
