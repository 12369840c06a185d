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

#ifndef GT_ALGORITHMS_HPP_
#define GT_ALGORITHMS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gt/instance.hpp"
#include "gt/random.hpp"
#include "gt/state.hpp"

namespace gt {

enum class AlgorithmId {
  kRandomized,
  kGreedyLinks,
  kPolygon,
  kGreedyIncremental,
  kRarestFirst,
};

inline constexpr std::array<AlgorithmId, 5> kAllAlgorithms = {
    AlgorithmId::kRandomized, AlgorithmId::kGreedyLinks, AlgorithmId::kPolygon,
    AlgorithmId::kGreedyIncremental, AlgorithmId::kRarestFirst};

// Short ids used on the command line and in CSV output: rand, glink, poly,
// ginc, rare.
std::string_view algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

// How a greedy rule picks among equally scored links.
struct TieRule {
  enum class Mode { kLowestPair, kSeededRandom };

  Mode mode = Mode::kLowestPair;
  std::uint64_t seed = 0;

  static TieRule lowest_pair() { return {}; }
  static TieRule seeded_random(std::uint64_t seed) {
    return {Mode::kSeededRandom, seed};
  }
};

struct AlgorithmRun {
  AlgorithmId algorithm;
  Schedule schedule;
  SystemState final_state;
  std::size_t alpha = 0;
  // Randomized: phases executed. Polygon: outer iterations over the
  // unique-segment set. Zero for the greedy rules.
  std::size_t rounds = 0;
  // Polygon only: activations made by the final maximality sweep.
  std::size_t post_sweep_steps = 0;
};

// Phase-based random pairing. Each phase shuffles all nodes and walks the
// permutation two at a time; linked pairs exchange, the rest are set aside.
// Phases repeat while any link remains.
AlgorithmRun run_randomized(const Instance& instance, std::uint64_t seed);

// Activates the link that leaves the most links available afterwards.
AlgorithmRun run_greedy_links(const Instance& instance,
                              TieRule tie = TieRule::lowest_pair());

// Number of links available after activating `link` in `state`, computed
// from the endpoint degrees alone.
std::size_t links_after_activation(const SystemState& state, Link link,
                                   std::size_t current_link_count);

// Greedy admission scan in ascending node order: a node joins when it adds
// a segment outside the members' union and no member is covered by it.
std::vector<NodeIndex> find_unique_set(const SystemState& state);

// Round-robin pairing over the unique-segment set, followed by a sweep
// that activates any remaining links in canonical order.
AlgorithmRun run_polygon(const Instance& instance);

// Activates the link that adds the most segments in total.
AlgorithmRun run_greedy_incremental(const Instance& instance,
                                    TieRule tie = TieRule::lowest_pair());

// 2|A u B| - |A| - |B|
std::size_t incremental_weight(const SegmentSet& a, const SegmentSet& b);

// Preference row for `link`: first entry is 1 when the merged set is not the
// whole universe, then for p = 1..m the number of segments held by exactly p
// nodes that exactly one endpoint holds. Rows compare lexicographically.
std::vector<std::size_t> rarest_first_row(const SystemState& state, Link link);

// Activates the link with the lexicographically largest preference row.
AlgorithmRun run_rarest_first(const Instance& instance,
                              TieRule tie = TieRule::lowest_pair());

// Dispatch by id. `seed` drives the randomized algorithm; the greedy rules
// use `tie`.
AlgorithmRun run_algorithm(AlgorithmId id, const Instance& instance,
                           std::uint64_t seed,
                           TieRule tie = TieRule::lowest_pair());

}  // namespace gt

#endif  // GT_ALGORITHMS_HPP_
