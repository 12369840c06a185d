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

#include "gt/algorithms.hpp"

#include <stdexcept>

namespace gt {
namespace {

// Shared argmax loop of the three greedy rules. `score` maps (state, link,
// available links) to a totally ordered value; the highest wins.
template <typename ScoreFn>
AlgorithmRun run_greedy(AlgorithmId id, const Instance& instance, TieRule tie,
                        ScoreFn score) {
  Execution exec(instance);
  Rng rng(tie.seed);
  for (;;) {
    const std::vector<Link> available = links(exec.state());
    if (available.empty()) break;

    using Score = decltype(score(exec.state(), available.front(), available));
    std::vector<Link> best;
    Score best_score{};
    for (Link link : available) {
      Score s = score(exec.state(), link, available);
      if (best.empty() || best_score < s) {
        best.assign(1, link);
        best_score = std::move(s);
      } else if (s == best_score) {
        best.push_back(link);
      }
    }
    // `available` is ascending, so best.front() is the lowest tied pair.
    const Link chosen = tie.mode == TieRule::Mode::kLowestPair
                            ? best.front()
                            : best[uniform_below(rng, best.size())];
    exec.activate(chosen);
  }
  AlgorithmRun run{id, exec.schedule(), exec.state()};
  run.alpha = aggregate_cardinality(run.final_state);
  return run;
}

std::vector<std::size_t> holder_counts(const SystemState& state) {
  std::vector<std::size_t> counts(state.universe_size(), 0);
  for (const SegmentSet& s : state.sets()) {
    for (SegmentIndex e : s.members()) ++counts[e];
  }
  return counts;
}

std::vector<std::size_t> rarest_first_row(const SystemState& state, Link link,
                                          std::span<const std::size_t> counts) {
  const SegmentSet& a = state.set(link.i);
  const SegmentSet& b = state.set(link.j);
  std::vector<std::size_t> row(state.node_count() + 1, 0);
  row[0] = (a | b).size() != state.universe_size() ? 1 : 0;
  for (SegmentIndex e : (a ^ b).members()) ++row[counts[e]];
  return row;
}

}  // namespace

std::string_view algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kRandomized: return "rand";
    case AlgorithmId::kGreedyLinks: return "glink";
    case AlgorithmId::kPolygon: return "poly";
    case AlgorithmId::kGreedyIncremental: return "ginc";
    case AlgorithmId::kRarestFirst: return "rare";
  }
  return "unknown";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (AlgorithmId id : kAllAlgorithms) {
    if (algorithm_name(id) == name) return id;
  }
  return std::nullopt;
}

AlgorithmRun run_randomized(const Instance& instance, std::uint64_t seed) {
  Execution exec(instance);
  Rng rng(seed);
  std::vector<NodeIndex> order(instance.node_count());
  std::size_t phases = 0;
  while (has_any_link(exec.state())) {
    for (NodeIndex v = 0; v < order.size(); ++v) order[v] = v;
    shuffle(std::span<NodeIndex>(order), rng);
    // With an odd count the last node in the permutation sits this phase out.
    for (std::size_t p = 0; p + 1 < order.size(); p += 2) {
      exec.activate_if_linked(Link::make(order[p], order[p + 1]));
    }
    ++phases;
  }
  AlgorithmRun run{AlgorithmId::kRandomized, exec.schedule(), exec.state()};
  run.alpha = aggregate_cardinality(run.final_state);
  run.rounds = phases;
  return run;
}

std::size_t links_after_activation(const SystemState& state, Link link,
                                   std::size_t current_link_count) {
  const auto& sets = state.sets();
  const SegmentSet merged = sets[link.i] | sets[link.j];
  std::size_t touching = 0;  // current links with an endpoint in {i, j}
  std::size_t created = 0;   // links the merged pair will have, per endpoint
  for (NodeIndex x = 0; x < sets.size(); ++x) {
    if (x == link.i || x == link.j) continue;
    touching += gt_satisfied(sets[link.i], sets[x]);
    touching += gt_satisfied(sets[link.j], sets[x]);
    created += gt_satisfied(merged, sets[x]);
  }
  // The (i, j) link itself disappears: both endpoints hold the same set.
  return current_link_count - touching - 1 + 2 * created;
}

AlgorithmRun run_greedy_links(const Instance& instance, TieRule tie) {
  return run_greedy(AlgorithmId::kGreedyLinks, instance, tie,
                    [](const SystemState& state, Link link,
                       const std::vector<Link>& available) {
                      return links_after_activation(state, link,
                                                    available.size());
                    });
}

std::size_t incremental_weight(const SegmentSet& a, const SegmentSet& b) {
  return 2 * (a | b).size() - a.size() - b.size();
}

AlgorithmRun run_greedy_incremental(const Instance& instance, TieRule tie) {
  return run_greedy(AlgorithmId::kGreedyIncremental, instance, tie,
                    [](const SystemState& state, Link link,
                       const std::vector<Link>&) {
                      return incremental_weight(state.set(link.i),
                                                state.set(link.j));
                    });
}

std::vector<std::size_t> rarest_first_row(const SystemState& state, Link link) {
  const std::vector<std::size_t> counts = holder_counts(state);
  return rarest_first_row(state, Link::make(link.i, link.j), counts);
}

AlgorithmRun run_rarest_first(const Instance& instance, TieRule tie) {
  // Holder counts are shared by every candidate of a step.
  std::size_t cached_step = static_cast<std::size_t>(-1);
  std::vector<std::size_t> counts;
  return run_greedy(AlgorithmId::kRarestFirst, instance, tie,
                    [&](const SystemState& state, Link link,
                        const std::vector<Link>&) {
                      if (state.step() != cached_step) {
                        counts = holder_counts(state);
                        cached_step = state.step();
                      }
                      return rarest_first_row(state, link, counts);
                    });
}

AlgorithmRun run_algorithm(AlgorithmId id, const Instance& instance,
                           std::uint64_t seed, TieRule tie) {
  switch (id) {
    case AlgorithmId::kRandomized: return run_randomized(instance, seed);
    case AlgorithmId::kGreedyLinks: return run_greedy_links(instance, tie);
    case AlgorithmId::kPolygon: return run_polygon(instance);
    case AlgorithmId::kGreedyIncremental:
      return run_greedy_incremental(instance, tie);
    case AlgorithmId::kRarestFirst: return run_rarest_first(instance, tie);
  }
  throw std::invalid_argument("unknown algorithm id");
}

}  // namespace gt
