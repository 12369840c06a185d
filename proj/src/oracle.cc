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

#include "gt/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace gt {
namespace {

using Clock = std::chrono::steady_clock;

// Flattened words of the sorted node sets.
using MemoKey = std::vector<std::uint64_t>;

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : key) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

MemoKey memo_key(const SystemState& state) {
  MemoKey key;
  for (const SegmentSet& s : canonical_key(state)) {
    key.insert(key.end(), s.words().begin(), s.words().end());
  }
  return key;
}

class MemoSearch {
 public:
  MemoSearch(const Instance& instance, SearchLimits limits)
      : limits_(limits),
        bound_(upper_bound(instance)),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(
                                         limits.max_seconds))) {}

  void run(const SystemState& initial) { best_from(initial); }

  bool limit_hit() const { return limit_hit_; }
  bool has_incumbent() const { return has_incumbent_; }
  std::size_t incumbent() const { return incumbent_; }
  const std::vector<Link>& incumbent_path() const { return incumbent_path_; }
  std::uint64_t visited() const { return visited_; }

 private:
  bool stopped() const { return limit_hit_ || reached_bound_; }

  void charge_visit() {
    ++visited_;
    if (visited_ > limits_.max_states) limit_hit_ = true;
    if ((visited_ & 0xfff) == 0 && Clock::now() > deadline_) limit_hit_ = true;
  }

  // Best final aggregate cardinality reachable from `state`. Values computed
  // after the search stopped are partial and never memoized.
  std::size_t best_from(const SystemState& state) {
    charge_visit();
    if (stopped()) return 0;

    MemoKey key = memo_key(state);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const std::vector<Link> available = links(state);
    if (available.empty()) {
      const std::size_t alpha = aggregate_cardinality(state);
      if (!has_incumbent_ || alpha > incumbent_) {
        has_incumbent_ = true;
        incumbent_ = alpha;
        incumbent_path_ = path_;
        if (alpha >= bound_) reached_bound_ = true;
      }
      memo_.emplace(std::move(key), alpha);
      return alpha;
    }

    std::size_t best = 0;
    for (Link link : available) {
      path_.push_back(link);
      best = std::max(best, best_from(activate(state, link)));
      path_.pop_back();
      if (stopped()) return best;
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

  SearchLimits limits_;
  std::size_t bound_;
  Clock::time_point deadline_;
  std::unordered_map<MemoKey, std::size_t, MemoKeyHash> memo_;
  std::vector<Link> path_;
  bool has_incumbent_ = false;
  std::size_t incumbent_ = 0;
  std::vector<Link> incumbent_path_;
  std::uint64_t visited_ = 0;
  bool limit_hit_ = false;
  bool reached_bound_ = false;
};

std::size_t reference_best(const SystemState& state) {
  const std::vector<Link> available = links(state);
  if (available.empty()) return aggregate_cardinality(state);
  std::size_t best = 0;
  for (Link link : available) {
    best = std::max(best, reference_best(activate(state, link)));
  }
  return best;
}

}  // namespace

std::vector<SegmentSet> canonical_key(const SystemState& state) {
  std::vector<SegmentSet> sorted = state.sets();
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

OracleResult optimal_alpha(const Instance& instance, SearchLimits limits) {
  const SystemState initial = SystemState::initial(instance);
  MemoSearch search(instance, limits);
  search.run(initial);

  OracleResult result;
  result.exact = !search.limit_hit();
  result.states_visited = search.visited();
  if (!search.has_incumbent()) {
    // Budget exhausted before any maximal state was reached. Fall back to a
    // canonical-order schedule so the witness is still maximal.
    Execution exec(instance);
    for (;;) {
      const std::vector<Link> remaining = links(exec.state());
      if (remaining.empty()) break;
      exec.activate(remaining.front());
    }
    result.alpha = aggregate_cardinality(exec.state());
    result.witness = exec.schedule();
    return result;
  }
  const Replay replay = apply_schedule(instance, search.incumbent_path());
  result.alpha = aggregate_cardinality(replay.final_state);
  result.witness = replay.schedule;
  return result;
}

std::size_t optimal_alpha_reference(const Instance& instance) {
  return reference_best(SystemState::initial(instance));
}

EnumerationStats enumerate_maximal_schedules(
    const Instance& instance, std::size_t cap,
    const std::function<void(const Schedule&, const SystemState&)>& visit) {
  EnumerationStats stats;
  std::vector<Link> path;
  // Returns false once enumeration must stop.
  std::function<bool(const SystemState&)> descend =
      [&](const SystemState& state) -> bool {
    const std::vector<Link> available = links(state);
    if (available.empty()) {
      if (stats.yielded == cap) {
        stats.truncated = true;
        return false;
      }
      const Replay replay = apply_schedule(instance, path);
      visit(replay.schedule, replay.final_state);
      ++stats.yielded;
      return true;
    }
    for (Link link : available) {
      path.push_back(link);
      const bool more = descend(activate(state, link));
      path.pop_back();
      if (!more) return false;
    }
    return true;
  };
  descend(SystemState::initial(instance));
  return stats;
}

}  // namespace gt
