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

#ifndef GT_STATE_HPP_
#define GT_STATE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gt/instance.hpp"
#include "gt/segment_set.hpp"

namespace gt {

// An unordered node pair, stored with i < j.
struct Link {
  NodeIndex i = 0;
  NodeIndex j = 1;

  // Canonicalizes the order; throws std::invalid_argument when a == b.
  static Link make(NodeIndex a, NodeIndex b);

  std::string to_string() const;  // "(1,3)", 1-based
  friend auto operator<=>(const Link&, const Link&) = default;
};

// The segment sets held by each node after `step` activations.
class SystemState {
 public:
  static SystemState initial(const Instance& instance);
  SystemState(std::vector<SegmentSet> sets, std::size_t step);

  std::size_t node_count() const { return sets_.size(); }
  std::size_t universe_size() const { return sets_.front().universe(); }
  const std::vector<SegmentSet>& sets() const { return sets_; }
  const SegmentSet& set(NodeIndex i) const { return sets_.at(i); }
  std::size_t step() const { return step_; }

  bool operator==(const SystemState&) const = default;

 private:
  std::vector<SegmentSet> sets_;
  std::size_t step_ = 0;
};

struct ScheduleStep {
  Link link;
  SegmentSet gained_i;  // segments node link.i received
  SegmentSet gained_j;  // segments node link.j received

  bool operator==(const ScheduleStep&) const = default;
};

// An executed schedule. Every stored step carries nonempty gains on both
// sides, which is equivalent to the exchange criterion having held.
class Schedule {
 public:
  Schedule() = default;

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  const std::vector<ScheduleStep>& steps() const { return steps_; }
  std::vector<Link> links() const;

  void push_back(ScheduleStep step) { steps_.push_back(std::move(step)); }

  bool operator==(const Schedule&) const = default;

 private:
  std::vector<ScheduleStep> steps_;
};

// Thrown when a link is activated although its endpoints do not satisfy the
// give-and-take criterion.
class InvalidActivation : public std::runtime_error {
 public:
  InvalidActivation(Link link, std::optional<std::size_t> step);

  Link link() const { return link_; }
  std::optional<std::size_t> step() const { return step_; }

 private:
  Link link_;
  std::optional<std::size_t> step_;
};

// Nodes i and j may exchange iff each holds a segment the other lacks.
bool gt_satisfied(const SystemState& state, NodeIndex i, NodeIndex j);
bool gt_satisfied(const SegmentSet& a, const SegmentSet& b);

// All canonical pairs that currently satisfy the criterion, ascending.
std::vector<Link> links(const SystemState& state);
bool has_any_link(const SystemState& state);

// Both endpoints end up with the union of their sets.
SystemState activate(const SystemState& state, Link link);

bool is_maximal(const SystemState& state);
std::size_t aggregate_cardinality(const SystemState& state);
SegmentSet realized_universe(const SystemState& state);

struct Replay {
  SystemState final_state;
  Schedule schedule;
};

// Replays `links` from the initial state, recording per-step gains.
Replay apply_schedule(const Instance& instance, std::span<const Link> links);

// m*u for even m and m*u - 1 for odd m, with u the realized universe size.
// Nodes that already hold the realized universe are taken out of the parity
// count: three identical sets sit at 3u with no links at all.
std::size_t upper_bound(const Instance& instance);

// No initial set already equals the realized universe. Under this condition
// every maximal state has at least two nodes holding the realized universe.
bool no_initial_universe_holder(const Instance& instance);

// True iff the node sets are totally ordered by inclusion.
bool is_inclusion_chain(const SystemState& state);
// Number of nodes holding the whole realized universe.
std::size_t universe_holder_count(const SystemState& state);

// Incrementally executes a schedule, keeping the trace in sync. Used by the
// algorithms, which build their schedules one activation at a time.
class Execution {
 public:
  explicit Execution(const Instance& instance);

  const SystemState& state() const { return state_; }
  const Schedule& schedule() const { return schedule_; }

  // Throws InvalidActivation when the criterion does not hold.
  void activate(Link link);
  // Activates only when the criterion holds; returns whether it did.
  bool activate_if_linked(Link link);

 private:
  SystemState state_;
  Schedule schedule_;
};

}  // namespace gt

#endif  // GT_STATE_HPP_
