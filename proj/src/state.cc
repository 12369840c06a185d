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

#include "gt/state.hpp"

#include <algorithm>

namespace gt {
namespace {

void check_node(const SystemState& state, NodeIndex i) {
  if (i >= state.node_count()) {
    throw std::invalid_argument("node index " + std::to_string(i) +
                                " out of range for " +
                                std::to_string(state.node_count()) + " nodes");
  }
}

std::string activation_message(Link link, std::optional<std::size_t> step) {
  std::string msg = "invalid activation of link " + link.to_string();
  if (step) msg += " at step " + std::to_string(*step + 1);
  return msg + ": give-and-take criterion not satisfied";
}

}  // namespace

Link Link::make(NodeIndex a, NodeIndex b) {
  if (a == b) {
    throw std::invalid_argument("a link needs two distinct nodes, got " +
                                std::to_string(a + 1) + " twice");
  }
  return a < b ? Link{a, b} : Link{b, a};
}

std::string Link::to_string() const {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

SystemState SystemState::initial(const Instance& instance) {
  return SystemState(instance.initial_sets(), 0);
}

SystemState::SystemState(std::vector<SegmentSet> sets, std::size_t step)
    : sets_(std::move(sets)), step_(step) {
  if (sets_.empty()) throw std::invalid_argument("state without nodes");
}

std::vector<Link> Schedule::links() const {
  std::vector<Link> out;
  out.reserve(steps_.size());
  for (const ScheduleStep& s : steps_) out.push_back(s.link);
  return out;
}

InvalidActivation::InvalidActivation(Link link, std::optional<std::size_t> step)
    : std::runtime_error(activation_message(link, step)),
      link_(link),
      step_(step) {}

bool gt_satisfied(const SegmentSet& a, const SegmentSet& b) {
  return a.has_member_outside(b) && b.has_member_outside(a);
}

bool gt_satisfied(const SystemState& state, NodeIndex i, NodeIndex j) {
  check_node(state, i);
  check_node(state, j);
  if (i == j) {
    throw std::invalid_argument("criterion queried for node " +
                                std::to_string(i + 1) + " against itself");
  }
  return gt_satisfied(state.set(i), state.set(j));
}

std::vector<Link> links(const SystemState& state) {
  std::vector<Link> out;
  const auto& sets = state.sets();
  for (NodeIndex i = 0; i < sets.size(); ++i) {
    for (NodeIndex j = i + 1; j < sets.size(); ++j) {
      if (gt_satisfied(sets[i], sets[j])) out.push_back(Link{i, j});
    }
  }
  return out;
}

bool has_any_link(const SystemState& state) {
  const auto& sets = state.sets();
  for (NodeIndex i = 0; i < sets.size(); ++i) {
    for (NodeIndex j = i + 1; j < sets.size(); ++j) {
      if (gt_satisfied(sets[i], sets[j])) return true;
    }
  }
  return false;
}

SystemState activate(const SystemState& state, Link link) {
  link = Link::make(link.i, link.j);
  if (!gt_satisfied(state, link.i, link.j)) {
    throw InvalidActivation(link, std::nullopt);
  }
  std::vector<SegmentSet> sets = state.sets();
  SegmentSet merged = sets[link.i] | sets[link.j];
  sets[link.i] = merged;
  sets[link.j] = std::move(merged);
  return SystemState(std::move(sets), state.step() + 1);
}

bool is_maximal(const SystemState& state) { return !has_any_link(state); }

std::size_t aggregate_cardinality(const SystemState& state) {
  std::size_t total = 0;
  for (const SegmentSet& s : state.sets()) total += s.size();
  return total;
}

SegmentSet realized_universe(const SystemState& state) {
  SegmentSet out(state.universe_size());
  for (const SegmentSet& s : state.sets()) out = out | s;
  return out;
}

Replay apply_schedule(const Instance& instance, std::span<const Link> links) {
  Execution exec(instance);
  for (std::size_t r = 0; r < links.size(); ++r) {
    const Link link = links[r];
    if (link.i >= instance.node_count() || link.j >= instance.node_count() ||
        link.i == link.j) {
      throw std::invalid_argument("step " + std::to_string(r + 1) +
                                  ": malformed link " + link.to_string());
    }
    if (!exec.activate_if_linked(link)) {
      throw InvalidActivation(Link::make(link.i, link.j), r);
    }
  }
  return Replay{exec.state(), exec.schedule()};
}

std::size_t upper_bound(const Instance& instance) {
  const std::size_t m = instance.node_count();
  const std::size_t u = instance.realized_universe_size();
  // Nodes reach the realized universe in pairs, so the number of nodes that
  // must acquire it through exchanges can only be covered when even.
  const std::size_t holders = static_cast<std::size_t>(
      std::count(instance.initial_sets().begin(), instance.initial_sets().end(),
                 instance.realized_universe()));
  return (m - holders) % 2 == 0 ? m * u : m * u - 1;
}

bool no_initial_universe_holder(const Instance& instance) {
  return std::none_of(
      instance.initial_sets().begin(), instance.initial_sets().end(),
      [&](const SegmentSet& s) { return s == instance.realized_universe(); });
}

bool is_inclusion_chain(const SystemState& state) {
  std::vector<const SegmentSet*> ordered;
  for (const SegmentSet& s : state.sets()) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const SegmentSet* a, const SegmentSet* b) {
              return a->size() < b->size();
            });
  for (std::size_t r = 1; r < ordered.size(); ++r) {
    if (!ordered[r - 1]->is_subset_of(*ordered[r])) return false;
  }
  return true;
}

std::size_t universe_holder_count(const SystemState& state) {
  const SegmentSet all = realized_universe(state);
  return std::count(state.sets().begin(), state.sets().end(), all);
}

Execution::Execution(const Instance& instance)
    : state_(SystemState::initial(instance)) {}

void Execution::activate(Link link) {
  if (!activate_if_linked(link)) {
    throw InvalidActivation(Link::make(link.i, link.j), state_.step());
  }
}

bool Execution::activate_if_linked(Link link) {
  link = Link::make(link.i, link.j);
  if (!gt_satisfied(state_, link.i, link.j)) return false;
  const SegmentSet& a = state_.set(link.i);
  const SegmentSet& b = state_.set(link.j);
  ScheduleStep step{link, b - a, a - b};
  state_ = gt::activate(state_, link);
  schedule_.push_back(std::move(step));
  return true;
}

}  // namespace gt
