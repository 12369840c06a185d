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

#include "gt/instance.hpp"

#include <stdexcept>
#include <string>

namespace gt {

Instance::Instance(std::size_t universe, std::vector<SegmentSet> initial_sets,
                   Validation validation)
    : universe_(universe), initial_sets_(std::move(initial_sets)) {
  if (universe_ < 1) throw std::invalid_argument("universe size must be >= 1");
  if (universe_ > SegmentSet::kMaxUniverse) {
    throw std::invalid_argument("universe size " + std::to_string(universe_) +
                                " exceeds cap of " +
                                std::to_string(SegmentSet::kMaxUniverse));
  }
  if (initial_sets_.size() < 2) {
    throw std::invalid_argument("an instance needs at least 2 nodes");
  }
  realized_ = SegmentSet(universe_);
  for (std::size_t i = 0; i < initial_sets_.size(); ++i) {
    const SegmentSet& s = initial_sets_[i];
    if (s.universe() != universe_) {
      throw std::invalid_argument("node " + std::to_string(i + 1) +
                                  ": set built over a different universe");
    }
    if (validation == Validation::kStrict) {
      if (s.empty()) {
        throw std::invalid_argument("node " + std::to_string(i + 1) +
                                    ": initial set is empty");
      }
      if (s.size() == universe_) {
        throw std::invalid_argument("node " + std::to_string(i + 1) +
                                    ": initial set is the whole universe");
      }
    }
    realized_ = realized_ | s;
  }
}

Instance Instance::from_one_based(
    std::size_t universe, const std::vector<std::vector<std::size_t>>& sets,
    Validation validation) {
  std::vector<SegmentSet> converted;
  converted.reserve(sets.size());
  for (const auto& ids : sets) {
    SegmentSet s(universe);
    for (std::size_t id : ids) {
      if (id < 1 || id > universe) {
        throw std::invalid_argument("segment id " + std::to_string(id) +
                                    " outside 1.." + std::to_string(universe));
      }
      s.insert(id - 1);
    }
    converted.push_back(std::move(s));
  }
  return Instance(universe, std::move(converted), validation);
}

std::size_t Instance::total_initial_cardinality() const {
  std::size_t total = 0;
  for (const SegmentSet& s : initial_sets_) total += s.size();
  return total;
}

std::optional<std::size_t> Instance::uniform_set_size() const {
  const std::size_t k = initial_sets_.front().size();
  for (const SegmentSet& s : initial_sets_) {
    if (s.size() != k) return std::nullopt;
  }
  return k;
}

}  // namespace gt
