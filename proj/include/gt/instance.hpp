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

#ifndef GT_INSTANCE_HPP_
#define GT_INSTANCE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gt/segment_set.hpp"

namespace gt {

using NodeIndex = std::size_t;

// Whether to enforce that every initial set is neither empty nor the whole
// universe. The algorithms stay well defined without it; a node holding the
// universe simply never links.
enum class Validation { kStrict, kRelaxed };

// m nodes, a universe of n segments and the initial segment set of every
// node. Immutable once constructed.
class Instance {
 public:
  Instance(std::size_t universe, std::vector<SegmentSet> initial_sets,
           Validation validation = Validation::kStrict);

  // Convenience for tests and examples: 1-based segment ids, as in files.
  static Instance from_one_based(
      std::size_t universe, const std::vector<std::vector<std::size_t>>& sets,
      Validation validation = Validation::kStrict);

  std::size_t node_count() const { return initial_sets_.size(); }
  std::size_t universe_size() const { return universe_; }
  const std::vector<SegmentSet>& initial_sets() const { return initial_sets_; }
  const SegmentSet& initial_set(NodeIndex i) const { return initial_sets_.at(i); }

  // Union of all initial sets.
  const SegmentSet& realized_universe() const { return realized_; }
  std::size_t realized_universe_size() const { return realized_.size(); }
  std::size_t total_initial_cardinality() const;
  // The common |O_i| when every node starts with the same number of segments.
  std::optional<std::size_t> uniform_set_size() const;

 private:
  std::size_t universe_;
  std::vector<SegmentSet> initial_sets_;
  SegmentSet realized_;
};

}  // namespace gt

#endif  // GT_INSTANCE_HPP_
