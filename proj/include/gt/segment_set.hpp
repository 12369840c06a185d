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

#ifndef GT_SEGMENT_SET_HPP_
#define GT_SEGMENT_SET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gt {

using SegmentIndex = std::size_t;

// A subset of the segment universe {0, ..., universe-1}, stored as packed
// 64-bit words. Bits at positions >= universe are always zero, so word-wise
// comparisons and popcounts need no masking.
class SegmentSet {
 public:
  static constexpr std::size_t kMaxUniverse = 4096;

  SegmentSet() = default;
  explicit SegmentSet(std::size_t universe);

  static SegmentSet from_indices(std::size_t universe,
                                 std::span<const SegmentIndex> members);
  static SegmentSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;
  bool contains(SegmentIndex e) const;
  void insert(SegmentIndex e);

  SegmentSet operator|(const SegmentSet& other) const;
  SegmentSet operator&(const SegmentSet& other) const;
  // Set difference: members of *this not in `other`.
  SegmentSet operator-(const SegmentSet& other) const;
  SegmentSet operator^(const SegmentSet& other) const;
  SegmentSet complement() const;

  // True iff *this \ other is nonempty.
  bool has_member_outside(const SegmentSet& other) const;
  // |*this \ other|
  std::size_t count_outside(const SegmentSet& other) const;
  bool is_subset_of(const SegmentSet& other) const;

  std::vector<SegmentIndex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  // "{1,2,5}" in 1-based notation.
  std::string to_string() const;

  bool operator==(const SegmentSet& other) const = default;
  // Total order used for canonical sorting; not the inclusion order.
  std::strong_ordering operator<=>(const SegmentSet& other) const;

 private:
  void check_compatible(const SegmentSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gt

#endif  // GT_SEGMENT_SET_HPP_
