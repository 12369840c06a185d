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

#include "gt/segment_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gt {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}

}  // namespace

SegmentSet::SegmentSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {
  if (universe > kMaxUniverse) {
    throw std::invalid_argument("segment universe " + std::to_string(universe) +
                                " exceeds cap of " +
                                std::to_string(kMaxUniverse));
  }
}

SegmentSet SegmentSet::from_indices(std::size_t universe,
                                    std::span<const SegmentIndex> members) {
  SegmentSet s(universe);
  for (SegmentIndex e : members) s.insert(e);
  return s;
}

SegmentSet SegmentSet::full(std::size_t universe) {
  return SegmentSet(universe).complement();
}

std::size_t SegmentSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool SegmentSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool SegmentSet::contains(SegmentIndex e) const {
  if (e >= universe_) return false;
  return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
}

void SegmentSet::insert(SegmentIndex e) {
  if (e >= universe_) {
    throw std::out_of_range("segment " + std::to_string(e) +
                            " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[e / kWordBits] |= std::uint64_t{1} << (e % kWordBits);
}

void SegmentSet::check_compatible(const SegmentSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("segment sets over different universes");
  }
}

SegmentSet SegmentSet::operator|(const SegmentSet& other) const {
  check_compatible(other);
  SegmentSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

SegmentSet SegmentSet::operator&(const SegmentSet& other) const {
  check_compatible(other);
  SegmentSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
  return out;
}

SegmentSet SegmentSet::operator-(const SegmentSet& other) const {
  check_compatible(other);
  SegmentSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

SegmentSet SegmentSet::operator^(const SegmentSet& other) const {
  check_compatible(other);
  SegmentSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= other.words_[w];
  return out;
}

SegmentSet SegmentSet::complement() const {
  SegmentSet out = *this;
  for (std::uint64_t& w : out.words_) w = ~w;
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

bool SegmentSet::has_member_outside(const SegmentSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return true;
  }
  return false;
}

std::size_t SegmentSet::count_outside(const SegmentSet& other) const {
  check_compatible(other);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & ~other.words_[w]);
  }
  return total;
}

bool SegmentSet::is_subset_of(const SegmentSet& other) const {
  return !has_member_outside(other);
}

std::vector<SegmentIndex> SegmentSet::members() const {
  std::vector<SegmentIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string SegmentSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (SegmentIndex e : members()) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

std::strong_ordering SegmentSet::operator<=>(const SegmentSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      words_.begin(), words_.end(), other.words_.begin(), other.words_.end());
}

}  // namespace gt
