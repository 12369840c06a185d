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

#include "gt/random.hpp"

#include <limits>
#include <stdexcept>

namespace gt {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + index);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

SegmentSet sample_subset(std::size_t universe, std::size_t k, Rng& rng) {
  if (k > universe) {
    throw std::invalid_argument("cannot draw " + std::to_string(k) +
                                " segments from a universe of " +
                                std::to_string(universe));
  }
  SegmentSet out(universe);
  for (std::size_t j = universe - k; j < universe; ++j) {
    const std::size_t t = uniform_below(rng, j + 1);
    out.insert(out.contains(t) ? j : t);
  }
  return out;
}

}  // namespace gt
