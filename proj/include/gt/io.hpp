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

#ifndef GT_IO_HPP_
#define GT_IO_HPP_

#include <string>
#include <vector>

#include "gt/algorithms.hpp"
#include "gt/instance.hpp"
#include "gt/oracle.hpp"
#include "gt/state.hpp"

namespace gt {

// File formats. Node and segment ids are 1-based on disk.
//
//   instance: {"m":4,"n":5,"sets":[[1,2],[2,3],[3,4],[4,5]]}
//   schedule: {"steps":[[1,3],[1,2],[2,4]]}
//
// Segment lists must be strictly increasing. Parse errors throw
// std::invalid_argument with a message naming the offending field.

Instance parse_instance(const std::string& text,
                        Validation validation = Validation::kStrict);
std::string format_instance(const Instance& instance);

std::vector<Link> parse_schedule(const std::string& text);
std::string format_schedule(std::span<const Link> links);

// Full trace of an algorithm run: schedule, per-step gains, final sets.
std::string format_run(const AlgorithmRun& run);
std::string format_oracle(const OracleResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace gt

#endif  // GT_IO_HPP_
