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

#include "gt/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gt {
namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

std::size_t positive_int(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw std::invalid_argument(field + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

json one_based(const SegmentSet& s) {
  json out = json::array();
  for (SegmentIndex e : s.members()) out.push_back(e + 1);
  return out;
}

json link_json(Link link) { return json::array({link.i + 1, link.j + 1}); }

json schedule_json(const Schedule& schedule) {
  json steps = json::array();
  for (const ScheduleStep& s : schedule.steps()) {
    steps.push_back({{"link", link_json(s.link)},
                     {"gained_i", one_based(s.gained_i)},
                     {"gained_j", one_based(s.gained_j)}});
  }
  return steps;
}

json links_json(const Schedule& schedule) {
  json out = json::array();
  for (const ScheduleStep& s : schedule.steps()) out.push_back(link_json(s.link));
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text, Validation validation) {
  const json doc = parse_document(text, "instance");
  if (!doc.is_object()) throw std::invalid_argument("instance: expected object");
  for (const char* key : {"m", "n", "sets"}) {
    if (!doc.contains(key)) {
      throw std::invalid_argument(std::string("instance: missing field '") +
                                  key + "'");
    }
  }
  const std::size_t m = positive_int(doc.at("m"), "instance.m");
  const std::size_t n = positive_int(doc.at("n"), "instance.n");
  if (n > SegmentSet::kMaxUniverse) {
    throw std::invalid_argument("instance.n: " + std::to_string(n) +
                                " exceeds cap of " +
                                std::to_string(SegmentSet::kMaxUniverse));
  }
  const json& sets = doc.at("sets");
  if (!sets.is_array() || sets.size() != m) {
    throw std::invalid_argument("instance.sets: expected " + std::to_string(m) +
                                " lists");
  }
  std::vector<SegmentSet> parsed;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string field = "instance.sets[" + std::to_string(i + 1) + "]";
    if (!sets[i].is_array()) throw std::invalid_argument(field + ": expected list");
    SegmentSet s(n);
    std::size_t previous = 0;
    for (const json& v : sets[i]) {
      const std::size_t id = positive_int(v, field);
      if (id > n) {
        throw std::invalid_argument(field + ": segment " + std::to_string(id) +
                                    " outside 1.." + std::to_string(n));
      }
      if (id <= previous) {
        throw std::invalid_argument(field +
                                    ": segment ids must be strictly increasing");
      }
      previous = id;
      s.insert(id - 1);
    }
    parsed.push_back(std::move(s));
  }
  return Instance(n, std::move(parsed), validation);
}

std::string format_instance(const Instance& instance) {
  json doc;
  doc["m"] = instance.node_count();
  doc["n"] = instance.universe_size();
  json sets = json::array();
  for (const SegmentSet& s : instance.initial_sets()) sets.push_back(one_based(s));
  doc["sets"] = std::move(sets);
  return doc.dump() + "\n";
}

std::vector<Link> parse_schedule(const std::string& text) {
  const json doc = parse_document(text, "schedule");
  if (!doc.is_object() || !doc.contains("steps") || !doc.at("steps").is_array()) {
    throw std::invalid_argument("schedule: expected {\"steps\": [[i,j], ...]}");
  }
  std::vector<Link> out;
  std::size_t r = 0;
  for (const json& step : doc.at("steps")) {
    ++r;
    const std::string field = "schedule.steps[" + std::to_string(r) + "]";
    if (!step.is_array() || step.size() != 2) {
      throw std::invalid_argument(field + ": expected a node pair");
    }
    const std::size_t a = positive_int(step[0], field);
    const std::size_t b = positive_int(step[1], field);
    out.push_back(Link::make(a - 1, b - 1));
  }
  return out;
}

std::string format_schedule(std::span<const Link> links) {
  json steps = json::array();
  for (Link l : links) steps.push_back(link_json(l));
  return json{{"steps", steps}}.dump() + "\n";
}

std::string format_run(const AlgorithmRun& run) {
  json doc;
  doc["algorithm"] = algorithm_name(run.algorithm);
  doc["alpha"] = run.alpha;
  doc["maximal"] = is_maximal(run.final_state);
  doc["rounds"] = run.rounds;
  doc["post_sweep_steps"] = run.post_sweep_steps;
  doc["steps"] = links_json(run.schedule);
  doc["trace"] = schedule_json(run.schedule);
  json finals = json::array();
  for (const SegmentSet& s : run.final_state.sets()) finals.push_back(one_based(s));
  doc["final_sets"] = std::move(finals);
  return doc.dump(2) + "\n";
}

std::string format_oracle(const OracleResult& result) {
  json doc;
  doc["alpha"] = result.alpha;
  doc["exact"] = result.exact;
  doc["status"] = result.exact ? "optimal" : "limit exceeded";
  doc["states_visited"] = result.states_visited;
  doc["steps"] = links_json(result.witness);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace gt
