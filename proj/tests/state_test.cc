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

#include <gtest/gtest.h>

#include <vector>

#include "gt/instance.hpp"
#include "test_util.hpp"

namespace gt {
namespace {

using Sets = std::vector<std::vector<std::size_t>>;

SystemState StateOf(std::size_t n, const Sets& sets) {
  return SystemState::initial(
      Instance::from_one_based(n, sets, Validation::kRelaxed));
}

TEST(LinkTest, CanonicalOrder) {
  EXPECT_EQ(Link::make(3, 1), (Link{1, 3}));
  EXPECT_EQ(Link::make(1, 3).to_string(), "(2,4)");
  EXPECT_THROW(Link::make(2, 2), std::invalid_argument);
}

TEST(InstanceTest, StrictValidationRejectsEmptyAndFullSets) {
  EXPECT_THROW(Instance::from_one_based(3, {{1}, {}}), std::invalid_argument);
  EXPECT_THROW(Instance::from_one_based(3, {{1}, {1, 2, 3}}),
               std::invalid_argument);
  EXPECT_NO_THROW(Instance::from_one_based(3, {{1}, {1, 2, 3}},
                                           Validation::kRelaxed));
  EXPECT_THROW(Instance::from_one_based(3, {{1}}), std::invalid_argument);
  EXPECT_THROW(Instance::from_one_based(3, {{1}, {4}}), std::invalid_argument);
  EXPECT_THROW(Instance(5000, {SegmentSet(5000), SegmentSet(5000)}),
               std::invalid_argument);
}

TEST(InstanceTest, DerivedQuantities) {
  const Instance inst = Instance::from_one_based(6, {{1, 2}, {2, 3}, {5, 6}});
  EXPECT_EQ(inst.node_count(), 3u);
  EXPECT_EQ(inst.realized_universe_size(), 5u);
  EXPECT_EQ(inst.total_initial_cardinality(), 6u);
  EXPECT_EQ(inst.uniform_set_size(), 2u);
  EXPECT_EQ(Instance::from_one_based(6, {{1}, {2, 3}}).uniform_set_size(),
            std::nullopt);
}

TEST(GtSatisfiedTest, Examples) {
  EXPECT_TRUE(gt_satisfied(StateOf(4, {{1, 2}, {2, 3}}), 0, 1));
  EXPECT_FALSE(gt_satisfied(StateOf(4, {{1}, {1, 2}}), 0, 1));
  EXPECT_FALSE(gt_satisfied(StateOf(4, {{1, 2}, {1, 2}}), 0, 1));
}

TEST(GtSatisfiedTest, InvalidIndices) {
  const SystemState s = StateOf(4, {{1, 2}, {2, 3}});
  EXPECT_THROW(gt_satisfied(s, 0, 2), std::invalid_argument);
  EXPECT_THROW(gt_satisfied(s, 1, 1), std::invalid_argument);
}

TEST(LinksTest, Examples) {
  EXPECT_EQ(links(StateOf(2, {{1}, {2}})), (std::vector<Link>{{0, 1}}));
  EXPECT_TRUE(links(StateOf(2, {{1}, {1}, {1}})).empty());
  // Node 3 is a superset of both others.
  EXPECT_EQ(links(StateOf(4, {{1, 2}, {2, 3}, {1, 2, 3}})),
            (std::vector<Link>{{0, 1}}));
}

TEST(ActivateTest, UnionSemantics) {
  const SystemState s = StateOf(4, {{1, 2}, {2, 3}, {4}});
  const SystemState t = activate(s, Link{0, 1});
  EXPECT_EQ(t.set(0).to_string(), "{1,2,3}");
  EXPECT_EQ(t.set(1).to_string(), "{1,2,3}");
  EXPECT_EQ(t.set(2), s.set(2));
  EXPECT_EQ(t.step(), 1u);
  EXPECT_EQ(activate(s, Link{1, 0}), t);
  EXPECT_EQ(s.set(0).to_string(), "{1,2}");  // input untouched
}

TEST(ActivateTest, SubsetPairIsRejected) {
  try {
    activate(StateOf(3, {{1}, {1, 2}}), Link{0, 1});
    FAIL() << "expected InvalidActivation";
  } catch (const InvalidActivation& e) {
    EXPECT_EQ(e.link(), (Link{0, 1}));
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
  }
}

TEST(MaximalTest, Examples) {
  EXPECT_TRUE(is_maximal(StateOf(3, {{1}, {1, 2}})));
  EXPECT_FALSE(is_maximal(StateOf(3, {{1}, {2}})));
}

TEST(AggregateCardinalityTest, SumsSizes) {
  EXPECT_EQ(aggregate_cardinality(StateOf(4, {{1, 2}, {2, 3}, {3}})), 5u);
}

// A four-node, five-segment instance with two schedules: one where every
// node ends with the universe (20) and one that stalls after three
// exchanges with only two universe holders (17).
TEST(ApplyScheduleTest, FourNodeWalkthrough) {
  const Instance inst =
      Instance::from_one_based(5, {{1, 2}, {3, 4}, {2, 3}, {1, 5}});

  const std::vector<Link> stalled = {Link{0, 2}, Link{0, 1}, Link{1, 3}};
  SystemState s = SystemState::initial(inst);
  s = activate(s, stalled[0]);
  EXPECT_EQ(links(s), (std::vector<Link>{{0, 1}, {0, 3}, {1, 2}, {1, 3},
                                         {2, 3}}));
  s = activate(s, stalled[1]);
  EXPECT_EQ(links(s), (std::vector<Link>{{0, 3}, {1, 3}, {2, 3}}));

  const Replay b = apply_schedule(inst, stalled);
  EXPECT_EQ(b.schedule.steps()[2].gained_i.to_string(), "{5}");
  EXPECT_EQ(b.schedule.steps()[2].gained_j.to_string(), "{2,3,4}");
  EXPECT_TRUE(is_maximal(b.final_state));
  EXPECT_EQ(aggregate_cardinality(b.final_state), 17u);
  EXPECT_EQ(universe_holder_count(b.final_state), 2u);

  const std::vector<Link> full = {Link{0, 3}, Link{1, 2}, Link{0, 1},
                                  Link{2, 3}};
  const Replay a = apply_schedule(inst, full);
  EXPECT_TRUE(is_maximal(a.final_state));
  EXPECT_EQ(aggregate_cardinality(a.final_state), 20u);
  EXPECT_EQ(upper_bound(inst), 20u);
}

TEST(ApplyScheduleTest, EmptyAndSingleStep) {
  const Instance inst = Instance::from_one_based(2, {{1}, {2}});
  const Replay none = apply_schedule(inst, {});
  EXPECT_EQ(none.final_state, SystemState::initial(inst));
  EXPECT_TRUE(none.schedule.empty());

  const std::vector<Link> one = {Link{0, 1}};
  EXPECT_EQ(aggregate_cardinality(apply_schedule(inst, one).final_state), 4u);
}

TEST(ApplyScheduleTest, ReportsFailingStep) {
  const Instance inst = Instance::from_one_based(3, {{1}, {2}, {3}});
  const std::vector<Link> bad = {Link{0, 1}, Link{0, 1}};
  try {
    apply_schedule(inst, bad);
    FAIL() << "expected InvalidActivation";
  } catch (const InvalidActivation& e) {
    ASSERT_TRUE(e.step().has_value());
    EXPECT_EQ(*e.step(), 1u);
    EXPECT_NE(std::string(e.what()).find("at step 2"), std::string::npos);
  }
  const std::vector<Link> out_of_range = {Link{0, 7}};
  EXPECT_THROW(apply_schedule(inst, out_of_range), std::invalid_argument);
}

TEST(UpperBoundTest, ParityAware) {
  EXPECT_EQ(upper_bound(Instance::from_one_based(6, {{1, 2}, {2, 3}, {3, 4},
                                                     {4, 5}})),
            20u);
  EXPECT_EQ(upper_bound(Instance::from_one_based(3, {{1}, {2}, {3}},
                                                 Validation::kRelaxed)),
            8u);
  EXPECT_EQ(upper_bound(Instance::from_one_based(2, {{1}, {1}})), 2u);
  // Identical sets: every node already holds the realized universe.
  EXPECT_EQ(upper_bound(Instance::from_one_based(3, {{1}, {1}, {1}})), 3u);
  EXPECT_EQ(upper_bound(Instance::from_one_based(3, {{1}, {1}, {2}})), 5u);
}

TEST(UpperBoundTest, InitialHolderDetection) {
  EXPECT_TRUE(no_initial_universe_holder(
      Instance::from_one_based(3, {{1}, {2}, {3}}, Validation::kRelaxed)));
  EXPECT_FALSE(no_initial_universe_holder(
      Instance::from_one_based(3, {{1}, {1, 2}})));
}

// Random walks of uniformly chosen activations: monotone growth,
// conservation, gain of at least two, and links() against a direct pair scan.
TEST(StatePropertyTest, RandomActivationWalks) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + uniform_below(rng, 6);
    const std::size_t n = 2 + uniform_below(rng, 9);
    const Instance inst = testing::RandomInstance(m, n, rng);
    const SegmentSet universe = inst.realized_universe();
    const std::size_t max_steps =
        (m * inst.realized_universe_size() - inst.total_initial_cardinality()) / 2;

    SystemState s = SystemState::initial(inst);
    std::size_t steps = 0;
    for (;;) {
      std::vector<Link> scanned;
      for (NodeIndex i = 0; i < m; ++i) {
        for (NodeIndex j = 0; j < m; ++j) {
          if (i < j && s.set(i).has_member_outside(s.set(j)) &&
              s.set(j).has_member_outside(s.set(i))) {
            scanned.push_back(Link{i, j});
          }
        }
      }
      const std::vector<Link> available = links(s);
      ASSERT_EQ(available, scanned);
      if (available.empty()) break;

      const Link pick = available[uniform_below(rng, available.size())];
      const SystemState next = activate(s, pick);
      for (NodeIndex v = 0; v < m; ++v) {
        ASSERT_TRUE(s.set(v).is_subset_of(next.set(v)));
        ASSERT_TRUE(inst.initial_set(v).is_subset_of(next.set(v)));
        if (v == pick.i || v == pick.j) {
          ASSERT_GT(next.set(v).size(), s.set(v).size());
        } else {
          ASSERT_EQ(next.set(v), s.set(v));
        }
      }
      ASSERT_EQ(realized_universe(next), universe);
      ASSERT_GE(aggregate_cardinality(next), aggregate_cardinality(s) + 2);
      s = next;
      ++steps;
    }
    EXPECT_LE(steps, max_steps);
    const auto check = testing::CheckTerminal(inst, s);
    EXPECT_TRUE(check.maximal);
    EXPECT_TRUE(check.chain);
    EXPECT_GE(universe_holder_count(s), 1u);
    if (no_initial_universe_holder(inst)) {
      EXPECT_TRUE(check.ok());
    }
    EXPECT_LE(aggregate_cardinality(s), upper_bound(inst));
  }
}

}  // namespace
}  // namespace gt
