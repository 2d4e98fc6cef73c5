/*
Copyright 2026 The sinrsched Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

namespace sinrsched {
namespace {

using testing::make_network;
using testing::parallel_links;

Network star(std::size_t leaves) {
  std::vector<std::pair<double, double>> pts{{0, 0}};
  std::vector<std::pair<NodeId, NodeId>> links;
  for (std::size_t k = 0; k < leaves; ++k) {
    pts.push_back({20.0 + 15.0 * static_cast<double>(k), -40.0});
    links.push_back({0, static_cast<NodeId>(k + 1)});
  }
  return make_network(pts, links);
}

Network relabel(const Network& net, const std::vector<LinkId>& perm) {
  Network out = net;
  for (LinkId k = 0; k < net.link_count(); ++k) {
    out.links[perm[k]] = net.links[k];
    out.links[perm[k]].id = perm[k];
  }
  return out;
}

// Smallest partition into feasible sets by trying every assignment of links
// to at most |L| labelled groups.
std::size_t min_t_by_assignment(const Network& net) {
  const std::size_t n = net.link_count();
  std::vector<std::size_t> label(n, 0);
  std::size_t best = n;
  for (;;) {
    const std::size_t used = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    if (used < best) {
      bool ok = true;
      for (std::size_t g = 0; g < used && ok; ++g) {
        LinkSet s;
        for (LinkId i = 0; i < n; ++i)
          if (label[i] == g) s.insert(i);
        ok = s.empty() || is_feasible(net, s);
      }
      if (ok) best = used;
    }
    std::size_t pos = 0;
    while (pos < n && ++label[pos] == n) label[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

// Fewest feasible sets, chosen with repetition, that cover every link exactly
// q times. Plain combination enumeration; only usable for a handful of links.
std::size_t cover_by_combinations(const Network& net, std::size_t q) {
  const std::size_t n = net.link_count();
  std::vector<std::uint32_t> sets;
  for (std::uint32_t m = 1; m < (1U << n); ++m)
    if (is_feasible(net, oracle::to_link_set(m))) sets.push_back(m);
  for (std::size_t t = 1;; ++t) {
    std::vector<std::size_t> pick(t, 0);
    for (;;) {
      std::vector<std::size_t> count(n, 0);
      for (std::size_t k : pick)
        for (std::size_t i = 0; i < n; ++i) count[i] += (sets[k] >> i) & 1U;
      if (std::all_of(count.begin(), count.end(), [q](std::size_t c) { return c == q; })) return t;
      std::size_t pos = t;
      while (pos > 0 && pick[pos - 1] == sets.size() - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < t; ++k) pick[k] = pick[pos - 1];
    }
  }
}

TEST(MinT, FeasibleNetworkNeedsOneSlot) {
  EXPECT_EQ(oracle::min_t_exact(parallel_links(5, 30.0, 3000.0)), 1U);
}

TEST(MinT, StarNeedsOneSlotPerLink) { EXPECT_EQ(oracle::min_t_exact(star(6)), 6U); }

TEST(MinT, EmptyNetwork) {
  EXPECT_EQ(oracle::min_t_exact(make_network({{0, 0}, {800, 0}}, {})), 0U);
  EXPECT_EQ(oracle::best_ratio_exact(make_network({{0, 0}, {800, 0}}, {})).q, 0U);
}

TEST(MinT, AgreesWithAssignmentEnumeration) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Network net = testing::small_random(seed, 6);
    ASSERT_EQ(oracle::min_t_exact(net), min_t_by_assignment(net)) << seed;
  }
}

TEST(MinT, NeverAboveHeuristics) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Network net = testing::small_random(seed, 6);
    const std::size_t best = oracle::min_t_exact(net);
    for (RankCriterion c : kAllCriteria) ASSERT_LE(best, schedule_single(net, c).slot_count) << seed;
  }
}

TEST(BestRatio, FeasibleNetwork) {
  EXPECT_EQ(oracle::best_ratio_exact(parallel_links(3, 30.0, 3000.0)), (oracle::BestRatio{1, 1, 1.0}));
}

TEST(BestRatio, StarKeepsSingleColoring) {
  EXPECT_EQ(oracle::best_ratio_exact(star(5)), (oracle::BestRatio{1, 5, 5.0}));
}

TEST(BestRatio, NeverAboveMinT) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Network net = testing::small_random(seed, 6);
    const oracle::BestRatio b = oracle::best_ratio_exact(net);
    ASSERT_LE(b.ratio, static_cast<double>(oracle::min_t_exact(net))) << seed;
    ASSERT_GE(b.q, 1U);
  }
}

TEST(BestRatio, CoverIsRealizable) {
  // A ratio of T'/q is only claimed when T' feasible sets cover every link q
  // times; check the q = 1 value against the partition search.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Network net = testing::small_random(seed, 6);
    oracle::OracleLimits one;
    one.max_q = 1;
    const oracle::BestRatio b = oracle::best_ratio_exact(net, one);
    ASSERT_EQ(b.q, 1U);
    ASSERT_EQ(b.slots, oracle::min_t_exact(net)) << seed;
  }
}

TEST(BestRatio, AgreesWithCombinationSearch) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 30; ++seed) {
    const Network net = testing::small_random(seed, 4);
    if (net.link_count() > 4) continue;
    ++checked;
    for (std::size_t q = 1; q <= 2; ++q) {
      oracle::OracleLimits lim;
      lim.max_q = q;
      lim.max_slots = 64;
      const oracle::BestRatio b = oracle::best_ratio_exact(net, lim);
      const std::size_t t = cover_by_combinations(net, q);
      const std::size_t t1 = cover_by_combinations(net, 1);
      const std::size_t want_q = (q == 2 && t < 2 * t1) ? 2 : 1;
      ASSERT_EQ(b.q, want_q) << seed;
      ASSERT_EQ(b.slots, want_q == 2 ? t : t1) << seed;
    }
  }
}

TEST(Oracle, RelabelingInvariance) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Network net = testing::small_random(seed, 6);
    std::vector<LinkId> perm(net.link_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    if (perm.size() > 2) std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    const Network moved = relabel(net, perm);
    ASSERT_EQ(oracle::min_t_exact(net), oracle::min_t_exact(moved)) << seed;
    ASSERT_EQ(oracle::best_ratio_exact(net), oracle::best_ratio_exact(moved)) << seed;
  }
}

TEST(Oracle, RejectsLargeInput) {
  const Network net = parallel_links(9, 30.0, 3000.0);
  EXPECT_THROW(oracle::min_t_exact(net), TooLarge);
  EXPECT_THROW(oracle::best_ratio_exact(net), TooLarge);
  oracle::OracleLimits wide;
  wide.max_links = 9;
  EXPECT_EQ(oracle::min_t_exact(net, wide), 1U);
}

TEST(Oracle, EightLinksFinishQuickly) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Network net = testing::small_random(seed, 8);
    const oracle::BestRatio b = oracle::best_ratio_exact(net);
    EXPECT_LE(b.slots, 12U);
  }
}

}  // namespace
}  // namespace sinrsched
