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

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>

#include "support.hpp"

namespace sinrsched {
namespace {

using testing::make_network;
using testing::parallel_links;

// Reference values computed at 50 significant digits.
constexpr double kBeta25dB = 316.22776601683793319988935444327185337195551393252;
constexpr double kRho = 329.99534749344810682321547838248258089257735933641;
constexpr double kParallelSinr = 374999999.99859375000028652343745568334961553928314;

std::uint64_t ulp_distance(double a, double b) {
  auto key = [](double x) {
    const auto u = std::bit_cast<std::int64_t>(x);
    return u < 0 ? std::numeric_limits<std::int64_t>::min() - u : u;
  };
  const std::int64_t ka = key(a);
  const std::int64_t kb = key(b);
  return ka > kb ? static_cast<std::uint64_t>(ka - kb) : static_cast<std::uint64_t>(kb - ka);
}

// Straight scalar evaluation in long double, no shared code with sinr().
long double scalar_sinr(long double p, long double n, long double alpha, long double sx, long double sy,
                        long double rx, long double ry, const std::vector<std::array<long double, 2>>& others) {
  auto rx_power = [&](long double x, long double y) {
    const long double d = std::sqrt((x - rx) * (x - rx) + (y - ry) * (y - ry));
    return p / std::pow(d, alpha);
  };
  long double interference = 0.0L;
  for (const auto& o : others) interference += rx_power(o[0], o[1]);
  return rx_power(sx, sy) / (n + interference);
}

TEST(RadioParams, DefaultsGiveRangeNear330m) {
  const RadioParams p = RadioParams::defaults();
  EXPECT_NEAR(max_range(p), 330.0, 0.5);
  EXPECT_NEAR(max_range(p), kRho, 1e-9);
  EXPECT_NEAR(p.beta_linear(), kBeta25dB, 1e-12);
}

TEST(RadioParams, UnitBaseGivesUnitRange) {
  for (double alpha : {2.5, 3.0, 4.0, 6.0}) EXPECT_NEAR(max_range(RadioParams(2.0, 0.5, alpha, 4.0)), 1.0, 1e-15);
  EXPECT_NEAR(max_range(RadioParams(16.0, 1.0, 4.0, 1.0 + 1e-12)), 2.0, 1e-12);
}

TEST(RadioParams, DecibelConversion) {
  EXPECT_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(10.0), 10.0, 1e-14);
  EXPECT_NEAR(db_to_linear(25.0), 316.2278, 1e-4);
  EXPECT_NEAR(linear_to_db(db_to_linear(25.0)), 25.0, 1e-12);
}

TEST(RadioParams, RejectsBrokenInvariants) {
  EXPECT_THROW(RadioParams(0.0, 1e-13, 4.0, 10.0), InvalidArgument);
  EXPECT_THROW(RadioParams(0.3, 0.0, 4.0, 10.0), InvalidArgument);
  EXPECT_THROW(RadioParams(0.3, 1e-13, 2.0, 10.0), InvalidArgument);
  EXPECT_THROW(RadioParams(0.3, 1e-13, 4.0, 1.0), InvalidArgument);
  EXPECT_THROW(RadioParams(0.3, 1e-13, std::nan(""), 10.0), InvalidArgument);
}

TEST(Sinr, SingletonAtMaxRangeEqualsBeta) {
  const double rho = max_range(RadioParams::defaults());
  const Network net = make_network({{0.0, 0.0}, {rho, 0.0}}, {{0, 1}});
  const double s = sinr(net, 0, LinkSet{0});
  EXPECT_LE(ulp_distance(s, net.params.beta_linear()), 4U) << s;
  EXPECT_TRUE(is_singleton_feasible(net, 0));
}

TEST(Sinr, HalfRangeGivesSixteenBeta) {
  const double rho = max_range(RadioParams::defaults());
  const Network net = make_network({{0.0, 0.0}, {0.0, rho / 2.0}}, {{0, 1}});
  EXPECT_NEAR(sinr(net, 0, LinkSet{0}) / (16.0 * net.params.beta_linear()), 1.0, 1e-12);
}

TEST(Sinr, FarParallelLinksMatchScalarEvaluation) {
  const Network net = make_network({{0, 0}, {10, 0}, {0, 1e6}, {10, 1e6}}, {{0, 1}, {2, 3}});
  const double s = sinr(net, 0, LinkSet{0, 1});
  const long double oracle = scalar_sinr(0.3L, 8e-14L, 4.0L, 0, 0, 10, 0, {{0.0L, 1e6L}});
  EXPECT_NEAR(s / static_cast<double>(oracle), 1.0, 1e-12);
  EXPECT_NEAR(s / kParallelSinr, 1.0, 1e-12);
  EXPECT_TRUE(is_feasible(net, LinkSet{0, 1}));
}

TEST(Sinr, RandomConfigurationsMatchScalarEvaluation) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> coord(0.0, 2000.0);
  const RadioParams p = RadioParams::defaults();
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t links = 1 + trial % 6;
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<NodeId, NodeId>> ids;
    for (std::size_t k = 0; k < links; ++k) {
      pts.push_back({coord(gen), coord(gen)});
      pts.push_back({coord(gen), coord(gen)});
      ids.push_back({static_cast<NodeId>(2 * k), static_cast<NodeId>(2 * k + 1)});
    }
    const Network net = make_network(pts, ids, p);
    LinkSet all;
    for (LinkId k = 0; k < links; ++k) all.insert(k);
    for (LinkId i = 0; i < links; ++i) {
      std::vector<std::array<long double, 2>> others;
      for (LinkId j = 0; j < links; ++j)
        if (j != i) others.push_back({pts[2 * j].first, pts[2 * j].second});
      const long double want = scalar_sinr(p.power_w(), p.noise_w(), p.alpha(), pts[2 * i].first,
                                           pts[2 * i].second, pts[2 * i + 1].first, pts[2 * i + 1].second, others);
      ASSERT_NEAR(sinr(net, i, all) / static_cast<double>(want), 1.0, 1e-12) << "trial " << trial;
    }
  }
}

TEST(Sinr, RemovingInterferersNeverLowersSinr) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> coord(0.0, 1500.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<NodeId, NodeId>> ids;
    for (NodeId k = 0; k < 5; ++k) {
      const double x = coord(gen), y = coord(gen);
      pts.push_back({x, y});
      pts.push_back({x + 50.0, y + 20.0});
      ids.push_back({2 * k, 2 * k + 1});
    }
    const Network net = make_network(pts, ids);
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
      const LinkSet s = oracle::to_link_set(mask);
      for (LinkId i : s) {
        const double full = sinr(net, i, s);
        for (LinkId drop : s) {
          if (drop == i) continue;
          LinkSet sub = s;
          sub.erase(drop);
          ASSERT_LE(full, sinr(net, i, sub));
        }
      }
      if (is_feasible(net, s)) {
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) ASSERT_TRUE(is_feasible(net, oracle::to_link_set(sub)));
      }
    }
  }
}

TEST(Sinr, ScalingCoordinatesAndPowerTogetherPreservesSinr) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> coord(0.0, 800.0);
  for (double c : {0.5, 3.0, 17.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::pair<double, double>> pts, scaled;
      std::vector<std::pair<NodeId, NodeId>> ids;
      for (NodeId k = 0; k < 4; ++k) {
        const double x = coord(gen), y = coord(gen);
        pts.push_back({x, y});
        pts.push_back({x + 40.0, y - 30.0});
        ids.push_back({2 * k, 2 * k + 1});
      }
      for (auto [x, y] : pts) scaled.push_back({c * x, c * y});
      const RadioParams p = RadioParams::defaults();
      const RadioParams ps(p.power_w() * std::pow(c, p.alpha()), p.noise_w(), p.alpha(), p.beta_linear());
      const Network a = make_network(pts, ids, p);
      const Network b = make_network(scaled, ids, ps);
      const LinkSet all{0, 1, 2, 3};
      for (LinkId i : all) ASSERT_NEAR(sinr(b, i, all) / sinr(a, i, all), 1.0, 1e-9);
      EXPECT_EQ(is_feasible(a, all), is_feasible(b, all));
    }
  }
}

TEST(Sinr, RepeatedCallsAreBitIdentical) {
  const Network net = parallel_links(4, 60.0, 200.0);
  const LinkSet all{0, 1, 2, 3};
  const double first = sinr(net, 2, all);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(std::bit_cast<std::uint64_t>(sinr(net, 2, all)), std::bit_cast<std::uint64_t>(first));
}

TEST(Sinr, RejectsBadArguments) {
  const Network net = make_network({{0, 0}, {10, 0}, {10, 0}, {30, 0}}, {{0, 1}, {2, 3}});
  EXPECT_THROW(sinr(net, 0, LinkSet{0, 1}), ZeroDistance);
  EXPECT_THROW(sinr(net, 5, LinkSet{5}), InvalidArgument);
  EXPECT_THROW(sinr(net, 0, LinkSet{1}), InvalidArgument);
  EXPECT_THROW(is_feasible(net, LinkSet{}), EmptySet);
}

TEST(Feasibility, SharedNodeIsInfeasible) {
  const Network shared_sender = make_network({{0, 0}, {10, 0}, {0, 10}}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(is_feasible(shared_sender, LinkSet{0, 1}));
  EXPECT_FALSE(node_disjoint(shared_sender, LinkSet{0, 1}));
  const Network relay = make_network({{0, 0}, {10, 0}, {20, 0}}, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_feasible(relay, LinkSet{0, 1}));
  EXPECT_TRUE(is_feasible(relay, LinkSet{1}));
}

TEST(Feasibility, SingletonWithinRangeIsFeasible) {
  const double rho = max_range(RadioParams::defaults());
  for (double f : {0.01, 0.5, 0.9, 1.0}) {
    const Network net = make_network({{0, 0}, {f * rho, 0}}, {{0, 1}});
    EXPECT_TRUE(is_feasible(net, LinkSet{0})) << f;
  }
  const Network far = make_network({{0, 0}, {rho * (1.0 + 1e-9), 0}}, {{0, 1}});
  EXPECT_FALSE(is_feasible(far, LinkSet{0}));
}

TEST(Feasibility, CloseParallelLinksConflict) {
  EXPECT_FALSE(is_feasible(parallel_links(2, 100.0, 50.0), LinkSet{0, 1}));
  EXPECT_TRUE(is_feasible(parallel_links(2, 100.0, 5000.0), LinkSet{0, 1}));
}

TEST(InterferenceModel, AgreesWithDirectPredicate) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Network net = testing::small_random(seed, 8);
    const InterferenceModel model(net);
    const std::uint32_t full = 1U << net.link_count();
    for (std::uint32_t m = 1; m < full; ++m) {
      const LinkSet s = oracle::to_link_set(m);
      ASSERT_EQ(model.exact_feasible(s.ids()), is_feasible(net, s)) << "seed " << seed << " mask " << m;
    }
  }
}

}  // namespace
}  // namespace sinrsched
