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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sinrsched/sinrsched.hpp"

namespace sinrsched::testing {

// Builds a network from coordinates and (sender, receiver) pairs, default radio.
inline Network make_network(const std::vector<std::pair<double, double>>& pts,
                            const std::vector<std::pair<NodeId, NodeId>>& links,
                            RadioParams params = RadioParams::defaults(), double side = 1000.0) {
  Network net;
  net.side_m = side;
  net.params = params;
  for (std::size_t i = 0; i < pts.size(); ++i)
    net.nodes.push_back({static_cast<NodeId>(i), pts[i].first, pts[i].second});
  for (std::size_t k = 0; k < links.size(); ++k)
    net.links.push_back({static_cast<LinkId>(k), links[k].first, links[k].second});
  check_structure(net);
  return net;
}

// `count` parallel links of length `len`, `gap` meters apart along y.
inline Network parallel_links(std::size_t count, double len, double gap) {
  std::vector<std::pair<double, double>> pts;
  std::vector<std::pair<NodeId, NodeId>> links;
  for (std::size_t k = 0; k < count; ++k) {
    pts.push_back({0.0, static_cast<double>(k) * gap});
    pts.push_back({len, static_cast<double>(k) * gap});
    links.push_back({static_cast<NodeId>(2 * k), static_cast<NodeId>(2 * k + 1)});
  }
  return make_network(pts, links);
}

// Random type-I (even seeds) or type-II (odd seeds) network small enough for
// the exhaustive oracle. The side is chosen so that link counts stay low.
inline Network small_random(std::uint64_t seed, std::size_t max_links = 6) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    GenSpec g;
    const std::uint64_t s = seed * 1000 + attempt;
    g.seed = s;
    if (seed % 2 == 0) {
      g.kind = GenKind::TypeI;
      g.n = 4 + seed % 5;
      g.side_m = 400.0 + 100.0 * static_cast<double>(g.n + seed % 5);
    } else {
      g.kind = GenKind::TypeII;
      g.n = 2 * (2 + seed % (max_links - 1));
      g.side_m = 200.0 + 150.0 * static_cast<double>(seed % 5);
    }
    Network net = generate(g);
    if (net.link_count() >= 1 && net.link_count() <= max_links) return net;
  }
}

// Five or six short links around a ring, jittered. Neighbours on the ring
// tend to conflict and links further apart tend to coexist, so many of these
// admit a multicoloring better than any single coloring.
inline Network jittered_ring(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t links = 5 + seed % 2;
  const double radius = links == 5 ? 130.0 : 150.0;
  Network net;
  net.side_m = 400.0;
  for (std::size_t k = 0; k < links; ++k) {
    const double a = 6.283185307179586 * static_cast<double>(k) / static_cast<double>(links) + 0.2 * (rng.uniform() - 0.5);
    const double r = radius * (0.9 + 0.2 * rng.uniform());
    const double len = 45.0 * (0.85 + 0.3 * rng.uniform());
    const double dir = a + 1.5707963267948966 + 0.4 * (rng.uniform() - 0.5);
    const double cx = r * std::cos(a), cy = r * std::sin(a);
    net.nodes.push_back({static_cast<NodeId>(2 * k), cx, cy});
    net.nodes.push_back({static_cast<NodeId>(2 * k + 1), cx + len * std::cos(dir), cy + len * std::sin(dir)});
    net.links.push_back({static_cast<LinkId>(k), static_cast<NodeId>(2 * k), static_cast<NodeId>(2 * k + 1)});
  }
  return net;
}

// Feasibility evaluated from coordinates in long double, sharing no code with
// the library predicate. Only meaningful away from the beta boundary.
inline bool scalar_feasible(const Network& net, const std::vector<LinkId>& s) {
  const long double p = net.params.power_w();
  const long double noise = net.params.noise_w();
  const long double alpha = net.params.alpha();
  auto rx_power = [&](NodeId from, NodeId to) {
    const long double dx = static_cast<long double>(net.nodes[from].x) - net.nodes[to].x;
    const long double dy = static_cast<long double>(net.nodes[from].y) - net.nodes[to].y;
    return p / std::pow(std::sqrt(dx * dx + dy * dy), alpha);
  };
  if (s.size() > 1) {
    std::vector<NodeId> ends;
    for (LinkId i : s) ends.push_back(net.links[i].sender), ends.push_back(net.links[i].receiver);
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) return false;
  }
  for (LinkId i : s) {
    long double interference = 0.0L;
    for (LinkId j : s)
      if (j != i) interference += rx_power(net.links[j].sender, net.links[i].receiver);
    const long double ratio = rx_power(net.links[i].sender, net.links[i].receiver) / (noise + interference);
    if (ratio < net.params.beta_linear()) return false;
  }
  return true;
}

}  // namespace sinrsched::testing
