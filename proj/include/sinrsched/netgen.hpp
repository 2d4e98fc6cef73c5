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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/radio.hpp"
#include "sinrsched/sinr.hpp"

namespace sinrsched {

enum class GenKind { TypeI, TypeII };

inline const char* to_string(GenKind k) { return k == GenKind::TypeI ? "TypeI" : "TypeII"; }

struct GenSpec {
  GenKind kind = GenKind::TypeI;
  std::size_t n = 100;
  double side_m = 1000.0;
  RadioParams params = RadioParams::defaults();
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 2) throw InvalidArgument("generator needs n >= 2, got " + std::to_string(n));
    if (kind == GenKind::TypeII && n % 2 != 0)
      throw InvalidArgument("type-II networks need an even node count, got " + std::to_string(n));
    if (!(side_m > 0.0) || !std::isfinite(side_m))
      throw InvalidArgument("side_m must be positive");
  }
};

// Portable random stream: the raw output of mt19937_64 is fixed by the
// standard, and the conversions below are spelled out so that a given seed
// produces the same network on every platform. Sweep instance k uses seed
// base_seed + k.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline constexpr int kPlacementRetries = 100;

inline bool collides(const std::vector<Node>& nodes, const Node& cand) {
  for (const Node& other : nodes)
    if (std::hypot(other.x - cand.x, other.y - cand.y) < kMinDistance) return true;
  return false;
}

}  // namespace detail

// Nodes uniform on the square; every unordered pair within max range becomes
// one link with a fair-coin orientation. Positions are drawn in id order (x
// then y); orientation bits are drawn for in-range pairs in (i < j)
// lexicographic order.
inline Network generate_type1(const GenSpec& spec) {
  spec.validate();
  if (spec.kind != GenKind::TypeI) throw InvalidArgument("generate_type1 needs a TypeI spec");
  Rng rng(spec.seed);
  Network net;
  net.side_m = spec.side_m;
  net.params = spec.params;
  net.nodes.reserve(spec.n);

  int retries = 0;
  for (NodeId id = 0; id < spec.n; ++id) {
    Node node{id, rng.uniform() * spec.side_m, rng.uniform() * spec.side_m};
    while (detail::collides(net.nodes, node)) {
      if (++retries > detail::kPlacementRetries)
        throw DegenerateGeometry("could not place node " + std::to_string(id) +
                                 " away from existing nodes");
      node.x = rng.uniform() * spec.side_m;
      node.y = rng.uniform() * spec.side_m;
    }
    net.nodes.push_back(node);
  }

  const double rho = max_range(spec.params);
  for (NodeId i = 0; i < spec.n; ++i) {
    for (NodeId j = i + 1; j < spec.n; ++j) {
      if (net.distance(i, j) > rho) continue;
      const auto id = static_cast<LinkId>(net.links.size());
      if (rng.coin())
        net.links.push_back({id, i, j});
      else
        net.links.push_back({id, j, i});
    }
  }
  return net;
}

// n/2 receivers uniform on the square (ids 0 .. n/2-1), then one sender per
// receiver, area-uniform on the disc of radius max range around it (ids
// n/2 .. n-1). Link k sends from node n/2 + k to node k. Senders may land
// outside the square.
inline Network generate_type2(const GenSpec& spec) {
  spec.validate();
  if (spec.kind != GenKind::TypeII) throw InvalidArgument("generate_type2 needs a TypeII spec");
  Rng rng(spec.seed);
  Network net;
  net.side_m = spec.side_m;
  net.params = spec.params;
  const std::size_t pairs = spec.n / 2;
  net.nodes.reserve(spec.n);

  int retries = 0;
  for (NodeId id = 0; id < pairs; ++id) {
    Node node{id, rng.uniform() * spec.side_m, rng.uniform() * spec.side_m};
    while (detail::collides(net.nodes, node)) {
      if (++retries > detail::kPlacementRetries)
        throw DegenerateGeometry("could not place receiver " + std::to_string(id));
      node.x = rng.uniform() * spec.side_m;
      node.y = rng.uniform() * spec.side_m;
    }
    net.nodes.push_back(node);
  }

  const double rho = max_range(spec.params);
  auto place_sender = [&](const Node& rx, NodeId id) {
    const double r = rho * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return Node{id, rx.x + r * std::cos(theta), rx.y + r * std::sin(theta)};
  };
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto id = static_cast<NodeId>(pairs + k);
    const Node& rx = net.nodes[k];
    Node tx = place_sender(rx, id);
    // Rounding can push a sender a hair past rho; redraw so every link stays
    // schedulable on its own.
    auto bad = [&](const Node& cand) {
      if (detail::collides(net.nodes, cand)) return true;
      return received_power(spec.params, std::hypot(cand.x - rx.x, cand.y - rx.y)) /
                 spec.params.noise_w() < spec.params.beta_linear();
    };
    while (bad(tx)) {
      if (++retries > detail::kPlacementRetries)
        throw DegenerateGeometry("could not place sender for receiver " + std::to_string(k));
      tx = place_sender(rx, id);
    }
    net.nodes.push_back(tx);
  }
  net.links.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k)
    net.links.push_back({static_cast<LinkId>(k), static_cast<NodeId>(pairs + k), static_cast<NodeId>(k)});
  return net;
}

inline Network generate(const GenSpec& spec) {
  return spec.kind == GenKind::TypeI ? generate_type1(spec) : generate_type2(spec);
}

// Connected components of the undirected graph whose edges are the links.
inline std::size_t count_components(const Network& net) {
  std::vector<std::size_t> parent(net.node_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t components = net.node_count();
  for (const Link& l : net.links) {
    const std::size_t a = find(l.sender);
    const std::size_t b = find(l.receiver);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

}  // namespace sinrsched
