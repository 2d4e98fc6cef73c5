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
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/radio.hpp"

namespace sinrsched {

namespace detail {

inline double guarded_distance(const Network& net, NodeId a, NodeId b) {
  const double d = net.distance(a, b);
  if (d < kMinDistance)
    throw ZeroDistance("nodes " + std::to_string(a) + " and " + std::to_string(b) + " are " +
                       std::to_string(d) + " m apart");
  return d;
}

inline void check_link_id(const Network& net, LinkId id) {
  if (id >= net.link_count()) throw InvalidArgument("unknown link id " + std::to_string(id));
}

}  // namespace detail

// SINR at the receiver of `link` while every link of `active` transmits.
// Interference is accumulated onto the noise floor in ascending link-id order.
inline double sinr(const Network& net, LinkId link, const LinkSet& active) {
  detail::check_link_id(net, link);
  if (!active.contains(link))
    throw InvalidArgument("link " + std::to_string(link) + " is not in the active set");

  const RadioParams& p = net.params;
  const NodeId rx = net.links[link].receiver;
  const double signal = received_power(p, detail::guarded_distance(net, net.links[link].sender, rx));
  double denom = p.noise_w();
  for (LinkId j : active) {
    detail::check_link_id(net, j);
    if (j == link) continue;
    denom += received_power(p, detail::guarded_distance(net, net.links[j].sender, rx));
  }
  return signal / denom;
}

inline bool node_disjoint(const Network& net, const LinkSet& s) {
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * s.size());
  for (LinkId i : s) {
    detail::check_link_id(net, i);
    endpoints.push_back(net.links[i].sender);
    endpoints.push_back(net.links[i].receiver);
  }
  std::sort(endpoints.begin(), endpoints.end());
  return std::adjacent_find(endpoints.begin(), endpoints.end()) == endpoints.end();
}

// True iff the links are pairwise node-disjoint and every receiver clears beta.
// The threshold comparison is an exact `>=`.
inline bool is_feasible(const Network& net, const LinkSet& s) {
  if (s.empty()) throw EmptySet();
  if (s.size() > 1 && !node_disjoint(net, s)) return false;
  const double beta = net.params.beta_linear();
  for (LinkId i : s) {
    if (!(sinr(net, i, s) >= beta)) return false;
  }
  return true;
}

inline bool is_singleton_feasible(const Network& net, LinkId i) { return is_feasible(net, LinkSet{i}); }

}  // namespace sinrsched
