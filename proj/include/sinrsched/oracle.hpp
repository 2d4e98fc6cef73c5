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

// Exhaustive ground truth on tiny instances: the minimum single-color slot
// count and the minimum T'/q over bounded multicolorings.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/sinr.hpp"

namespace sinrsched::oracle {

struct OracleLimits {
  std::size_t max_links = 8;
  std::size_t max_q = 4;
  std::size_t max_slots = 12;
};

struct BestRatio {
  std::size_t q = 0;
  std::size_t slots = 0;
  double ratio = 0.0;

  friend bool operator==(const BestRatio&, const BestRatio&) = default;
};

using Mask = std::uint32_t;

inline LinkSet to_link_set(Mask m) {
  LinkSet s;
  for (LinkId i = 0; m; ++i, m >>= 1)
    if (m & 1U) s.insert(i);
  return s;
}

// feasible[m] for every subset mask m of L (index 0 unused).
inline std::vector<char> feasible_subsets(const Network& net, const OracleLimits& limits) {
  if (net.link_count() > limits.max_links)
    throw TooLarge("oracle limited to " + std::to_string(limits.max_links) + " links, got " +
                   std::to_string(net.link_count()));
  const Mask full = (Mask{1} << net.link_count());
  std::vector<char> feasible(full, 0);
  for (Mask m = 1; m < full; ++m) feasible[m] = is_feasible(net, to_link_set(m)) ? 1 : 0;
  return feasible;
}

// Fewest feasible sets partitioning L. Each partition is enumerated once by
// always placing the lowest unassigned link.
inline std::size_t min_t_exact(const Network& net, const OracleLimits& limits = {}) {
  const std::vector<char> feasible = feasible_subsets(net, limits);
  const std::size_t links = net.link_count();
  const Mask full = (Mask{1} << links) - 1;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> best(full + 1, kInf);
  best[0] = 0;
  for (Mask m = 1; m <= full; ++m) {
    const Mask low = m & (~m + 1);
    // Submasks of m that contain `low`.
    const Mask rest = m ^ low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (feasible[part]) best[m] = std::min(best[m], 1 + best[m ^ part]);
      if (sub == 0) break;
    }
  }
  return best[full];
}

namespace detail {

// Fewest feasible sets covering link i exactly counts[i] times, over a state
// space of (q+1)^|L| remaining-count vectors.
class CoverSearch {
 public:
  CoverSearch(const std::vector<char>& feasible, std::size_t links, std::size_t q)
      : links_(links), radix_(q + 1) {
    for (Mask m = 1; m < feasible.size(); ++m)
      if (feasible[m]) sets_.push_back(m);
    std::size_t states = 1;
    for (std::size_t i = 0; i < links_; ++i) states *= radix_;
    memo_.assign(states, kUnknown);
    memo_[0] = 0;
    place_.resize(links_);
    std::size_t p = 1;
    for (std::size_t i = 0; i < links_; ++i, p *= radix_) place_[i] = p;
  }

  std::size_t solve(std::size_t q) {
    std::size_t state = 0;
    for (std::size_t i = 0; i < links_; ++i) state += q * place_[i];
    return cover(state);
  }

 private:
  static constexpr std::uint16_t kUnknown = std::numeric_limits<std::uint16_t>::max();
  static constexpr std::uint16_t kInf = kUnknown - 1;

  std::uint16_t cover(std::size_t state) {
    if (memo_[state] != kUnknown) return memo_[state];
    Mask support = 0;
    std::size_t low = links_;
    for (std::size_t i = 0; i < links_; ++i) {
      if ((state / place_[i]) % radix_ > 0) {
        support |= Mask{1} << i;
        if (low == links_) low = i;
      }
    }
    std::uint16_t best = kInf;
    for (Mask m : sets_) {
      if (!(m & (Mask{1} << low)) || (m & ~support)) continue;
      std::size_t next = state;
      for (std::size_t i = 0; i < links_; ++i)
        if (m & (Mask{1} << i)) next -= place_[i];
      const std::uint16_t sub = cover(next);
      if (sub != kInf) best = std::min<std::uint16_t>(best, static_cast<std::uint16_t>(sub + 1));
    }
    memo_[state] = best;
    return best;
  }

  std::size_t links_;
  std::size_t radix_;
  std::vector<Mask> sets_;
  std::vector<std::size_t> place_;
  std::vector<std::uint16_t> memo_;
};

}  // namespace detail

// Minimum T'/q over q <= max_q and T' <= max_slots such that T' feasible sets
// contain every link exactly q times. Ties keep the smallest q.
inline BestRatio best_ratio_exact(const Network& net, const OracleLimits& limits = {}) {
  const std::vector<char> feasible = feasible_subsets(net, limits);
  const std::size_t links = net.link_count();
  BestRatio best;
  if (links == 0) return best;
  for (std::size_t q = 1; q <= limits.max_q; ++q) {
    detail::CoverSearch search(feasible, links, q);
    const std::size_t slots = search.solve(q);
    if (slots > limits.max_slots) continue;
    if (best.q == 0 || slots * best.q < best.slots * q)
      best = {q, slots, static_cast<double>(slots) / static_cast<double>(q)};
  }
  return best;
}

}  // namespace sinrsched::oracle
