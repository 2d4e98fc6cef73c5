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

// Literal transcription of the generic rank-based heuristic: rank, scan for
// the top-ranked link that keeps the current slot feasible, move it, re-rank.
// Uses the direct SINR predicate and the public rank functions throughout. It
// is quadratic-to-quartic in |L| and serves as a cross-check for PassEngine.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sinrsched/multicolor.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/scheduler.hpp"
#include "sinrsched/sinr.hpp"

namespace sinrsched::reference {

// R ordered by the criterion. For MaxCRank only current candidates are
// ranked, since the score presumes the link can still join S_k.
inline std::vector<LinkId> rank_order(const Network& net, RankCriterion criterion, const SchedulerState& state) {
  std::vector<LinkId> order(state.r.begin(), state.r.end());
  switch (criterion) {
    case RankCriterion::GreedyPhysical: {
      std::vector<std::size_t> score(net.link_count());
      for (LinkId i : order) score[i] = rank_greedy_physical(net, i);
      std::stable_sort(order.begin(), order.end(), [&](LinkId a, LinkId b) { return score[a] > score[b]; });
      break;
    }
    case RankCriterion::ApproxLogN:
      std::stable_sort(order.begin(), order.end(), [&](LinkId a, LinkId b) {
        return rank_approx_logn(net, a) < rank_approx_logn(net, b);
      });
      break;
    case RankCriterion::MaxCRank: {
      const LinkSet slot = state.k < state.slots.size() ? state.slots[state.k] : LinkSet{};
      std::vector<LinkId> cands;
      for (LinkId i : order)
        if (!slot.contains(i) && is_feasible(net, slot.with(i))) cands.push_back(i);
      std::vector<std::size_t> score(net.link_count());
      for (LinkId i : cands) score[i] = rank_maxcrank(net, state, i);
      std::stable_sort(cands.begin(), cands.end(), [&](LinkId a, LinkId b) { return score[a] < score[b]; });
      order = std::move(cands);
      break;
    }
  }
  return order;
}

// One pass over persistent slots. `reorder` re-ranks R before every scan;
// MaxCRank always re-ranks.
inline void run_pass(const Network& net, RankCriterion criterion, std::vector<LinkSet>& slots, bool reorder) {
  if (criterion == RankCriterion::MaxCRank) reorder = true;
  SchedulerState state;
  for (LinkId i = 0; i < net.link_count(); ++i) {
    if (!is_singleton_feasible(net, i)) throw UnschedulableLink(i, "SINR below beta even when transmitting alone");
    state.r.insert(i);
  }
  state.slots = std::move(slots);
  std::vector<LinkId> order = rank_order(net, criterion, state);
  while (!state.r.empty()) {
    if (state.k == state.slots.size()) state.slots.emplace_back();
    if (reorder) order = rank_order(net, criterion, state);
    LinkSet& slot = state.slots[state.k];
    auto it = std::find_if(order.begin(), order.end(), [&](LinkId i) {
      return state.r.contains(i) && !slot.contains(i) && is_feasible(net, slot.with(i));
    });
    if (it == order.end()) {
      ++state.k;
      continue;
    }
    slot.insert(*it);
    state.r.erase(*it);
    order.erase(it);
  }
  slots = std::move(state.slots);
}

inline Schedule to_schedule(const std::vector<LinkSet>& slots, std::size_t q) {
  Schedule s;
  s.multiplicity = q;
  for (const LinkSet& slot : slots) s.slots.push_back(slot.ids());
  s.slot_count = s.slots.size();
  return s;
}

inline Schedule schedule_single(const Network& net, RankCriterion criterion, bool reorder = true) {
  std::vector<LinkSet> slots;
  run_pass(net, criterion, slots, reorder);
  return to_schedule(slots, 1);
}

inline MulticolorResult schedule_multi(const Network& net, RankCriterion criterion) {
  std::vector<LinkSet> slots;
  run_pass(net, criterion, slots, true);
  MulticolorResult out;
  out.base_t = slots.size();
  std::size_t best_t = slots.size();
  out.ratio_trace.push_back({1, best_t, static_cast<double>(best_t), true});
  for (std::size_t q = 2; net.link_count() > 0; ++q) {
    if (q > kMaxMultiplicity) {
      out.capped = true;
      break;
    }
    std::vector<LinkSet> trial = slots;
    run_pass(net, criterion, trial, true);
    const bool improves = trial.size() * out.q < best_t * q;
    out.ratio_trace.push_back({q, trial.size(), static_cast<double>(trial.size()) / static_cast<double>(q), improves});
    if (!improves) break;
    slots = std::move(trial);
    best_t = slots.size();
    out.q = q;
  }
  out.schedule = to_schedule(slots, out.q);
  out.gain = gain(out);
  return out;
}

}  // namespace sinrsched::reference
