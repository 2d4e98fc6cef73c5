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
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/interference.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/sinr.hpp"

namespace sinrsched {

enum class RankCriterion { GreedyPhysical, ApproxLogN, MaxCRank };

inline constexpr RankCriterion kAllCriteria[] = {RankCriterion::GreedyPhysical, RankCriterion::ApproxLogN,
                                                 RankCriterion::MaxCRank};

inline const char* to_string(RankCriterion c) {
  switch (c) {
    case RankCriterion::GreedyPhysical: return "GreedyPhysical";
    case RankCriterion::ApproxLogN: return "ApproxLogN";
    case RankCriterion::MaxCRank: return "MaxCRank";
  }
  return "?";
}

inline std::optional<RankCriterion> parse_criterion(std::string_view s) {
  for (RankCriterion c : kAllCriteria)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

// Slots S_1..S_T (stored 0-based, members ascending). Every link appears in
// exactly `multiplicity` slots; slot_count is T, or T' when multiplicity > 1.
// Slots are plain id lists so that malformed input (a link listed twice in
// one slot) stays representable for validation.
struct Schedule {
  std::vector<std::vector<LinkId>> slots;
  std::size_t multiplicity = 1;
  std::size_t slot_count = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Snapshot of a run of the generic heuristic: remaining links R, the current
// slot index k (0-based) and the slots built so far.
struct SchedulerState {
  LinkSet r;
  std::size_t k = 0;
  std::vector<LinkSet> slots;
};

// Number of links j != i with {i, j} infeasible. Ranked nonincreasing.
inline std::size_t rank_greedy_physical(const Network& net, LinkId link) {
  std::size_t score = 0;
  for (LinkId j = 0; j < net.link_count(); ++j)
    if (j != link && !is_feasible(net, LinkSet{link, j})) ++score;
  return score;
}

// Sender-receiver distance. Ranked nondecreasing.
inline double rank_approx_logn(const Network& net, LinkId link) {
  detail::check_link_id(net, link);
  return net.link_length(link);
}

// Number of j in R \ {i} for which S_k + {i, j} is infeasible, where i is a
// candidate for the current slot. Ranked nondecreasing; changes after every move.
inline std::size_t rank_maxcrank(const Network& net, const SchedulerState& state, LinkId link) {
  const LinkSet current = state.k < state.slots.size() ? state.slots[state.k] : LinkSet{};
  const LinkSet with_i = current.with(link);
  std::size_t score = 0;
  for (LinkId j : state.r) {
    if (j == link) continue;
    if (!is_feasible(net, with_i.with(j))) ++score;
  }
  return score;
}

// Slots under construction plus a per-slot flag recording that no link of L
// can join the slot any more. Passes only append members, so a closed slot
// stays closed.
struct SlotTable {
  std::vector<std::vector<LinkId>> slots;
  std::vector<char> closed;

  using Checkpoint = std::vector<std::size_t>;

  Checkpoint checkpoint() const {
    Checkpoint sizes;
    sizes.reserve(slots.size());
    for (const auto& s : slots) sizes.push_back(s.size());
    return sizes;
  }

  // Drops everything appended since `cp`.
  void rollback(const Checkpoint& cp) {
    slots.resize(cp.size());
    closed.resize(cp.size());
    for (std::size_t k = 0; k < cp.size(); ++k) {
      if (slots[k].size() != cp[k]) {
        slots[k].resize(cp[k]);
        closed[k] = 0;
      }
    }
  }
};

// Steps 1-4 over persistent slots with the exact feasibility predicate. One
// pass places every link exactly once; slots are scanned from the first one
// and never cleared, so repeated passes build a multicoloring.
//
// Candidates for a slot are found by intersecting the pairwise-compatibility
// rows of its members, then confirmed with incremental interference sums and
// finally with the exact predicate before a link is committed.
class PassEngine {
 public:
  PassEngine(const Network& net, RankCriterion criterion) : model_(net), criterion_(criterion) {
    const std::size_t links = model_.link_count();
    for (LinkId i = 0; i < links; ++i)
      if (!model_.singleton_feasible(i)) throw UnschedulableLink(i, "SINR below beta even when transmitting alone");

    order_.resize(links);
    for (LinkId i = 0; i < links; ++i) order_[i] = i;
    if (criterion_ == RankCriterion::GreedyPhysical) {
      std::vector<std::size_t> conflicts(links, 0);
      for (LinkId i = 0; i < links; ++i)
        for (LinkId j = i + 1; j < links; ++j)
          if (!model_.pair_feasible(i, j)) {
            ++conflicts[i];
            ++conflicts[j];
          }
      std::stable_sort(order_.begin(), order_.end(), [&](LinkId a, LinkId b) { return conflicts[a] > conflicts[b]; });
    } else if (criterion_ == RankCriterion::ApproxLogN) {
      std::vector<double> length(links);
      for (LinkId i = 0; i < links; ++i) length[i] = net.link_length(i);
      std::stable_sort(order_.begin(), order_.end(), [&](LinkId a, LinkId b) { return length[a] < length[b]; });
    }
    pos_.resize(links);
    for (std::size_t p = 0; p < links; ++p) pos_[order_[p]] = p;
    compat_.emplace(model_, order_);
  }

  RankCriterion criterion() const noexcept { return criterion_; }
  const InterferenceModel& model() const noexcept { return model_; }

  // Rank order of the static criteria (ties by ascending id); identity for MaxCRank.
  const std::vector<LinkId>& static_order() const noexcept { return order_; }

  void run_pass(SlotTable& table) const {
    const std::size_t links = model_.link_count();
    if (links == 0) return;
    PassState st(links, model_);
    if (criterion_ == RankCriterion::MaxCRank) st.init_dynamic(*compat_);

    for (std::size_t k = 0; st.r_count > 0; ++k) {
      if (k == table.slots.size()) {
        table.slots.emplace_back();
        table.closed.push_back(0);
      }
      if (table.closed[k]) continue;
      std::vector<LinkId>& slot = table.slots[k];
      st.slot.reset(slot);
      const std::size_t added =
          criterion_ == RankCriterion::MaxCRank ? fill_dynamic(st, slot) : fill_static(st, slot);
      if (added == 0 && !slot.empty() && !can_grow(st, slot)) table.closed[k] = 1;
    }
  }

 private:
  struct Candidate {
    LinkId id;
    double load;  // interference from the slot at this link's receiver
  };

  struct PassState {
    PassState(std::size_t links, const InterferenceModel& model)
        : r(links, true), r_count(links), cand(links), slot(model) {}

    Bits r;  // unscheduled links, by position
    std::size_t r_count;
    Bits cand;
    SlotState slot;

    // MaxCRank bookkeeping: links of R compatible with each link, and R keyed
    // by (fewest compatible partners last, then id) for the empty-slot pick.
    std::vector<std::size_t> compat_in_r;
    std::set<std::pair<std::size_t, LinkId>> by_conflicts;
    std::vector<Candidate> cands;
    std::vector<Candidate> next;
    std::vector<std::size_t> conflicts;

    void init_dynamic(const CompatibilityMatrix& compat) {
      const std::size_t links = compat.size();
      compat_in_r.resize(links);
      for (LinkId i = 0; i < links; ++i) {
        compat_in_r[i] = compat.degree(i);
        by_conflicts.emplace(links - compat_in_r[i], i);
      }
    }
  };

  // Members' compatibility rows intersected with R.
  void candidates_of(PassState& st, const std::vector<LinkId>& slot) const {
    if (slot.empty()) {
      st.cand = st.r;
      return;
    }
    st.cand.assign_and(st.r.words(), compat_->row(pos_[slot.front()]));
    for (std::size_t m = 1; m < slot.size(); ++m) st.cand.and_with(compat_->row(pos_[slot[m]]));
  }

  void take(PassState& st, std::vector<LinkId>& slot, LinkId i, double load) const {
    st.slot.add(i, load);
    slot.push_back(i);
    st.r.reset(pos_[i]);
    --st.r_count;
  }

  // With a fixed ranking, a link that did not fit the slot earlier in the scan
  // cannot fit after more links joined it, so one ordered scan per slot is the
  // same as restarting from the top after every move.
  std::size_t fill_static(PassState& st, std::vector<LinkId>& slot) const {
    candidates_of(st, slot);
    std::size_t added = 0;
    for (std::size_t p = st.cand.find_next(0); p < st.cand.size(); p = st.cand.find_next(p + 1)) {
      const LinkId i = order_[p];
      const double load = st.slot.interference_at(i);
      if (st.slot.fits(i, load) && st.slot.exact_fits(i)) {
        take(st, slot, i, load);
        st.cand.and_with(compat_->row(p));
        ++added;
      }
    }
    return added;
  }

  void remove_dynamic(PassState& st, LinkId x) const {
    const std::size_t links = model_.link_count();
    st.by_conflicts.erase({links - st.compat_in_r[x], x});
    compat_->for_each_compatible(x, [&](std::size_t j) {
      if (st.r.test(j)) {
        st.by_conflicts.erase({links - st.compat_in_r[j], static_cast<LinkId>(j)});
        --st.compat_in_r[j];
        st.by_conflicts.emplace(links - st.compat_in_r[j], static_cast<LinkId>(j));
      } else {
        --st.compat_in_r[j];
      }
    });
  }

  std::size_t fill_dynamic(PassState& st, std::vector<LinkId>& slot) const {
    std::size_t added = 0;
    st.cands.clear();
    if (slot.empty()) {
      // S_k + {i, j} = {i, j}: the score counts links of R incompatible with
      // i, so the best link has the most compatible partners left in R.
      const LinkId best = st.by_conflicts.begin()->second;
      take(st, slot, best, 0.0);
      remove_dynamic(st, best);
      ++added;
    }
    candidates_of(st, slot);
    for (std::size_t p = st.cand.find_next(0); p < st.cand.size(); p = st.cand.find_next(p + 1)) {
      const auto i = static_cast<LinkId>(p);
      const double load = st.slot.interference_at(i);
      if (st.slot.fits(i, load)) st.cands.push_back({i, load});
    }

    while (!st.cands.empty()) {
      // Every j in R that is not a candidate already makes S_k + {i, j}
      // infeasible for all i alike; only candidate pairs discriminate.
      auto& cands = st.cands;
      st.conflicts.assign(cands.size(), 0);
      for (std::size_t a = 0; a < cands.size(); ++a) {
        for (std::size_t b = a + 1; b < cands.size(); ++b) {
          const Candidate& ca = cands[a];
          const Candidate& cb = cands[b];
          if (!compat_->compatible(ca.id, cb.id) || !st.slot.pair_fits(ca.id, ca.load, cb.id, cb.load)) {
            ++st.conflicts[a];
            ++st.conflicts[b];
          }
        }
      }
      std::size_t pick = 0;
      for (std::size_t a = 1; a < cands.size(); ++a)
        if (st.conflicts[a] < st.conflicts[pick]) pick = a;

      const Candidate chosen = cands[pick];
      if (!st.slot.exact_fits(chosen.id)) {
        // Incremental sums disagreed with the exact predicate in the last ulp.
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(pick));
        continue;
      }
      take(st, slot, chosen.id, chosen.load);
      remove_dynamic(st, chosen.id);
      ++added;

      st.next.clear();
      for (const Candidate& c : cands) {
        if (c.id == chosen.id || !compat_->compatible(chosen.id, c.id)) continue;
        const double load = c.load + model_.interference(chosen.id, c.id);
        if (st.slot.fits(c.id, load)) st.next.push_back({c.id, load});
      }
      cands.swap(st.next);
    }
    return added;
  }

  // Whether any link of L outside the slot could still join it.
  bool can_grow(PassState& st, const std::vector<LinkId>& slot) const {
    Bits& any = st.cand;
    any.assign(compat_->row(pos_[slot.front()]));
    for (std::size_t m = 1; m < slot.size(); ++m) any.and_with(compat_->row(pos_[slot[m]]));
    for (std::size_t p = any.find_next(0); p < any.size(); p = any.find_next(p + 1)) {
      const LinkId i = order_[p];
      if (st.slot.fits(i, st.slot.interference_at(i))) return true;
    }
    return false;
  }

  InterferenceModel model_;
  RankCriterion criterion_;
  std::vector<LinkId> order_;      // position -> link
  std::vector<std::size_t> pos_;   // link -> position
  std::optional<CompatibilityMatrix> compat_;
};

inline Schedule make_schedule(const std::vector<std::vector<LinkId>>& slots, std::size_t multiplicity) {
  Schedule s;
  s.multiplicity = multiplicity;
  s.slots.reserve(slots.size());
  for (const auto& members : slots) {
    std::vector<LinkId> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    s.slots.push_back(std::move(sorted));
  }
  s.slot_count = s.slots.size();
  return s;
}

// Single-color schedule: every link in exactly one slot.
inline Schedule schedule_single(const Network& net, RankCriterion criterion) {
  const PassEngine engine(net, criterion);
  SlotTable table;
  engine.run_pass(table);
  return make_schedule(table.slots, 1);
}

struct Violation {
  enum class Kind { SlotCount, EmptySlot, UnknownLink, DuplicateInSlot, Infeasible, Multiplicity };
  Kind kind;
  std::size_t slot = 0;  // 0-based; unused for SlotCount/Multiplicity
  std::optional<LinkId> link;
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::SlotCount: return "slot count";
    case Violation::Kind::EmptySlot: return "empty slot";
    case Violation::Kind::UnknownLink: return "unknown link";
    case Violation::Kind::DuplicateInSlot: return "duplicate in slot";
    case Violation::Kind::Infeasible: return "infeasible slot";
    case Violation::Kind::Multiplicity: return "multiplicity";
  }
  return "?";
}

struct ValidationReport {
  bool valid = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first kMaxReported only

  static constexpr std::size_t kMaxReported = 10;

  void add(Violation v) {
    valid = false;
    ++violation_count;
    if (violations.size() < kMaxReported) violations.push_back(std::move(v));
  }
};

// Checks slot feasibility, per-slot uniqueness and the exact per-link
// multiplicity. Violations are returned as data.
inline ValidationReport validate_schedule(const Network& net, const Schedule& sched) {
  using Kind = Violation::Kind;
  ValidationReport report;
  if (sched.slot_count != sched.slots.size())
    report.add({Kind::SlotCount, 0, std::nullopt,
                "slot_count " + std::to_string(sched.slot_count) + " but " +
                    std::to_string(sched.slots.size()) + " slots present"});

  std::vector<std::size_t> appearances(net.link_count(), 0);
  for (std::size_t k = 0; k < sched.slots.size(); ++k) {
    const std::vector<LinkId>& raw = sched.slots[k];
    const std::string where = "slot " + std::to_string(k + 1);
    if (raw.empty()) {
      report.add({Kind::EmptySlot, k, std::nullopt, where + " is empty"});
      continue;
    }
    bool ids_ok = true;
    for (LinkId i : raw) {
      if (i >= net.link_count()) {
        report.add({Kind::UnknownLink, k, i, where + " references unknown link " + std::to_string(i)});
        ids_ok = false;
      }
    }
    if (!ids_ok) continue;

    const LinkSet slot(raw);
    if (slot.size() != raw.size()) {
      std::vector<LinkId> ids = raw;
      std::sort(ids.begin(), ids.end());
      for (std::size_t a = 1; a < ids.size(); ++a)
        if (ids[a] == ids[a - 1])
          report.add({Kind::DuplicateInSlot, k, ids[a],
                      "duplicate in " + where + ": link " + std::to_string(ids[a])});
    }
    for (LinkId i : slot) ++appearances[i];

    try {
      if (!is_feasible(net, slot)) {
        std::optional<LinkId> culprit;
        std::string why = "links share a node";
        if (node_disjoint(net, slot)) {
          for (LinkId i : slot) {
            if (!(sinr(net, i, slot) >= net.params.beta_linear())) {
              culprit = i;
              why = "SINR below beta at link " + std::to_string(i);
              break;
            }
          }
        }
        report.add({Kind::Infeasible, k, culprit, where + " infeasible: " + why});
      }
    } catch (const ZeroDistance& e) {
      report.add({Kind::Infeasible, k, std::nullopt, where + " infeasible: " + e.what()});
    }
  }

  for (LinkId i = 0; i < net.link_count(); ++i) {
    if (appearances[i] != sched.multiplicity)
      report.add({Kind::Multiplicity, 0, i,
                  "link " + std::to_string(i) + " appears " + std::to_string(appearances[i]) +
                      " times, expected " + std::to_string(sched.multiplicity)});
  }
  return report;
}

}  // namespace sinrsched
