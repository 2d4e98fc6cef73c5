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

#include <cstddef>
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/scheduler.hpp"

namespace sinrsched {

// Hard stop for the outer loop. Dense networks can keep shaving T'/q by a
// fraction of a slot per pass indefinitely; the loop then ends here and the
// result is flagged as capped.
inline constexpr std::size_t kMaxMultiplicity = 64;

struct RatioStep {
  std::size_t q = 0;
  std::size_t slot_count = 0;  // T' after pass q
  double ratio = 0.0;          // T' / q
  bool accepted = false;
};

struct MulticolorResult {
  Schedule schedule;  // multiplicity q, slot_count T'
  std::size_t base_t = 0;
  std::size_t q = 1;
  double gain = 1.0;
  bool capped = false;  // stopped by kMaxMultiplicity, ratio still decreasing
  std::vector<RatioStep> ratio_trace;
};

// q * T / T' of the accepted schedule. An empty network has gain 1.
inline double gain(const MulticolorResult& r) {
  if (r.schedule.slot_count == 0) return 1.0;
  return static_cast<double>(r.q * r.base_t) / static_cast<double>(r.schedule.slot_count);
}

// Repeats the single-color pass over persistent slots for q = 1, 2, ...
// while T'/q strictly decreases. A pass that does not improve the ratio is
// rolled back and the last accepted schedule is returned.
inline MulticolorResult schedule_multi(const Network& net, RankCriterion criterion,
                                       std::size_t max_q = kMaxMultiplicity) {
  if (max_q < 1) throw InvalidArgument("max_q must be at least 1");
  const PassEngine engine(net, criterion);
  SlotTable table;
  engine.run_pass(table);

  MulticolorResult out;
  out.base_t = table.slots.size();
  std::size_t best_t = table.slots.size();
  out.ratio_trace.push_back({1, best_t, static_cast<double>(best_t), true});

  if (net.link_count() > 0) {
    for (std::size_t q = 2;; ++q) {
      if (q > max_q) {
        out.capped = true;
        break;
      }
      const SlotTable::Checkpoint cp = table.checkpoint();
      engine.run_pass(table);
      const std::size_t t = table.slots.size();
      // t/q < best_t/out.q, compared exactly in integers.
      const bool improves = t * out.q < best_t * q;
      out.ratio_trace.push_back({q, t, static_cast<double>(t) / static_cast<double>(q), improves});
      if (!improves) {
        table.rollback(cp);
        break;
      }
      best_t = t;
      out.q = q;
    }
  }

  out.schedule = make_schedule(table.slots, out.q);
  out.gain = gain(out);
  return out;
}

}  // namespace sinrsched
