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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/radio.hpp"

namespace sinrsched {

// Cached received powers between every ordered node pair, so SINR terms are
// table lookups. Values are produced by received_power() on the same distances
// as the direct path, hence bit-identical to it.
class InterferenceModel {
 public:
  explicit InterferenceModel(const Network& net)
      : n_(net.node_count()),
        noise_(net.params.noise_w()),
        beta_(net.params.beta_linear()),
        gain_(n_ * n_, 0.0) {
    check_structure(net);
    for (NodeId a = 0; a < n_; ++a) {
      for (NodeId b = a + 1; b < n_; ++b) {
        const double d = net.distance(a, b);
        if (d < kMinDistance)
          throw ZeroDistance("nodes " + std::to_string(a) + " and " + std::to_string(b) +
                             " are closer than the minimum distance");
        const double g = received_power(net.params, d);
        gain_[a * n_ + b] = g;
        gain_[b * n_ + a] = g;
      }
    }
    senders_.reserve(net.link_count());
    receivers_.reserve(net.link_count());
    signal_.reserve(net.link_count());
    for (const Link& l : net.links) {
      senders_.push_back(l.sender);
      receivers_.push_back(l.receiver);
      signal_.push_back(gain(l.sender, l.receiver));
    }
  }

  std::size_t node_count() const noexcept { return n_; }
  std::size_t link_count() const noexcept { return signal_.size(); }
  double noise() const noexcept { return noise_; }
  double beta() const noexcept { return beta_; }

  NodeId sender(LinkId i) const { return senders_[i]; }
  NodeId receiver(LinkId i) const { return receivers_[i]; }

  double gain(NodeId from, NodeId to) const { return gain_[from * n_ + to]; }
  double signal(LinkId i) const { return signal_[i]; }

  // Power that the sender of `from` delivers at the receiver of `at`.
  double interference(LinkId from, LinkId at) const { return gain(senders_[from], receivers_[at]); }

  bool clears(LinkId i, double denom) const { return signal_[i] / denom >= beta_; }

  bool singleton_feasible(LinkId i) const { return clears(i, noise_); }

  bool share_node(LinkId i, LinkId j) const {
    return senders_[i] == senders_[j] || senders_[i] == receivers_[j] ||
           receivers_[i] == senders_[j] || receivers_[i] == receivers_[j];
  }

  // Feasibility of {i, j}, i != j, evaluated exactly as is_feasible would.
  bool pair_feasible(LinkId i, LinkId j) const {
    if (share_node(i, j)) return false;
    return clears(i, noise_ + interference(j, i)) && clears(j, noise_ + interference(i, j));
  }

  // Feasibility of a sorted, duplicate-free id list, with the same summation
  // order as is_feasible (noise first, then ascending link id).
  bool exact_feasible(std::span<const LinkId> sorted) const {
    if (sorted.empty()) throw EmptySet();
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b)
        if (share_node(sorted[a], sorted[b])) return false;
    for (LinkId m : sorted) {
      double denom = noise_;
      for (LinkId j : sorted)
        if (j != m) denom += interference(j, m);
      if (!clears(m, denom)) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  double noise_;
  double beta_;
  std::vector<double> gain_;
  std::vector<NodeId> senders_;
  std::vector<NodeId> receivers_;
  std::vector<double> signal_;
};

// Fixed-size bit set over 0..size-1.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value) trim();
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  void assign(std::span<const std::uint64_t> a) { std::copy(a.begin(), a.end(), words_.begin()); }
  void assign_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a[w] & b[w];
  }
  void and_with(std::span<const std::uint64_t> other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other[w];
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // First set bit at or after `from`, or size() when there is none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / 64;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (bits) return std::min(size_, w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w == words_.size()) return size_;
      bits = words_[w];
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Pairwise feasibility of links laid out in a chosen order: bit (p, q) is set
// iff {order[p], order[q]} is feasible. Positions rather than ids let a scan in
// rank order walk the bits in ascending order.
class CompatibilityMatrix {
 public:
  CompatibilityMatrix(const InterferenceModel& model, std::span<const LinkId> order)
      : size_(order.size()), words_((size_ + 63) / 64), bits_(size_ * words_, 0) {
    for (std::size_t p = 0; p < size_; ++p) {
      for (std::size_t q = p + 1; q < size_; ++q) {
        if (model.pair_feasible(order[p], order[q])) {
          set(p, q);
          set(q, p);
        }
      }
    }
  }

  std::size_t size() const noexcept { return size_; }

  bool compatible(std::size_t p, std::size_t q) const { return (bits_[p * words_ + q / 64] >> (q % 64)) & 1U; }

  std::size_t degree(std::size_t p) const {
    std::size_t c = 0;
    for (std::uint64_t w : row(p)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::span<const std::uint64_t> row(std::size_t p) const { return {bits_.data() + p * words_, words_}; }

  // Calls f(q) for every position q compatible with p, ascending.
  template <typename F>
  void for_each_compatible(std::size_t p, F&& f) const {
    const std::uint64_t* r = bits_.data() + p * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void set(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64); }

  std::size_t size_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// A time slot under construction. Keeps the interference accumulated at each
// member's receiver so that a candidate costs O(|slot|) to test.
class SlotState {
 public:
  explicit SlotState(const InterferenceModel& model) : model_(&model), node_used_(model.node_count(), 0) {}

  SlotState(const InterferenceModel& model, std::span<const LinkId> members) : SlotState(model) { reset(members); }

  // Reloads the state from a member list, reusing storage.
  void reset(std::span<const LinkId> members) {
    for (LinkId m : members_) {
      node_used_[model_->sender(m)] = 0;
      node_used_[model_->receiver(m)] = 0;
    }
    members_.clear();
    load_.clear();
    for (LinkId m : members) add(m, interference_at(m));
  }

  const std::vector<LinkId>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }

  bool contains(LinkId i) const {
    return std::find(members_.begin(), members_.end(), i) != members_.end();
  }

  bool uses_node_of(LinkId i) const {
    return node_used_[model_->sender(i)] || node_used_[model_->receiver(i)];
  }

  // Interference the current members deliver at the receiver of i.
  double interference_at(LinkId i) const {
    double sum = 0.0;
    for (LinkId m : members_) sum += model_->interference(m, i);
    return sum;
  }

  // Does slot + {i} pass, given a_i = interference_at(i)?
  bool fits(LinkId i, double a_i) const {
    if (uses_node_of(i)) return false;
    if (!model_->clears(i, model_->noise() + a_i)) return false;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      const LinkId m = members_[k];
      if (!model_->clears(m, model_->noise() + (load_[k] + model_->interference(i, m)))) return false;
    }
    return true;
  }

  // Does slot + {i, j} pass? Both must already fit individually and be
  // mutually compatible; this only re-checks the combined interference.
  bool pair_fits(LinkId i, double a_i, LinkId j, double a_j) const {
    if (!model_->clears(i, model_->noise() + (a_i + model_->interference(j, i)))) return false;
    if (!model_->clears(j, model_->noise() + (a_j + model_->interference(i, j)))) return false;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      const LinkId m = members_[k];
      const double extra = model_->interference(i, m) + model_->interference(j, m);
      if (!model_->clears(m, model_->noise() + (load_[k] + extra))) return false;
    }
    return true;
  }

  // Exact check of slot + {i} with is_feasible's summation order.
  bool exact_fits(LinkId i) const {
    scratch_ = members_;
    scratch_.push_back(i);
    std::sort(scratch_.begin(), scratch_.end());
    return model_->exact_feasible(scratch_);
  }

  void add(LinkId i, double a_i) {
    for (std::size_t k = 0; k < members_.size(); ++k) load_[k] += model_->interference(i, members_[k]);
    members_.push_back(i);
    load_.push_back(a_i);
    node_used_[model_->sender(i)] = 1;
    node_used_[model_->receiver(i)] = 1;
  }

 private:
  const InterferenceModel* model_;
  std::vector<LinkId> members_;
  std::vector<double> load_;
  std::vector<char> node_used_;
  mutable std::vector<LinkId> scratch_;
};

}  // namespace sinrsched
