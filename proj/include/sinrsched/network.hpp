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
#include <initializer_list>
#include <string>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/radio.hpp"

namespace sinrsched {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

struct Node {
  NodeId id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Link {
  LinkId id = 0;
  NodeId sender = 0;
  NodeId receiver = 0;

  friend bool operator==(const Link&, const Link&) = default;
};

// Node positions plus the directed link set on a square of side `side_m`.
// Ids are dense: nodes[i].id == i and links[i].id == i.
struct Network {
  std::vector<Node> nodes;
  std::vector<Link> links;
  double side_m = 0.0;
  RadioParams params = RadioParams::defaults();

  std::size_t node_count() const noexcept { return nodes.size(); }
  std::size_t link_count() const noexcept { return links.size(); }

  double distance(NodeId a, NodeId b) const {
    return std::hypot(nodes[a].x - nodes[b].x, nodes[a].y - nodes[b].y);
  }

  double link_length(LinkId i) const { return distance(links[i].sender, links[i].receiver); }

  friend bool operator==(const Network&, const Network&) = default;
};

// Throws InvalidArgument unless ids are dense and every link joins two distinct
// existing nodes.
inline void check_structure(const Network& net) {
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    if (net.nodes[i].id != i)
      throw InvalidArgument("node at index " + std::to_string(i) + " has id " +
                            std::to_string(net.nodes[i].id));
  }
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const Link& l = net.links[i];
    if (l.id != i)
      throw InvalidArgument("link at index " + std::to_string(i) + " has id " + std::to_string(l.id));
    if (l.sender >= net.nodes.size() || l.receiver >= net.nodes.size())
      throw InvalidArgument("link " + std::to_string(i) + " references a missing node");
    if (l.sender == l.receiver)
      throw InvalidArgument("link " + std::to_string(i) + " has sender == receiver");
  }
}

// A set of link ids, stored sorted and without duplicates.
class LinkSet {
 public:
  LinkSet() = default;
  LinkSet(std::initializer_list<LinkId> ids) : ids_(ids) { normalize(); }
  explicit LinkSet(std::vector<LinkId> ids) : ids_(std::move(ids)) { normalize(); }

  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }

  bool contains(LinkId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

  // Returns false when `id` was already present.
  bool insert(LinkId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) return false;
    ids_.insert(it, id);
    return true;
  }

  bool erase(LinkId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return false;
    ids_.erase(it);
    return true;
  }

  LinkSet with(LinkId id) const {
    LinkSet out = *this;
    out.insert(id);
    return out;
  }

  const std::vector<LinkId>& ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const LinkSet&, const LinkSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<LinkId> ids_;
};

}  // namespace sinrsched
