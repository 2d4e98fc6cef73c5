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

// Line-oriented text formats.
//
//   sinr-net v1
//   param <P_w> <N_w> <alpha> <beta_db> <side_m>
//   node <id> <x> <y>
//   link <id> <sender> <receiver>
//
//   sinr-schedule v1
//   multiplicity <q>
//   slot <k> <link id>...
//
// Blank lines and lines starting with '#' are ignored. Ids must be dense
// (0..n-1), in any order. Slot numbers are 1-based and consecutive.

#include <charconv>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/network.hpp"
#include "sinrsched/radio.hpp"
#include "sinrsched/scheduler.hpp"
#include "sinrsched/sinr.hpp"

namespace sinrsched {

inline constexpr std::string_view kNetworkHeader = "sinr-net v1";
inline constexpr std::string_view kScheduleHeader = "sinr-schedule v1";

// Shortest decimal text (at most 17 significant digits) that reads back to
// exactly the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double parse_double(std::string_view tok, std::size_t line, const char* field) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw ParseError(line, field, "expected a finite number, got '" + std::string(tok) + "'");
  return v;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* field) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, field, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return v;
}

inline bool skip_line(std::string_view line) {
  const auto toks = split_ws(line);
  return toks.empty() || toks.front().front() == '#';
}

// dB text for beta that reads back to exactly the same linear value.
inline std::string beta_db_text(double beta_linear) {
  double db = linear_to_db(beta_linear);
  for (int step = 0; step < 64; ++step) {
    const std::string text = format_double(db);
    double parsed = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), parsed);
    const double back = db_to_linear(parsed);
    if (back == beta_linear) return text;
    db = std::nextafter(db, back < beta_linear ? INFINITY : -INFINITY);
  }
  return format_double(linear_to_db(beta_linear));
}

}  // namespace detail

inline void write_network(std::ostream& os, const Network& net) {
  const RadioParams& p = net.params;
  os << kNetworkHeader << '\n';
  os << "param " << format_double(p.power_w()) << ' ' << format_double(p.noise_w()) << ' '
     << format_double(p.alpha()) << ' ' << detail::beta_db_text(p.beta_linear()) << ' '
     << format_double(net.side_m) << '\n';
  for (const Node& n : net.nodes) os << "node " << n.id << ' ' << format_double(n.x) << ' ' << format_double(n.y) << '\n';
  for (const Link& l : net.links) os << "link " << l.id << ' ' << l.sender << ' ' << l.receiver << '\n';
}

// Parses and validates a network: ids dense, endpoints existing and distinct,
// no two nodes closer than the minimum distance, every link feasible alone.
inline Network read_network(std::istream& is) {
  std::string text;
  std::size_t lineno = 0;
  bool header = false;
  std::optional<RadioParams> params;
  double side = 0.0;
  std::map<std::uint64_t, Node> nodes;
  std::map<std::uint64_t, std::pair<Link, std::size_t>> links;

  while (std::getline(is, text)) {
    ++lineno;
    if (detail::skip_line(text)) continue;
    const auto toks = detail::split_ws(text);
    if (!header) {
      if (toks.size() != 2 || toks[0] != "sinr-net" || toks[1] != "v1")
        throw ParseError(lineno, "header", "expected '" + std::string(kNetworkHeader) + "'");
      header = true;
      continue;
    }
    const std::string_view kind = toks[0];
    if (kind == "param") {
      if (params) throw ParseError(lineno, "param", "duplicate param line");
      if (toks.size() != 6) throw ParseError(lineno, "param", "expected 5 values");
      const double pw = detail::parse_double(toks[1], lineno, "P_w");
      const double nw = detail::parse_double(toks[2], lineno, "N_w");
      const double alpha = detail::parse_double(toks[3], lineno, "alpha");
      const double beta_db = detail::parse_double(toks[4], lineno, "beta_db");
      side = detail::parse_double(toks[5], lineno, "side_m");
      if (!(side > 0.0)) throw ParseError(lineno, "side_m", "must be positive");
      try {
        params = RadioParams::from_db(pw, nw, alpha, beta_db);
      } catch (const InvalidArgument& e) {
        throw ParseError(lineno, "param", e.what());
      }
    } else if (kind == "node") {
      if (toks.size() != 4) throw ParseError(lineno, "node", "expected 'node <id> <x> <y>'");
      const auto id = detail::parse_uint(toks[1], lineno, "node id");
      if (id > UINT32_MAX) throw ParseError(lineno, "node id", "id out of range");
      const double x = detail::parse_double(toks[2], lineno, "x");
      const double y = detail::parse_double(toks[3], lineno, "y");
      if (!nodes.emplace(id, Node{static_cast<NodeId>(id), x, y}).second)
        throw ParseError(lineno, "node id", "duplicate node id " + std::to_string(id));
    } else if (kind == "link") {
      if (toks.size() != 4) throw ParseError(lineno, "link", "expected 'link <id> <sender> <receiver>'");
      const auto id = detail::parse_uint(toks[1], lineno, "link id");
      if (id > UINT32_MAX) throw ParseError(lineno, "link id", "id out of range");
      const auto s = detail::parse_uint(toks[2], lineno, "sender");
      const auto r = detail::parse_uint(toks[3], lineno, "receiver");
      if (s > UINT32_MAX) throw ParseError(lineno, "sender", "unknown node id " + std::to_string(s));
      if (r > UINT32_MAX) throw ParseError(lineno, "receiver", "unknown node id " + std::to_string(r));
      const Link l{static_cast<LinkId>(id), static_cast<NodeId>(s), static_cast<NodeId>(r)};
      if (!links.emplace(id, std::pair{l, lineno}).second)
        throw ParseError(lineno, "link id", "duplicate link id " + std::to_string(id));
    } else {
      throw ParseError(lineno, "record", "unknown record '" + std::string(kind) + "'");
    }
  }
  if (!header) throw ParseError(0, "header", "empty input");
  if (!params) throw ParseError(0, "param", "missing param line");

  Network net;
  net.params = *params;
  net.side_m = side;
  std::uint64_t expect = 0;
  for (const auto& [id, node] : nodes) {
    if (id != expect++) throw ParseError(0, "node id", "node ids must be 0..n-1, missing " + std::to_string(expect - 1));
    net.nodes.push_back(node);
  }
  expect = 0;
  for (const auto& [id, entry] : links) {
    const auto& [link, line] = entry;
    if (id != expect++) throw ParseError(line, "link id", "link ids must be 0..m-1, missing " + std::to_string(expect - 1));
    if (link.sender >= net.nodes.size() || nodes.count(link.sender) == 0)
      throw ParseError(line, "sender", "unknown node id " + std::to_string(link.sender));
    if (link.receiver >= net.nodes.size() || nodes.count(link.receiver) == 0)
      throw ParseError(line, "receiver", "unknown node id " + std::to_string(link.receiver));
    if (link.sender == link.receiver) throw ParseError(line, "link", "sender equals receiver");
    net.links.push_back(link);
  }

  for (NodeId a = 0; a < net.node_count(); ++a)
    for (NodeId b = a + 1; b < net.node_count(); ++b)
      if (net.distance(a, b) < kMinDistance)
        throw ZeroDistance("nodes " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  for (LinkId i = 0; i < net.link_count(); ++i)
    if (!is_singleton_feasible(net, i))
      throw UnschedulableLink(i, "length " + format_double(net.link_length(i)) + " m exceeds max range " +
                                     format_double(max_range(net.params)) + " m");
  return net;
}

inline void save_network(const Network& net, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_network(os, net);
  if (!os) throw Error("write to '" + path + "' failed");
}

inline Network load_network(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  return read_network(is);
}

inline void write_schedule(std::ostream& os, const Schedule& sched) {
  os << kScheduleHeader << '\n';
  os << "multiplicity " << sched.multiplicity << '\n';
  for (std::size_t k = 0; k < sched.slots.size(); ++k) {
    os << "slot " << (k + 1);
    for (LinkId i : sched.slots[k]) os << ' ' << i;
    os << '\n';
  }
}

// Slots are kept exactly as listed, duplicates included.
inline Schedule read_schedule(std::istream& is) {
  std::string text;
  std::size_t lineno = 0;
  bool header = false;
  std::optional<std::size_t> q;
  Schedule sched;
  while (std::getline(is, text)) {
    ++lineno;
    if (detail::skip_line(text)) continue;
    const auto toks = detail::split_ws(text);
    if (!header) {
      if (toks.size() != 2 || toks[0] != "sinr-schedule" || toks[1] != "v1")
        throw ParseError(lineno, "header", "expected '" + std::string(kScheduleHeader) + "'");
      header = true;
      continue;
    }
    if (toks[0] == "multiplicity") {
      if (q) throw ParseError(lineno, "multiplicity", "duplicate multiplicity line");
      if (toks.size() != 2) throw ParseError(lineno, "multiplicity", "expected one value");
      q = detail::parse_uint(toks[1], lineno, "multiplicity");
      if (*q == 0) throw ParseError(lineno, "multiplicity", "must be at least 1");
    } else if (toks[0] == "slot") {
      if (toks.size() < 2) throw ParseError(lineno, "slot", "missing slot number");
      const auto k = detail::parse_uint(toks[1], lineno, "slot number");
      if (k != sched.slots.size() + 1)
        throw ParseError(lineno, "slot number", "expected slot " + std::to_string(sched.slots.size() + 1));
      std::vector<LinkId> members;
      for (std::size_t t = 2; t < toks.size(); ++t) {
        const auto id = detail::parse_uint(toks[t], lineno, "link id");
        if (id > UINT32_MAX) throw ParseError(lineno, "link id", "id out of range");
        members.push_back(static_cast<LinkId>(id));
      }
      sched.slots.push_back(std::move(members));
    } else {
      throw ParseError(lineno, "record", "unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (!header) throw ParseError(0, "header", "empty input");
  sched.multiplicity = q.value_or(1);
  sched.slot_count = sched.slots.size();
  return sched;
}

inline void save_schedule(const Schedule& sched, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_schedule(os, sched);
  if (!os) throw Error("write to '" + path + "' failed");
}

inline Schedule load_schedule(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  return read_schedule(is);
}

}  // namespace sinrsched
