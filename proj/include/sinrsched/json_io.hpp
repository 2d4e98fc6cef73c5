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

// JSON views of networks, schedules and sweep results, and the sweep preset
// format:
//
//   {
//     "generator": {"kind": "TypeI", "n": 100, "side_m": 1000,
//                   "params": {"power_w": 0.3, "noise_w": 8e-14, "alpha": 4, "beta_db": 25}},
//     "axis": "SquareSide", "axis_values": [50, 100, ...],
//     "instances": 100, "criteria": ["GreedyPhysical", "ApproxLogN", "MaxCRank"],
//     "mode": "Both", "base_seed": 0, "structural": true
//   }

#include <fstream>
#include <string>

#include "json.hpp"
#include "sinrsched/io.hpp"
#include "sinrsched/multicolor.hpp"
#include "sinrsched/netgen.hpp"
#include "sinrsched/scheduler.hpp"
#include "sinrsched/sweep.hpp"

namespace sinrsched {

using Json = nlohmann::json;

inline Json params_to_json(const RadioParams& p) {
  return {{"power_w", p.power_w()},
          {"noise_w", p.noise_w()},
          {"alpha", p.alpha()},
          {"beta_db", linear_to_db(p.beta_linear())},
          {"beta_linear", p.beta_linear()}};
}

inline Json network_to_json(const Network& net) {
  Json nodes = Json::array();
  for (const Node& n : net.nodes) nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}});
  Json links = Json::array();
  for (const Link& l : net.links) links.push_back({{"id", l.id}, {"sender", l.sender}, {"receiver", l.receiver}});
  return {{"side_m", net.side_m},
          {"max_range_m", max_range(net.params)},
          {"params", params_to_json(net.params)},
          {"nodes", std::move(nodes)},
          {"links", std::move(links)}};
}

inline Json schedule_to_json(const Schedule& s) {
  return {{"multiplicity", s.multiplicity}, {"slot_count", s.slot_count}, {"slots", s.slots}};
}

inline Json multicolor_to_json(const MulticolorResult& r) {
  Json trace = Json::array();
  for (const RatioStep& st : r.ratio_trace)
    trace.push_back({{"q", st.q}, {"slot_count", st.slot_count}, {"ratio", st.ratio}, {"accepted", st.accepted}});
  return {{"base_t", r.base_t},
          {"q", r.q},
          {"slot_count", r.schedule.slot_count},
          {"gain", r.gain},
          {"capped", r.capped},
          {"ratio_trace", std::move(trace)},
          {"schedule", schedule_to_json(r.schedule)}};
}

inline Json report_to_json(const ValidationReport& rep) {
  Json v = Json::array();
  for (const Violation& x : rep.violations) {
    Json j = {{"kind", to_string(x.kind)}, {"message", x.message}};
    if (x.link) j["link"] = *x.link;
    v.push_back(std::move(j));
  }
  return {{"valid", rep.valid}, {"violation_count", rep.violation_count}, {"violations", std::move(v)}};
}

inline Json sweep_to_json(const SweepResult& r) {
  Json rows = Json::array();
  for (const SweepRow& row : r.rows)
    rows.push_back({{"axis", row.axis},
                    {"criterion", row.criterion},
                    {"metric", row.metric},
                    {"mean", row.stats.mean},
                    {"stddev", row.stats.stddev},
                    {"ci95", row.stats.ci95},
                    {"count", row.stats.count}});
  Json points = Json::array();
  for (const PointReport& p : r.points)
    points.push_back({{"axis", p.axis}, {"failed", p.failed}, {"errors", p.errors}, {"seconds", p.seconds}});
  return {{"axis", to_string(r.axis)}, {"rows", std::move(rows)}, {"points", std::move(points)}};
}

inline SweepSpec sweep_spec_from_json(const Json& j) {
  try {
    SweepSpec spec;
    const Json& g = j.at("generator");
    const std::string kind = g.at("kind").get<std::string>();
    if (kind == "TypeI")
      spec.generator.kind = GenKind::TypeI;
    else if (kind == "TypeII")
      spec.generator.kind = GenKind::TypeII;
    else
      throw ParseError(0, "generator.kind", "unknown kind '" + kind + "'");
    spec.generator.n = g.value("n", std::size_t{100});
    spec.generator.side_m = g.value("side_m", 1000.0);
    if (g.contains("params")) {
      const Json& p = g.at("params");
      spec.generator.params = RadioParams::from_db(p.at("power_w").get<double>(), p.at("noise_w").get<double>(),
                                                   p.at("alpha").get<double>(), p.at("beta_db").get<double>());
    }
    const std::string axis = j.at("axis").get<std::string>();
    if (axis == "SquareSide")
      spec.axis = SweepAxis::SquareSide;
    else if (axis == "LinkCount")
      spec.axis = SweepAxis::LinkCount;
    else
      throw ParseError(0, "axis", "unknown axis '" + axis + "'");
    spec.axis_values = j.at("axis_values").get<std::vector<double>>();
    spec.instances = j.value("instances", std::size_t{100});
    if (j.contains("criteria")) {
      spec.criteria.clear();
      for (const std::string& name : j.at("criteria").get<std::vector<std::string>>()) {
        const auto c = parse_criterion(name);
        if (!c) throw ParseError(0, "criteria", "unknown criterion '" + name + "'");
        spec.criteria.push_back(*c);
      }
    }
    const std::string mode = j.value("mode", std::string("Both"));
    if (mode == "Single")
      spec.mode = SweepMode::Single;
    else if (mode == "Multi")
      spec.mode = SweepMode::Multi;
    else if (mode == "Both")
      spec.mode = SweepMode::Both;
    else
      throw ParseError(0, "mode", "unknown mode '" + mode + "'");
    spec.base_seed = j.value("base_seed", std::uint64_t{0});
    spec.structural = j.value("structural", true);
    spec.validate();
    return spec;
  } catch (const Json::exception& e) {
    throw ParseError(0, "preset", e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(0, "preset", e.what());
  }
}

inline SweepSpec load_sweep_spec(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    is >> j;
  } catch (const Json::exception& e) {
    throw ParseError(0, "preset", e.what());
  }
  return sweep_spec_from_json(j);
}

}  // namespace sinrsched
