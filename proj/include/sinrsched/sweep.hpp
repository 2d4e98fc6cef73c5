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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "sinrsched/error.hpp"
#include "sinrsched/io.hpp"
#include "sinrsched/multicolor.hpp"
#include "sinrsched/netgen.hpp"
#include "sinrsched/scheduler.hpp"

namespace sinrsched {

enum class SweepAxis { SquareSide, LinkCount };
enum class SweepMode { Single, Multi, Both };

inline const char* to_string(SweepAxis a) { return a == SweepAxis::SquareSide ? "SquareSide" : "LinkCount"; }

inline const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::Single: return "Single";
    case SweepMode::Multi: return "Multi";
    case SweepMode::Both: return "Both";
  }
  return "?";
}

namespace metric {
inline constexpr const char* kLinks = "links_count";
inline constexpr const char* kComponents = "components_count";
inline constexpr const char* kTOverL = "t_over_l";
inline constexpr const char* kGain = "gain_g";
}  // namespace metric

// Criterion label used for rows that describe the network itself.
inline constexpr const char* kNetworkLabel = "network";

struct SweepSpec {
  GenSpec generator;  // seed is ignored; instance k uses base_seed + k
  SweepAxis axis = SweepAxis::SquareSide;
  std::vector<double> axis_values;
  std::size_t instances = 100;
  std::vector<RankCriterion> criteria{std::begin(kAllCriteria), std::end(kAllCriteria)};
  SweepMode mode = SweepMode::Both;
  std::uint64_t base_seed = 0;
  bool structural = true;  // record links_count and components_count

  void validate() const {
    if (instances < 1) throw InvalidArgument("instances must be at least 1");
    if (axis_values.empty()) throw InvalidArgument("axis_values must be nonempty");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
      if (!(axis_values[i] > axis_values[i - 1])) throw InvalidArgument("axis_values must be strictly increasing");
    if (axis == SweepAxis::LinkCount) {
      if (generator.kind != GenKind::TypeII) throw InvalidArgument("the LinkCount axis needs type-II networks");
      for (double v : axis_values)
        if (!(v >= 1.0) || v != std::floor(v)) throw InvalidArgument("link counts must be positive integers");
    }
    if (criteria.empty() && !structural) throw InvalidArgument("nothing to measure");
  }

  // Generator settings for one axis point.
  GenSpec at(double axis_value, std::size_t instance) const {
    GenSpec g = generator;
    if (axis == SweepAxis::SquareSide)
      g.side_m = axis_value;
    else
      g.n = 2 * static_cast<std::size_t>(axis_value);
    g.seed = base_seed + instance;
    return g;
  }
};

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double ci95 = 0.0;    // 1.96 s / sqrt(count)
  std::size_t count = 0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

// Sums in the given order with Neumaier compensation; the result depends only
// on the values and their order.
inline double compensated_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  return sum + comp;
}

inline Stats summarize(const std::vector<double>& xs) {
  Stats s;
  s.count = xs.size();
  if (xs.empty()) return s;
  s.mean = compensated_sum(xs) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    std::vector<double> sq;
    sq.reserve(xs.size());
    for (double x : xs) sq.push_back((x - s.mean) * (x - s.mean));
    s.stddev = std::sqrt(compensated_sum(sq) / static_cast<double>(xs.size() - 1));
    s.ci95 = 1.96 * s.stddev / std::sqrt(static_cast<double>(xs.size()));
  }
  return s;
}

struct SweepRow {
  double axis = 0.0;
  std::string criterion;
  std::string metric;
  Stats stats;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct PointReport {
  double axis = 0.0;
  std::size_t failed = 0;
  std::vector<std::string> errors;  // first few messages
  double seconds = 0.0;             // wall time, not part of equality

  friend bool operator==(const PointReport& a, const PointReport& b) {
    return a.axis == b.axis && a.failed == b.failed && a.errors == b.errors;
  }
};

struct SweepResult {
  SweepAxis axis = SweepAxis::SquareSide;
  std::vector<SweepRow> rows;
  std::vector<PointReport> points;

  const SweepRow* find(double axis_value, std::string_view criterion, std::string_view metric_name) const {
    for (const SweepRow& r : rows)
      if (r.axis == axis_value && r.criterion == criterion && r.metric == metric_name) return &r;
    return nullptr;
  }

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// Measurements of one generated network.
struct InstanceOutcome {
  bool ok = true;
  std::string error;
  double links = 0.0;
  double components = 0.0;
  bool has_links = false;
  std::vector<double> t_over_l;  // per criterion
  std::vector<double> gain;      // per criterion
};

inline InstanceOutcome run_instance(const SweepSpec& spec, double axis_value, std::size_t instance) {
  InstanceOutcome out;
  try {
    const Network net = generate(spec.at(axis_value, instance));
    out.links = static_cast<double>(net.link_count());
    out.components = static_cast<double>(count_components(net));
    out.has_links = net.link_count() > 0;
    if (!out.has_links) return out;
    const double links = static_cast<double>(net.link_count());
    for (RankCriterion c : spec.criteria) {
      if (spec.mode == SweepMode::Single) {
        out.t_over_l.push_back(static_cast<double>(schedule_single(net, c).slot_count) / links);
      } else {
        const MulticolorResult r = schedule_multi(net, c);
        out.t_over_l.push_back(static_cast<double>(r.base_t) / links);
        out.gain.push_back(r.gain);
      }
    }
  } catch (const Error& e) {
    out.ok = false;
    out.error = "instance " + std::to_string(instance) + ": " + e.what();
  }
  return out;
}

using SweepProgress = std::function<void(double axis_value, std::size_t done, std::size_t total)>;

// Runs every axis point in order; instances of a point run on `jobs` threads.
// Aggregation is ordered by instance index, so the result does not depend on
// `jobs`.
inline SweepResult run_sweep(const SweepSpec& spec, std::size_t jobs = 1, const SweepProgress& progress = {}) {
  spec.validate();
  jobs = std::max<std::size_t>(1, std::min(jobs, spec.instances));
  SweepResult result;
  result.axis = spec.axis;

  for (double axis_value : spec.axis_values) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<InstanceOutcome> outcomes(spec.instances);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < spec.instances; k = next++) {
        outcomes[k] = run_instance(spec, axis_value, k);
        const std::size_t d = ++done;
        if (progress && jobs == 1) progress(axis_value, d, spec.instances);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (std::thread& th : pool) th.join();
      if (progress) progress(axis_value, spec.instances, spec.instances);
    }

    PointReport report;
    report.axis = axis_value;
    for (const InstanceOutcome& o : outcomes) {
      if (o.ok) continue;
      ++report.failed;
      if (report.errors.size() < 5) report.errors.push_back(o.error);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report.failed * 100 > spec.instances)
      throw SweepAborted("axis value " + format_double(axis_value) + ": " + std::to_string(report.failed) + " of " +
                         std::to_string(spec.instances) + " instances failed; first: " + report.errors.front());

    auto collect = [&](auto&& pick) {
      std::vector<double> xs;
      for (const InstanceOutcome& o : outcomes)
        if (o.ok) pick(o, xs);
      return summarize(xs);
    };
    if (spec.structural) {
      result.rows.push_back({axis_value, kNetworkLabel, metric::kLinks,
                             collect([](const InstanceOutcome& o, auto& xs) { xs.push_back(o.links); })});
      result.rows.push_back({axis_value, kNetworkLabel, metric::kComponents,
                             collect([](const InstanceOutcome& o, auto& xs) { xs.push_back(o.components); })});
    }
    for (std::size_t c = 0; c < spec.criteria.size(); ++c) {
      const char* name = to_string(spec.criteria[c]);
      if (spec.mode != SweepMode::Multi)
        result.rows.push_back({axis_value, name, metric::kTOverL, collect([c](const InstanceOutcome& o, auto& xs) {
                                 if (o.has_links) xs.push_back(o.t_over_l[c]);
                               })});
      if (spec.mode != SweepMode::Single)
        result.rows.push_back({axis_value, name, metric::kGain, collect([c](const InstanceOutcome& o, auto& xs) {
                                 if (o.has_links) xs.push_back(o.gain[c]);
                               })});
    }
    result.points.push_back(std::move(report));
  }
  return result;
}

inline constexpr std::string_view kCsvHeader = "axis,criterion,metric,mean,stddev,ci95,count";

inline void write_csv(std::ostream& os, const SweepResult& result) {
  os << kCsvHeader << '\n';
  for (const SweepRow& r : result.rows) {
    os << format_double(r.axis) << ',' << r.criterion << ',' << r.metric << ',' << format_double(r.stats.mean) << ','
       << format_double(r.stats.stddev) << ',' << format_double(r.stats.ci95) << ',' << r.stats.count << '\n';
  }
}

inline void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_csv(os, result);
  if (!os) throw Error("write to '" + path + "' failed");
}

namespace detail {

inline const char* metric_label(std::string_view m) {
  if (m == metric::kLinks) return "average number of links |L|";
  if (m == metric::kComponents) return "average number of connected components";
  if (m == metric::kTOverL) return "T/|L|";
  if (m == metric::kGain) return "G";
  return "value";
}

}  // namespace detail

// gnuplot script drawing one PNG per metric with one curve per criterion,
// reading the CSV at `csv_path`. Output files are named <stem>_<metric>.png.
inline void write_plotscript(std::ostream& os, const SweepResult& result, const std::string& csv_path,
                             const std::string& stem) {
  std::vector<std::string> metrics;
  for (const SweepRow& r : result.rows)
    if (std::find(metrics.begin(), metrics.end(), r.metric) == metrics.end()) metrics.push_back(r.metric);

  os << "# gnuplot script; run with: gnuplot <this file>\n";
  os << "set datafile separator ','\n";
  os << "set terminal pngcairo size 800,600\n";
  os << "set key top right\n";
  os << "set grid\n";
  if (result.axis == SweepAxis::SquareSide) {
    os << "set logscale x\n";
    os << "set xlabel 'square side l (m)'\n";
  } else {
    os << "set xlabel 'number of links |L|'\n";
  }
  for (const std::string& m : metrics) {
    std::vector<std::string> curves;
    for (const SweepRow& r : result.rows)
      if (r.metric == m && std::find(curves.begin(), curves.end(), r.criterion) == curves.end())
        curves.push_back(r.criterion);
    os << "\nset output '" << stem << '_' << m << ".png'\n";
    os << "set ylabel '" << detail::metric_label(m) << "'\n";
    os << "plot ";
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (i > 0) os << ", \\\n     ";
      os << "'" << csv_path << "' every ::1 using (strcol(2) eq '" << curves[i] << "' && strcol(3) eq '" << m
         << "' ? $1 : 1/0):4 with linespoints title '" << curves[i] << "'";
    }
    os << '\n';
  }
}

inline void emit_plotscript(const SweepResult& result, const std::string& path, const std::string& csv_path) {
  std::string stem = path;
  if (const auto dot = stem.rfind('.'); dot != std::string::npos && stem.find('/', dot) == std::string::npos)
    stem.erase(dot);
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_plotscript(os, result, csv_path, stem);
  if (!os) throw Error("write to '" + path + "' failed");
}

}  // namespace sinrsched
