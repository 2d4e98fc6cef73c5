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

// sinr-sched: generate networks, schedule links, run sweeps.
//
// Exit codes: 0 success, 1 validation failure, 2 parse/IO or usage error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sinrsched/json_io.hpp"
#include "sinrsched/sinrsched.hpp"

namespace {

using namespace sinrsched;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

struct GenOptions {
  std::string kind = "TypeI";
  std::size_t n = 100;
  double side_m = 1000.0;
  std::uint64_t seed = 0;
  double power_w = 0.3;
  double noise_w = 8e-14;
  double alpha = 4.0;
  double beta_db = 25.0;

  GenSpec spec() const {
    GenSpec g;
    if (kind == "TypeI" || kind == "1")
      g.kind = GenKind::TypeI;
    else if (kind == "TypeII" || kind == "2")
      g.kind = GenKind::TypeII;
    else
      throw InvalidArgument("unknown network kind '" + kind + "'");
    g.n = n;
    g.side_m = side_m;
    g.seed = seed;
    g.params = RadioParams::from_db(power_w, noise_w, alpha, beta_db);
    return g;
  }
};

void add_gen_options(CLI::App* app, GenOptions& o) {
  app->add_option("--kind", o.kind, "Network type: TypeI or TypeII")->capture_default_str();
  app->add_option("--n", o.n, "Node count")->capture_default_str();
  app->add_option("--side", o.side_m, "Square side in meters")->capture_default_str();
  app->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  app->add_option("--power", o.power_w, "Transmit power P in watts")->capture_default_str();
  app->add_option("--noise", o.noise_w, "Noise floor N in watts")->capture_default_str();
  app->add_option("--alpha", o.alpha, "Path-loss exponent")->capture_default_str();
  app->add_option("--beta-db", o.beta_db, "SINR threshold in dB")->capture_default_str();
}

// Writes to --out, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Network input_network(const std::string& net_path, const GenOptions& gen) {
  if (!net_path.empty()) return load_network(net_path);
  return generate(gen.spec());
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("SINR_SCHED_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SINR_SCHED_JOBS='" << env << "'\n";
  }
  return 1;
}

RankCriterion criterion_from(const std::string& name) {
  const auto c = parse_criterion(name);
  if (!c) throw InvalidArgument("unknown criterion '" + name + "'");
  return *c;
}

void print_report(std::ostream& os, const ValidationReport& rep) {
  if (rep.valid) {
    os << "valid\n";
    return;
  }
  os << "invalid: " << rep.violation_count << " violation(s)\n";
  for (const Violation& v : rep.violations) os << "  " << to_string(v.kind) << ": " << v.message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link scheduling under the SINR interference model"};
  app.require_subcommand(1);

  // generate
  GenOptions gen_opts;
  std::string gen_format = "net";
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Generate a random type-I or type-II network");
  add_gen_options(gen, gen_opts);
  gen->add_option("--format", gen_format, "net or json")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // schedule / multicolor
  GenOptions sched_opts;
  std::string sched_net, sched_criterion = "MaxCRank", sched_format = "text", sched_out;
  auto* sched = app.add_subcommand("schedule", "Single-color schedule of a network");
  add_gen_options(sched, sched_opts);
  sched->add_option("--net", sched_net, "Network file (otherwise a network is generated)");
  sched->add_option("--criterion", sched_criterion, "GreedyPhysical, ApproxLogN or MaxCRank")->capture_default_str();
  sched->add_option("--format", sched_format, "text or json")->capture_default_str();
  sched->add_option("--out", sched_out, "Output file (default stdout)");

  GenOptions multi_opts;
  std::string multi_net, multi_criterion = "MaxCRank", multi_format = "text", multi_out;
  std::size_t multi_max_q = kMaxMultiplicity;
  auto* multi = app.add_subcommand("multicolor", "Multicoloring schedule and gain of a network");
  add_gen_options(multi, multi_opts);
  multi->add_option("--net", multi_net, "Network file (otherwise a network is generated)");
  multi->add_option("--criterion", multi_criterion, "GreedyPhysical, ApproxLogN or MaxCRank")->capture_default_str();
  multi->add_option("--max-q", multi_max_q, "Multiplicity cap")->capture_default_str();
  multi->add_option("--format", multi_format, "text or json")->capture_default_str();
  multi->add_option("--out", multi_out, "Output file (default stdout)");

  // validate
  GenOptions val_opts;
  std::string val_net, val_schedule, val_format = "text", val_out;
  auto* val = app.add_subcommand("validate", "Check a schedule file against a network");
  add_gen_options(val, val_opts);
  val->add_option("--net", val_net, "Network file (otherwise a network is generated)");
  val->add_option("--schedule", val_schedule, "Schedule file")->required();
  val->add_option("--format", val_format, "text or json")->capture_default_str();
  val->add_option("--out", val_out, "Output file (default stdout)");

  // sweep
  GenOptions sweep_gen;
  std::string preset, axis = "SquareSide", mode = "Both", sweep_format = "csv", sweep_out, plot_out;
  std::vector<double> values;
  std::vector<std::string> criteria;
  std::optional<std::size_t> instances;
  std::size_t jobs = default_jobs();
  bool quiet = false;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment sweep and aggregate statistics");
  add_gen_options(sweep, sweep_gen);
  sweep->add_option("--preset", preset, "Sweep preset (JSON); other options override it");
  sweep->add_option("--axis", axis, "SquareSide or LinkCount")->capture_default_str();
  sweep->add_option("--values", values, "Axis values, strictly increasing (comma or space separated)")->delimiter(',');
  sweep->add_option("--criteria", criteria, "Criteria to run (default all)")->delimiter(',');
  sweep->add_option("--mode", mode, "Single, Multi or Both")->capture_default_str();
  sweep->add_option("--instances", instances, "Networks per axis value (default 100)");
  sweep->add_option("--jobs", jobs, "Worker threads (default $SINR_SCHED_JOBS or 1)")->capture_default_str();
  sweep->add_option("--format", sweep_format, "csv or json")->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output file (default stdout)");
  sweep->add_option("--plot", plot_out, "Also write a gnuplot script here (needs --out with csv format)");
  sweep->add_flag("--quiet", quiet, "No progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) {
      const Network net = generate(gen_opts.spec());
      Output out(gen_out);
      if (gen_format == "json")
        out.stream() << network_to_json(net).dump(2) << '\n';
      else if (gen_format == "net")
        write_network(out.stream(), net);
      else
        throw InvalidArgument("unknown format '" + gen_format + "'");
      return kExitOk;
    }

    if (*sched) {
      const Network net = input_network(sched_net, sched_opts);
      const Schedule s = schedule_single(net, criterion_from(sched_criterion));
      Output out(sched_out);
      if (sched_format == "json")
        out.stream() << schedule_to_json(s).dump(2) << '\n';
      else if (sched_format == "text")
        write_schedule(out.stream(), s);
      else
        throw InvalidArgument("unknown format '" + sched_format + "'");
      std::cerr << "links " << net.link_count() << ", T = " << s.slot_count << '\n';
      return kExitOk;
    }

    if (*multi) {
      const Network net = input_network(multi_net, multi_opts);
      const MulticolorResult r = schedule_multi(net, criterion_from(multi_criterion), multi_max_q);
      Output out(multi_out);
      if (multi_format == "json")
        out.stream() << multicolor_to_json(r).dump(2) << '\n';
      else if (multi_format == "text")
        write_schedule(out.stream(), r.schedule);
      else
        throw InvalidArgument("unknown format '" + multi_format + "'");
      std::cerr << "links " << net.link_count() << ", T = " << r.base_t << ", q = " << r.q
                << ", T' = " << r.schedule.slot_count << ", G = " << format_double(r.gain)
                << (r.capped ? " (multiplicity cap reached)" : "") << '\n';
      return kExitOk;
    }

    if (*val) {
      const Network net = input_network(val_net, val_opts);
      const Schedule s = load_schedule(val_schedule);
      const ValidationReport rep = validate_schedule(net, s);
      Output out(val_out);
      if (val_format == "json")
        out.stream() << report_to_json(rep).dump(2) << '\n';
      else if (val_format == "text")
        print_report(out.stream(), rep);
      else
        throw InvalidArgument("unknown format '" + val_format + "'");
      return rep.valid ? kExitOk : kExitInvalid;
    }

    if (*sweep) {
      SweepSpec spec;
      if (!preset.empty()) spec = load_sweep_spec(preset);
      auto given = [&](const char* name) { return sweep->count(name) > 0; };
      if (preset.empty()) {
        spec.generator = sweep_gen.spec();
      } else {
        const GenSpec cli = sweep_gen.spec();
        if (given("--kind")) spec.generator.kind = cli.kind;
        if (given("--n")) spec.generator.n = cli.n;
        if (given("--side")) spec.generator.side_m = cli.side_m;
        if (given("--power") || given("--noise") || given("--alpha") || given("--beta-db"))
          spec.generator.params = cli.params;
      }
      if (preset.empty() || given("--axis")) {
        if (axis == "SquareSide")
          spec.axis = SweepAxis::SquareSide;
        else if (axis == "LinkCount")
          spec.axis = SweepAxis::LinkCount;
        else
          throw InvalidArgument("unknown axis '" + axis + "'");
      }
      if (given("--values")) spec.axis_values = values;
      if (given("--criteria")) {
        spec.criteria.clear();
        for (const std::string& c : criteria) spec.criteria.push_back(criterion_from(c));
      }
      if (preset.empty() || given("--mode")) {
        if (mode == "Single")
          spec.mode = SweepMode::Single;
        else if (mode == "Multi")
          spec.mode = SweepMode::Multi;
        else if (mode == "Both")
          spec.mode = SweepMode::Both;
        else
          throw InvalidArgument("unknown mode '" + mode + "'");
      }
      if (instances) spec.instances = *instances;
      if (preset.empty() || given("--seed")) spec.base_seed = sweep_gen.seed;

      SweepProgress progress;
      if (!quiet)
        progress = [](double axis_value, std::size_t done, std::size_t total) {
          std::cerr << "\raxis " << format_double(axis_value) << ": " << done << '/' << total << std::flush;
          if (done == total) std::cerr << '\n';
        };
      const SweepResult result = run_sweep(spec, jobs, progress);
      if (sweep_format == "csv") {
        Output out(sweep_out);
        write_csv(out.stream(), result);
      } else if (sweep_format == "json") {
        Output out(sweep_out);
        out.stream() << sweep_to_json(result).dump(2) << '\n';
      } else {
        throw InvalidArgument("unknown format '" + sweep_format + "'");
      }
      if (!plot_out.empty()) {
        if (sweep_out.empty() || sweep_out == "-" || sweep_format != "csv")
          throw InvalidArgument("--plot needs --out with --format csv");
        emit_plotscript(result, plot_out, sweep_out);
      }
      for (const PointReport& p : result.points)
        if (p.failed > 0)
          std::cerr << "axis " << format_double(p.axis) << ": " << p.failed << " failed instance(s); "
                    << p.errors.front() << '\n';
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
