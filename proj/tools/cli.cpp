// Copyright 2026 The isingctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include "isingctl/plan.hpp"
#include "isingctl/sweep.hpp"
#include "isingctl/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace isingctl {

namespace {

struct SweepFlags {
  std::string scheme;
  std::string axis1;
  std::string axis2;
  std::vector<std::string> fix;
  std::string mode;
  std::string out;
  std::string config;
  int threads = 0;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--scheme", f.scheme, "dr1|n|ab|so|dr2|n-mix|f1|f2|witness|schmidt|f-curve");
  cmd->add_option("--axis1", f.axis1, "name:min:max:steps");
  cmd->add_option("--axis2", f.axis2, "name:min:max:steps");
  cmd->add_option("--fix", f.fix, "name=value, repeatable");
  cmd->add_option("--mode", f.mode, "as-printed|reprepare-originals");
  cmd->add_option("--out", f.out, "output path, default stdout");
  cmd->add_option("--threads", f.threads, "worker threads");
  cmd->add_option("--config", f.config, "key=value file; flags take precedence");
}

// Config keys scheme, axis1, axis2, mode, threads and out are settings;
// every other key is a fixed parameter.
SweepFlags read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  SweepFlags f;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "scheme") f.scheme = value;
    else if (key == "axis1") f.axis1 = value;
    else if (key == "axis2") f.axis2 = value;
    else if (key == "mode") f.mode = value;
    else if (key == "out") f.out = value;
    else if (key == "threads") f.threads = static_cast<int>(parse_scalar(value));
    else f.fix.push_back(key + "=" + value);
  }
  return f;
}

void apply(const SweepFlags& f, Preset& p, bool& mode_given) {
  if (!f.scheme.empty()) p.spec.scheme = f.scheme;
  if (!f.axis1.empty()) p.spec.axis1 = parse_axis(f.axis1);
  if (!f.axis2.empty()) p.spec.axis2 = parse_axis(f.axis2);
  for (const auto& a : f.fix) {
    auto [name, value] = parse_assignment(a);
    p.spec.fixed[name] = value;
  }
  if (!f.mode.empty()) {
    try {
      p.spec.mode = objective_mode_from_string(f.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    mode_given = true;
  }
  if (f.threads != 0) p.spec.threads = f.threads;
}

int run_sweep_command(const std::optional<std::string>& preset_name, const SweepFlags& flags,
                      std::ostream& out, std::ostream& err) {
  Preset p;
  if (preset_name) {
    p = preset(*preset_name);
  }
  bool mode_given = false;
  std::string out_path;
  if (!flags.config.empty()) {
    SweepFlags cfg = read_config(flags.config);
    apply(cfg, p, mode_given);
    out_path = cfg.out;
  }
  apply(flags, p, mode_given);
  if (!flags.out.empty()) out_path = flags.out;
  if (mode_given) p.coverage_fallback = false;

  // Axes an override made redundant are dropped from the fixed set.
  p.spec.fixed.erase(p.spec.axis1.name);
  if (p.spec.axis2) p.spec.fixed.erase(p.spec.axis2->name);

  if (p.spec.scheme.empty()) throw UsageError("--scheme is required");
  if (p.spec.axis1.name.empty()) throw UsageError("--axis1 is required");
  if (preset_name) err << "preset " << *preset_name << ": " << p.description << '\n';

  SweepResult r = run_preset(p);
  for (const auto& note : r.notes) err << note << '\n';
  if (out_path.empty()) {
    out << r.csv;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << r.csv;
  }
  return r.failed_cells > 0 ? 3 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit Ising distortion, repreparation and discrimination fidelities"};
  app.require_subcommand(1);

  SweepFlags surface_flags;
  CLI::App* surface = app.add_subcommand("surface", "CSV fidelity surface of one scheme");
  add_sweep_flags(surface, surface_flags);

  std::map<std::string, SweepFlags> preset_flags;
  std::map<std::string, CLI::App*> preset_cmds;
  for (const auto& name : preset_names()) {
    preset_cmds[name] = app.add_subcommand(name, "figure preset: " + preset(name).description);
    add_sweep_flags(preset_cmds[name], preset_flags[name]);
  }

  std::string level = "fast";
  CLI::App* verify = app.add_subcommand("verify", "oracle-equivalence self checks");
  verify->add_option("level", level, "fast|full")->check(CLI::IsMember({"fast", "full"}));

  int situation = 1;
  std::map<std::string, std::string> plan_values;
  std::optional<int> plan_n;
  std::optional<int> plan_m;
  CLI::App* plan = app.add_subcommand("plan", "repreparation plan for situation 1 or 2");
  plan->add_option("--situation", situation, "1 (global field) or 2 (local fields)")
      ->check(CLI::IsMember({1, 2}));
  for (const char* key : {"theta", "t", "b_plus", "j", "B1", "B2", "J", "T"}) {
    plan->add_option(std::string("--") + key, plan_values[key]);
  }
  plan->add_option("--n", plan_n);
  plan->add_option("--m", plan_m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (surface->parsed()) return run_sweep_command(std::nullopt, surface_flags, out, err);
    for (const auto& [name, cmd] : preset_cmds) {
      if (cmd->parsed()) return run_sweep_command(name, preset_flags[name], out, err);
    }
    if (verify->parsed()) {
      VerifyReport report = run_verify(verify_level_from_string(level));
      print(report, out);
      return report.passed() ? 0 : 1;
    }
    if (plan->parsed()) {
      PlanRequest rq;
      rq.situation = situation;
      std::map<std::string, double*> slots{{"theta", &rq.theta}, {"t", &rq.t},
                                           {"b_plus", &rq.b_plus}, {"j", &rq.j},
                                           {"B1", &rq.B1},        {"B2", &rq.B2},
                                           {"J", &rq.J},          {"T", &rq.T}};
      for (const auto& [key, text] : plan_values) {
        if (!text.empty()) *slots.at(key) = parse_scalar(text);
      }
      rq.n = plan_n;
      rq.m = plan_m;
      run_plan(rq, out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    // UsageError, PlanError and parameter validation all land here.
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace isingctl
