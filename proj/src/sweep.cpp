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

#include "isingctl/sweep.hpp"

#include "isingctl/control.hpp"
#include "isingctl/optimize.hpp"
#include "isingctl/states.hpp"
#include "isingctl/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;

double get(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
  return it->second;
}

int get_int(const std::map<std::string, double>& params, const std::string& key) {
  double v = get(params, key);
  if (std::round(v) != v || std::abs(v) > 1e9) {
    throw UsageError("parameter '" + key + "' must be an integer");
  }
  return static_cast<int>(v);
}

bool has(const std::map<std::string, double>& params, const std::string& key) {
  return params.count(key) != 0;
}

PhysicalFields unit_scale_fields(double b_plus, double j) {
  return make_params(b_plus, j).physical();
}

}  // namespace

double Axis::value(int i) const {
  if (i == steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / (steps - 1);
}

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names{"dr1", "n",  "ab",      "so",
                                              "dr2", "n-mix", "f1",   "f2",
                                              "witness", "schmidt", "f-curve"};
  return names;
}

SchemeParameters scheme_parameters(const std::string& scheme) {
  if (scheme == "dr1") return {{"theta"}, {}};
  if (scheme == "n" || scheme == "ab" || scheme == "so" || scheme == "dr2") {
    return {{"theta", "b_plus", "j", "t"}, {}};
  }
  if (scheme == "n-mix") return {{"theta", "b_plus", "j", "t0", "s"}, {}};
  if (scheme == "f1") return {{"theta", "b_plus", "j", "t0", "s"}, {"n", "m"}};
  if (scheme == "f2") {
    return {{"theta", "b_plus", "j", "t0", "s"}, {"T", "n", "m"}};
  }
  if (scheme == "witness") {
    return {{"theta", "b_plus", "j", "t0", "s", "index"}, {}};
  }
  if (scheme == "schmidt") return {{"theta", "j", "t"}, {}};
  if (scheme == "f-curve") return {{"ratio", "t"}, {"J"}};
  throw UsageError("unknown scheme '" + scheme + "'");
}

void validate(const SweepSpec& spec) {
  SchemeParameters params = scheme_parameters(spec.scheme);
  std::set<std::string> known(params.required.begin(), params.required.end());
  known.insert(params.optional.begin(), params.optional.end());

  std::vector<const Axis*> axes{&spec.axis1};
  if (spec.axis2) axes.push_back(&*spec.axis2);
  std::set<std::string> given;
  for (const Axis* a : axes) {
    if (!known.count(a->name)) {
      throw UsageError("scheme '" + spec.scheme + "' has no parameter '" + a->name + "'");
    }
    if (a->steps < 2) throw UsageError("axis '" + a->name + "' needs steps >= 2");
    if (!std::isfinite(a->min) || !std::isfinite(a->max)) {
      throw UsageError("axis '" + a->name + "' has a non-finite bound");
    }
    if (!given.insert(a->name).second) {
      throw UsageError("axis name '" + a->name + "' used twice");
    }
  }
  for (const auto& [name, value] : spec.fixed) {
    if (!known.count(name)) {
      throw UsageError("scheme '" + spec.scheme + "' has no parameter '" + name + "'");
    }
    if (given.count(name)) {
      throw UsageError("parameter '" + name + "' is both an axis and fixed");
    }
    given.insert(name);
  }
  for (const std::string& name : params.required) {
    if (!given.count(name)) {
      throw UsageError("scheme '" + spec.scheme + "' needs parameter '" + name + "'");
    }
  }
  if (spec.threads < 1) throw UsageError("--threads must be >= 1");
}

double evaluate_scheme(const std::string& scheme,
                       const std::map<std::string, double>& params,
                       ObjectiveMode mode) {
  if (scheme == "dr1") return f_dr1(get(params, "theta"));
  if (scheme == "f-curve") {
    const double J = has(params, "J") ? get(params, "J") : 1.0;
    const double b_minus = 2 * J * get(params, "ratio");
    return situation2_f({0.5 * b_minus, -0.5 * b_minus, J}, get(params, "t"));
  }
  if (scheme == "schmidt") {
    return schmidt_closed_form(get(params, "theta"), get(params, "j"), get(params, "t")).lambda1;
  }

  const double theta = get(params, "theta");
  const double b_plus = get(params, "b_plus");
  const double j = get(params, "j");
  if (scheme == "n") return f_n(theta, b_plus, j, get(params, "t"));
  if (scheme == "ab") return f_ab(theta, b_plus, j, get(params, "t"));
  if (scheme == "so") return f_so(theta, b_plus, j, get(params, "t"));
  if (scheme == "dr2") {
    OptimizerSettings settings;
    settings.objective_mode = mode;
    return optimize_fdr2(theta, b_plus, j, get(params, "t"), settings).value;
  }

  const double t0 = get(params, "t0");
  const double s = get(params, "s");
  if (scheme == "n-mix") return f_n_mix(theta, b_plus, j, t0, s).value;
  if (scheme == "witness") {
    const int index = get_int(params, "index");
    if (index < 0 || index > 7) throw UsageError("witness index must be in 0..7");
    WitnessTable w = witness_table(theta, make_params(b_plus, j), {t0, s});
    return index < 4 ? w.rho1[index] : w.rho2[index - 4];
  }
  if (scheme == "f1") {
    IsingParams p = make_params(b_plus, j);
    Situation1Plan plan = (has(params, "n") || has(params, "m"))
                              ? plan_situation1(t0, p, get_int(params, "n"), get_int(params, "m"))
                              : plan_situation1_nearest(t0, p);
    return f1(theta, p, t0, s, plan.n, plan.m).value;
  }
  if (scheme == "f2") {
    PhysicalFields fields = unit_scale_fields(b_plus, j);
    const double T = has(params, "T") ? get(params, "T") : 1.0;
    Situation2Plan plan = (has(params, "n") || has(params, "m"))
                              ? plan_situation2(t0, fields, T, get_int(params, "n"), get_int(params, "m"))
                              : plan_situation2_nearest(t0, fields, T);
    return f2(theta, fields, t0, s, T, plan.n, plan.m).value;
  }
  throw UsageError("unknown scheme '" + scheme + "'");
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate(spec);
  const int n1 = spec.axis1.steps;
  const int n2 = spec.axis2 ? spec.axis2->steps : 1;
  const std::size_t cells = static_cast<std::size_t>(n1) * n2;

  SweepResult result;
  result.values.assign(cells, 0.0);
  // Usage problems surface before any worker starts.
  std::vector<std::string> errors(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells; c = next++) {
      std::map<std::string, double> params = spec.fixed;
      params[spec.axis1.name] = spec.axis1.value(static_cast<int>(c / n2));
      if (spec.axis2) params[spec.axis2->name] = spec.axis2->value(static_cast<int>(c % n2));
      try {
        double v = evaluate_scheme(spec.scheme, params, spec.mode);
        if (!std::isfinite(v)) throw std::domain_error("non-finite value");
        result.values[c] = v;
      } catch (const UsageError& e) {
        errors[c] = std::string("usage: ") + e.what();
        result.values[c] = std::nan("");
      } catch (const std::exception& e) {
        errors[c] = e.what();
        result.values[c] = std::nan("");
      }
    }
  };
  const int threads = std::min<std::size_t>(spec.threads, cells);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t c = 0; c < cells; ++c) {
    if (errors[c].rfind("usage: ", 0) == 0) throw UsageError(errors[c].substr(7));
  }

  std::ostringstream csv;
  csv << spec.axis1.name;
  if (spec.axis2) csv << ',' << spec.axis2->name;
  csv << ",value\n";
  for (std::size_t c = 0; c < cells; ++c) {
    csv << format_value(spec.axis1.value(static_cast<int>(c / n2)));
    if (spec.axis2) csv << ',' << format_value(spec.axis2->value(static_cast<int>(c % n2)));
    csv << ',' << format_value(result.values[c]) << '\n';
    if (!errors[c].empty()) {
      if (result.failed_cells < 5) {
        result.notes.push_back("cell " + std::to_string(c) + " failed: " + errors[c]);
      }
      ++result.failed_cells;
    }
  }
  if (result.failed_cells > 0) {
    result.notes.push_back(std::to_string(result.failed_cells) + " of " +
                           std::to_string(cells) + " cells failed");
  }
  result.csv = csv.str();
  return result;
}

double parse_scalar(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  auto bad = [&] { return UsageError("cannot parse number '" + raw + "'"); };
  if (text.empty()) throw bad();

  double denominator = 1.0;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    text = text.substr(0, slash);
    std::size_t used = 0;
    try {
      denominator = std::stod(den, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != den.size() || denominator == 0.0) throw bad();
  }

  double numerator = 1.0;
  if (auto pi = text.find("pi"); pi != std::string::npos) {
    if (pi + 2 != text.size()) throw bad();
    std::string coef = text.substr(0, pi);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    if (coef.empty() || coef == "+") {
      numerator = kPi;
    } else if (coef == "-") {
      numerator = -kPi;
    } else {
      std::size_t used = 0;
      try {
        numerator = std::stod(coef, &used) * kPi;
      } catch (const std::exception&) {
        throw bad();
      }
      if (used != coef.size()) throw bad();
    }
  } else {
    std::size_t used = 0;
    try {
      numerator = std::stod(text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != text.size()) throw bad();
  }
  double v = numerator / denominator;
  if (!std::isfinite(v)) throw bad();
  return v;
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4 || parts[0].empty()) {
    throw UsageError("axis must be name:min:max:steps, got '" + text + "'");
  }
  Axis a;
  a.name = parts[0];
  a.min = parse_scalar(parts[1]);
  a.max = parse_scalar(parts[2]);
  double steps = parse_scalar(parts[3]);
  if (std::round(steps) != steps || steps < 2 || steps > 1e7) {
    throw UsageError("axis steps must be an integer >= 2, got '" + parts[3] + "'");
  }
  a.steps = static_cast<int>(steps);
  return a;
}

std::pair<std::string, double> parse_assignment(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("expected name=value, got '" + text + "'");
  }
  return {text.substr(0, eq), parse_scalar(text.substr(eq + 1))};
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"figure3", "figure4", "figure5a",
                                              "figure5b", "figure5c"};
  return names;
}

Preset preset(const std::string& name) {
  Preset p;
  SweepSpec& s = p.spec;
  if (name == "figure3" || name == "figure4") {
    s.scheme = name == "figure3" ? "so" : "dr2";
    s.axis1 = {"theta", 0.0, kPi / 2, 25};
    s.axis2 = Axis{"b_plus", 0.0, 5.0, 25};
    s.fixed = {{"j", 1.0 / 6}, {"t", kPi / 2}};
    p.coverage_fallback = name == "figure4";
    p.description = name == "figure3"
                        ? "scheme=so theta:0:pi/2:25 b_plus:0:5:25 j=1/6 t=pi/2"
                        : "scheme=dr2 theta:0:pi/2:25 b_plus:0:5:25 j=1/6 t=pi/2, "
                          "mode as-printed with coverage fallback";
    return p;
  }
  const std::map<std::string, double> t0s{
      {"figure5a", kPi / 2}, {"figure5b", 3 * kPi / 4}, {"figure5c", 7 * kPi / 4}};
  auto it = t0s.find(name);
  if (it == t0s.end()) throw UsageError("unknown preset '" + name + "'");
  const double t0 = it->second;
  s.scheme = "n-mix";
  s.axis1 = {"theta", 0.0, kPi / 2, 21};
  s.axis2 = Axis{"s", 0.0, t0 / 3, 51};
  s.fixed = {{"j", 1.0 / 6}, {"b_plus", 1.0}, {"t0", t0}};
  p.description = "scheme=n-mix theta:0:pi/2:21 s:0:t0/3:51 j=1/6 b_plus=1 t0=" +
                  format_value(t0);
  return p;
}

double coverage(const std::vector<double>& values, double threshold) {
  std::size_t finite = 0;
  std::size_t above = 0;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    ++finite;
    if (v > threshold) ++above;
  }
  return finite == 0 ? 0.0 : static_cast<double>(above) / finite;
}

SweepResult run_preset(const Preset& p) {
  SweepResult first = run_sweep(p.spec);
  if (!p.coverage_fallback) return first;
  const double c1 = coverage(first.values, 0.8);
  std::string head = std::string("mode ") + to_string(p.spec.mode) +
                     ": coverage(F > 0.8) = " + format_value(c1);
  if (c1 >= 0.70 && c1 <= 0.90) {
    first.notes.push_back(head + ", within [0.70, 0.90]; kept");
    return first;
  }
  SweepSpec alt = p.spec;
  alt.mode = p.spec.mode == ObjectiveMode::as_printed ? ObjectiveMode::reprepare_originals
                                                       : ObjectiveMode::as_printed;
  SweepResult second = run_sweep(alt);
  const double c2 = coverage(second.values, 0.8);
  second.notes.insert(second.notes.begin(),
                      head + ", outside [0.70, 0.90]; fell back to mode " +
                          to_string(alt.mode) + ": coverage = " + format_value(c2));
  return second;
}

}  // namespace isingctl
