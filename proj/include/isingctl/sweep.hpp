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

#ifndef ISINGCTL_SWEEP_HPP
#define ISINGCTL_SWEEP_HPP

// Parameter sweeps over one or two named axes, serialized as CSV.

#include "isingctl/discrimination.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isingctl {

/// Bad scheme, parameter or flag. Maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 2;

  /// Endpoint-inclusive grid value.
  double value(int i) const;
};

struct SweepSpec {
  std::string scheme;
  Axis axis1;
  std::optional<Axis> axis2;
  std::map<std::string, double> fixed;
  ObjectiveMode mode = ObjectiveMode::as_printed;
  int threads = 1;
};

struct SweepResult {
  std::string csv;
  std::vector<double> values;  // row-major, axis2 fastest
  std::size_t failed_cells = 0;
  /// Metadata for stderr, never part of the CSV.
  std::vector<std::string> notes;
};

/// Schemes: dr1, n, ab, so, dr2, n-mix, f1, f2, witness, schmidt, f-curve.
const std::vector<std::string>& scheme_names();

/// Parameters a scheme accepts, required ones first.
struct SchemeParameters {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

SchemeParameters scheme_parameters(const std::string& scheme);

/// Throws UsageError on an unknown scheme, an unknown or missing parameter,
/// overlapping axis names or steps < 2.
void validate(const SweepSpec& spec);

/// Value of the scheme at one point. Throws UsageError for bad parameters;
/// anything else signals a numeric failure of that cell.
double evaluate_scheme(const std::string& scheme,
                       const std::map<std::string, double>& params,
                       ObjectiveMode mode);

SweepResult run_sweep(const SweepSpec& spec);

/// Accepts plain numbers and multiples of pi: "0.5", "pi", "pi/2", "3pi/4",
/// "-2*pi", "1/6".
double parse_scalar(const std::string& text);

/// name:min:max:steps
Axis parse_axis(const std::string& text);

/// name=value
std::pair<std::string, double> parse_assignment(const std::string& text);

std::string format_value(double v);

/// Figure presets. figure4 additionally carries `coverage_fallback`.
struct Preset {
  SweepSpec spec;
  bool coverage_fallback = false;
  std::string description;
};

const std::vector<std::string>& preset_names();
Preset preset(const std::string& name);

/// Fraction of finite cells with value > threshold.
double coverage(const std::vector<double>& values, double threshold);

/// Runs a preset. With coverage_fallback, a figure4 sweep whose F > 0.8
/// coverage falls outside [0.70, 0.90] is rerun in the other objective mode;
/// both coverages and the mode used land in `notes`.
SweepResult run_preset(const Preset& p);

}  // namespace isingctl

#endif  // ISINGCTL_SWEEP_HPP
