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

#ifndef ISINGCTL_OPTIMIZE_HPP
#define ISINGCTL_OPTIMIZE_HPP

// Maximization of the average fidelity over the four-angle local measurement
// family (F_DR2). Derivative free: a coarse multi-start grid followed by
// coordinate search with a halving step.

#include "isingctl/discrimination.hpp"

#include <array>
#include <functional>
#include <vector>

namespace isingctl {

struct OptimizerSettings {
  int grid_per_axis = 8;
  double refine_tolerance = 1e-8;
  int max_refine_steps = 20000;
  /// Best grid seeds passed to local refinement, in addition to the analytic
  /// seeds (computational and both Table I measurements).
  int refine_top = 12;
  ObjectiveMode objective_mode = ObjectiveMode::as_printed;
};

/// Average fidelity of one pure (theta, b+, j, t) configuration as a function
/// of the measurement alone. Overlaps that do not depend on the measurement
/// are computed once.
class FidelityObjective {
 public:
  FidelityObjective(double theta, double b_plus, double j, double t,
                    ObjectiveMode mode);

  double operator()(const LocalPovm& povm) const;

 private:
  TwoQubitState distorted1_;
  TwoQubitState distorted2_;
  double f11_, f12_, f22_, f21_;
};

struct RefineResult {
  LocalPovm povm;
  double value = 0.0;
  bool converged = false;
  int steps = 0;
  /// Objective after every step; nondecreasing.
  std::vector<double> history;
};

using PovmObjective = std::function<double(const LocalPovm&)>;

/// Coordinate search from `start` with initial step `initial_step`, halving
/// whenever no coordinate move improves, until the step drops below
/// settings.refine_tolerance or settings.max_refine_steps is hit.
RefineResult local_refine(const PovmObjective& objective, const LocalPovm& start,
                          double initial_step, const OptimizerSettings& settings);

/// Folds angles into theta_k in [0, pi], alpha_k in [0, 2 pi) without
/// changing the measurement.
LocalPovm canonical(const LocalPovm& povm);

struct OptimizeResult {
  LocalPovm povm;
  double value = 0.0;
  /// False when any refined seed stopped on max_refine_steps.
  bool converged = true;
  int seeds_refined = 0;
};

/// F_DR2 and the measurement attaining it. The result is never below the
/// objective at any grid seed or at the analytic seeds.
OptimizeResult optimize_fdr2(double theta, double b_plus, double j, double t,
                             const OptimizerSettings& settings = {});

/// Same driver over an arbitrary objective.
OptimizeResult optimize_povm(const PovmObjective& objective, double theta,
                             const OptimizerSettings& settings = {});

/// Without field the average fidelity equals 1/2 + value/4 where value is
///   cos a1 sin t1 (cos t2 sin 2th + 2 cos a2 cos^2 th sin t2)
///   + cos t1 (2 cos t2 sin^2 th + cos a2 sin 2th sin t2)
///   - 2 sin a1 sin a2 sin t1 sin t2.
/// The last term is zero whenever a1 or a2 is a multiple of pi.
double zero_field_objective(double theta, const LocalPovm& povm);

/// Gradient of zero_field_objective in (theta1, theta2, alpha1, alpha2).
std::array<double, 4> zero_field_gradient(double theta, const LocalPovm& povm);

/// Average fidelities at the stationary points of the zero-field objective,
/// found by Newton iteration from a seeds_per_axis^4 grid. Sorted, with
/// values closer than 1e-7 merged.
std::vector<double> zero_field_stationary_fidelities(double theta,
                                                     int seeds_per_axis = 6);

}  // namespace isingctl

#endif  // ISINGCTL_OPTIMIZE_HPP
