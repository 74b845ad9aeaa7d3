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

#ifndef ISINGCTL_PLAN_HPP
#define ISINGCTL_PLAN_HPP

// Textual repreparation plans.

#include <iosfwd>
#include <optional>

namespace isingctl {

/// Situation 1 works in rescaled units (b_plus, j, t); Situation 2 in
/// physical units (B1, B2, J, t, T). Missing n/m select the nearest plan.
struct PlanRequest {
  int situation = 1;
  double theta = 0.7853981633974483;
  double t = 0.0;
  double b_plus = 0.0;
  double j = 0.25;
  double B1 = 0.0;
  double B2 = 0.0;
  double J = 0.25;
  double T = 1.0;
  std::optional<int> n;
  std::optional<int> m;
};

/// Prints the plan with its residuals and the fidelities of both Bell-type
/// states after distortion plus correction. Planner errors propagate.
void run_plan(const PlanRequest& request, std::ostream& out);

}  // namespace isingctl

#endif  // ISINGCTL_PLAN_HPP
