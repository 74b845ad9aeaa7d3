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

#include "isingctl/plan.hpp"

#include "isingctl/control.hpp"
#include "isingctl/states.hpp"
#include "isingctl/sweep.hpp"

#include <ostream>

namespace isingctl {

namespace {

void line(std::ostream& out, const char* key, double value) {
  out << key << " = " << format_value(value) << '\n';
}

}  // namespace

void run_plan(const PlanRequest& rq, std::ostream& out) {
  StatePair pair = initial_pair(rq.theta);
  if (rq.situation == 1) {
    IsingParams p = make_params(rq.b_plus, rq.j);
    Situation1Plan plan = (rq.n || rq.m) ? plan_situation1(rq.t, p, rq.n.value_or(1), rq.m.value_or(0))
                                         : plan_situation1_nearest(rq.t, p);
    out << "situation 1\n";
    line(out, "t", rq.t);
    line(out, "n", plan.n);
    line(out, "m", plan.m);
    line(out, "T", plan.T);
    line(out, "delta_b_plus", plan.delta_b_plus);
    line(out, "delta", plan.delta);
    line(out, "fidelity_beta1", fidelity_overlap(apply_situation1(plan, p, pair.beta1), pair.beta1));
    line(out, "fidelity_beta2", fidelity_overlap(apply_situation1(plan, p, pair.beta2), pair.beta2));
    return;
  }
  if (rq.situation != 2) throw PlanError("situation must be 1 or 2");
  PhysicalFields f{rq.B1, rq.B2, rq.J};
  Situation2Plan plan = (rq.n || rq.m)
                            ? plan_situation2(rq.t, f, rq.T, rq.n.value_or(0), rq.m.value_or(0))
                            : plan_situation2_nearest(rq.t, f, rq.T);
  out << "situation 2\n";
  line(out, "t", rq.t);
  line(out, "n", plan.n);
  line(out, "m", plan.m);
  line(out, "T", plan.T);
  line(out, "B_plus_prime", plan.Bp_prime);
  line(out, "B_minus_prime", plan.Bm_prime);
  line(out, "r", plan.r);
  line(out, "r_prime", plan.r_prime);
  line(out, "Delta", plan.Delta);
  line(out, "f", plan.f_value);
  line(out, "fidelity_beta1", fidelity_overlap(apply_situation2(plan, f, rq.t, pair.beta1), pair.beta1));
  line(out, "fidelity_beta2", fidelity_overlap(apply_situation2(plan, f, rq.t, pair.beta2), pair.beta2));
}

}  // namespace isingctl
