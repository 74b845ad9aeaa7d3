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

#ifndef ISINGCTL_CONTROL_HPP
#define ISINGCTL_CONTROL_HPP

// Repreparation protocols for a pair distorted by the Ising-plus-field
// evolution.
//
// Situation 1: the distorting field stays on. An extra homogeneous field
// delta_b+ is applied for a time T so that the total propagator is an
// evolution loop up to a residual phase on |11>.
//
// Situation 2: the qubits are separated after the distortion (J = 0) and
// only local fields B1', B2' are available for a time T.

#include "isingctl/ising_evolution.hpp"
#include "isingctl/qalg.hpp"

namespace isingctl {

class PlanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quasi evolution loop after a rescaled distortion time t:
///   T = n pi - t,
///   delta_b+ = pi (2m - n (b+ - 2j + 1)) / T,
///   Q(j) = s_num / (2n) with s_num = round(2 n j),  delta = j - Q(j).
/// The composite propagator is diag(1, 1, 1, exp(4 i n pi delta)) up to a
/// global phase.
struct Situation1Plan {
  int n = 1;
  int m = 0;
  long s_num = 0;
  double T = 0.0;
  double delta_b_plus = 0.0;
  double delta = 0.0;
  // What the plan was built for.
  double t = 0.0;
  IsingParams params;
};

Situation1Plan plan_situation1(double t, const IsingParams& p, int n, int m);

/// Smallest n with n pi > t and the m that puts delta_b+ closest to zero.
Situation1Plan plan_situation1_nearest(double t, const IsingParams& p);

/// U_{b+ + delta_b+}(T): the correction applied after the distortion.
Matrix4 situation1_correction(const Situation1Plan& plan, const IsingParams& p);

/// U_{b+ + delta_b+}(T) U_{b+}(t).
Matrix4 situation1_propagator(const Situation1Plan& plan, const IsingParams& p);

/// Distort-then-correct on an undistorted input.
TwoQubitState apply_situation1(const Situation1Plan& plan, const IsingParams& p,
                               const TwoQubitState& original);
DensityMatrix4 apply_situation1(const Situation1Plan& plan,
                                const IsingParams& p,
                                const DensityMatrix4& original);

/// Continuous branch of arctan(k tan x) through the tan singularities,
/// equal to arg(cos x + i k sin x) unwrapped from 0 at x = 0. Zero for k = 0.
double unwrapped_arctan(double k, double x);

/// Local-field repreparation after a physical distortion time t:
///   B+' T = n pi - B+ t
///   B-' T = (m + n) pi - (phi + phi') / 2
/// with phi = arctan((B- - 2J)/R tan Rt), phi' = arctan((B- + 2J)/R tan Rt)
/// on their continuous branches. The reconstructed beta2 is
///   e^{i Delta} sin(theta)/sqrt2 (r|01> + r'|10>) - cos(theta) beta_10,
///   r = sqrt(1 - 4 J B-/R^2 sin^2 Rt),  r' = sqrt(1 + 4 J B-/R^2 sin^2 Rt),
///   Delta = -(m pi + f/2),  f = phi - phi' + 4 J t.
struct Situation2Plan {
  double Bp_prime = 0.0;
  double Bm_prime = 0.0;
  double T = 0.0;
  double r = 1.0;
  double r_prime = 1.0;
  double Delta = 0.0;
  double phi = 0.0;
  double phi_prime = 0.0;
  double f_value = 0.0;
  int m = 0;
  int n = 0;
  // What the plan was built for.
  double t = 0.0;
  PhysicalFields fields;

  PhysicalFields local_fields() const {
    return {0.5 * (Bp_prime + Bm_prime), 0.5 * (Bp_prime - Bm_prime), 0.0};
  }
};

/// f(B- t, 2 J t) = phi - phi' + 4 J t. Perfect beta2 reconstruction needs
/// r = r' = 1 and f = 2 m pi.
double situation2_f(const PhysicalFields& f, double t);

Situation2Plan plan_situation2(double t, const PhysicalFields& f, double T,
                               int n, int m);

/// n minimizing |B+'|, then m of the parity that makes cos(Delta) largest and
/// |B-'| smallest within that parity.
Situation2Plan plan_situation2_nearest(double t, const PhysicalFields& f,
                                       double T);

Matrix4 situation2_correction(const Situation2Plan& plan);
Matrix4 situation2_propagator(const Situation2Plan& plan,
                              const PhysicalFields& f);

TwoQubitState apply_situation2(const Situation2Plan& plan,
                               const PhysicalFields& f, double t,
                               const TwoQubitState& original);
DensityMatrix4 apply_situation2(const Situation2Plan& plan,
                                const PhysicalFields& f, double t,
                                const DensityMatrix4& original);

/// The reconstructed beta2 predicted by the plan's (r, r', Delta).
TwoQubitState situation2_predicted_beta2(const Situation2Plan& plan,
                                         double theta);

/// |<a|b>|^2.
double fidelity_overlap(const TwoQubitState& a, const TwoQubitState& b);

}  // namespace isingctl

#endif  // ISINGCTL_CONTROL_HPP
