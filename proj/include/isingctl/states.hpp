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

#ifndef ISINGCTL_STATES_HPP
#define ISINGCTL_STATES_HPP

#include "isingctl/qalg.hpp"

#include <utility>

namespace isingctl {

/// Bell state beta_ij = (|0,j> + (-1)^i |1,1-j>) / sqrt(2).
TwoQubitState bell(int i, int j);

/// The pair to be discriminated:
///   beta1 = beta_00
///   beta2 = sin(theta) beta_01 - cos(theta) beta_10
/// theta in [0, pi/2]. The two are orthogonal for every theta, so their trace
/// distance is 1; their computational-basis statistics are sin^2(theta) apart.
struct StatePair {
  double theta = 0.0;
  TwoQubitState beta1;
  TwoQubitState beta2;
};

StatePair initial_pair(double theta);

/// beta1 assembled from the local bases
///   |phi> = cos(theta/2)|0> + sin(theta/2)|1>,
///   |eta> = sin(theta/2)|0> - cos(theta/2)|1>
/// as (|phi phi> + |eta eta>)/sqrt(2). Independent of theta.
TwoQubitState beta1_from_local_bases(double theta);

DensityMatrix4 density(const TwoQubitState& v);

/// Half the trace norm of the difference; in [0, 1].
double trace_distance(const DensityMatrix4& a, const DensityMatrix4& b);

/// Total-variation distance between the computational-basis outcome
/// distributions of a and b.
double computational_distance(const DensityMatrix4& a, const DensityMatrix4& b);

/// Schmidt coefficients (descending) from the reduced density matrix.
std::pair<double, double> schmidt(const TwoQubitState& state);

struct SchmidtResult {
  double lambda1 = 0.5;
  double lambda2 = 0.5;
  double A_term = 0.0;
  double B_term = 0.0;
  /// True when A + B sin^2(2 theta) left [0, 1] by more than rounding (1e-12)
  /// and had to be clamped.
  bool clamped = false;
};

class FormulaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form Schmidt coefficients of U(t) beta2 (rescaled t):
///   lambda = (1 +- sqrt(A + B sin^2 2theta)) / 2,
///   A = 16 j^2 (1 - 4 j^2) sin^4 t sin^4 theta,
///   B = sin^2 2jt + 4 j^2 sin^2 t cos 4jt - j sin 2t sin 4jt.
/// Throws FormulaViolation if the radicand leaves [-1e-9, 1 + 1e-9].
SchmidtResult schmidt_closed_form(double theta, double j, double t);

/// Tr((1 - 2 |beta_ij><beta_ij|) rho). Negative certifies entanglement.
double witness_value(const DensityMatrix4& rho, int i, int j);

}  // namespace isingctl

#endif  // ISINGCTL_STATES_HPP
