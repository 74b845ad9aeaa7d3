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

#ifndef ISINGCTL_DISCRIMINATION_HPP
#define ISINGCTL_DISCRIMINATION_HPP

// Measure-and-reprepare schemes. A separable product-basis measurement
// decides which of the two states was prepared; the observer then
// reprepares the corresponding state.

#include "isingctl/qalg.hpp"

#include <array>
#include <string>

namespace isingctl {

/// Local measurement bases
///   |delta_k>   = cos(theta_k/2)|0> + e^{i alpha_k} sin(theta_k/2)|1>
///   |epsilon_k> = sin(theta_k/2)|0> - e^{i alpha_k} cos(theta_k/2)|1>
/// Outcomes delta1delta2 and epsilon1epsilon2 vote for beta1, the mixed
/// outcomes delta1epsilon2 and epsilon1delta2 vote for beta2.
struct LocalPovm {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;

  auto operator<=>(const LocalPovm&) const = default;
};

/// (delta1 delta2, epsilon1 epsilon2, delta1 epsilon2, epsilon1 delta2).
std::array<TwoQubitState, 4> povm_states(const LocalPovm& povm);

struct HelstromProbabilities {
  double p_h1 = 0.0;
  double p_h2 = 0.0;
};

/// Success probabilities as expectation values <v|rho|v> summed over the
/// outcomes voting for each state.
HelstromProbabilities helstrom(const DensityMatrix4& rho1_distorted,
                               const DensityMatrix4& rho2_distorted,
                               const LocalPovm& povm);

struct SchemeResult {
  double p_h1 = 0.0;
  double p_h2 = 0.0;
  double avg_fidelity = 0.0;
};

struct PurePair {
  TwoQubitState first;
  TwoQubitState second;
};

struct MixedPair {
  DensityMatrix4 first;
  DensityMatrix4 second;
};

/// F = 1/2 (P1 F(b1, b1'') + (1 - P1) F(b1, b2''))
///   + 1/2 (P2 F(b2, b2'') + (1 - P2) F(b2, b1''))
/// with F the squared overlap.
SchemeResult average_fidelity(const PurePair& originals,
                              const PurePair& distorted,
                              const PurePair& reprepared,
                              const LocalPovm& povm);

/// Mixed form: F(rho, sigma) = Tr(rho sigma).
SchemeResult average_fidelity(const MixedPair& originals,
                              const MixedPair& distorted,
                              const MixedPair& reprepared,
                              const LocalPovm& povm);

/// What the observer reprepares after a vote.
///   as_printed: the distorted states themselves (overlaps with the primed
///     states, as the F_DR2 objective is written);
///   reprepare_originals: the undistorted originals.
enum class ObjectiveMode { as_printed, reprepare_originals };

const char* to_string(ObjectiveMode mode);
ObjectiveMode objective_mode_from_string(const std::string& name);

/// Average fidelity on the pure pair at (theta, b+, j, t) with b- > 0.
SchemeResult scheme_fidelity(double theta, double b_plus, double j, double t,
                             const LocalPovm& povm, ObjectiveMode mode);

/// (1 + sin^2 theta) / 2: computational measurement, original repreparation.
double f_dr1(double theta);

/// Do-nothing scheme, closed form.
double f_n(double theta, double b_plus, double j, double t);

/// Do-nothing scheme via the propagator: (|<b1|b1'>|^2 + |<b2|b2'>|^2) / 2.
double f_n_pipeline(double theta, double b_plus, double j, double t);

enum class Table1Variant { A, B };

/// Zero-field optimal measurements:
///   A: theta_k = (pi - 2 theta)/2, alpha_k = 0
///   B: theta_k = (pi + 2 theta)/2, alpha_k = pi  (the minus signs of the
///      delta states are carried by the phase).
LocalPovm table1_povm(double theta, Table1Variant variant);

LocalPovm computational_povm();

/// Table I measurement, original-state repreparation, evaluated through the
/// full pipeline. Variants A and B give identical values.
double f_ab(double theta, double b_plus, double j, double t);

/// The printed closed form for F_AB. Its cos^2 sin^2 factor has no argument;
/// this reading uses cos^2 theta sin^2 theta. Kept for comparison only: it
/// does not reproduce the pipeline (e.g. it is not 1 at theta = pi/2).
double f_ab_printed(double theta, double b_plus, double j, double t);

/// max(F_DR1, F_AB).
double f_so(double theta, double b_plus, double j, double t);

/// {0, (1 - sin)/2, (1 - sin^2)/2, 1/2, (1 + sin^2)/2, (1 + sin)/2, 1},
/// ascending.
std::array<double, 7> critical_fidelities(double theta);

}  // namespace isingctl

#endif  // ISINGCTL_DISCRIMINATION_HPP
