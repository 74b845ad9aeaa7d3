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

#ifndef ISINGCTL_ISING_EVOLUTION_HPP
#define ISINGCTL_ISING_EVOLUTION_HPP

// Two qubits coupled by H = -J sigma_1 . sigma_2 + B1 sigma_1z + B2 sigma_2z.
//
// Library dynamics run in normalized units: with B+ = B1 + B2,
// B- = B1 - B2 and R = sqrt(B-^2 + 4 J^2), the dimensionless parameters are
// b+ = B+/R, b- = B-/R, j = J/R and time is rescaled as t' = R t. Only
// b-^2 + 4 j^2 = 1 is enforced; b+ is unbounded.

#include "isingctl/qalg.hpp"

#include <stdexcept>

namespace isingctl {

struct PhysicalFields {
  double B1 = 0.0;
  double B2 = 0.0;
  double J = 0.0;

  double b_sum() const { return B1 + B2; }
  double b_diff() const { return B1 - B2; }
  /// R = sqrt((B1 - B2)^2 + 4 J^2).
  double scale() const;
};

/// Normalized couple (b+, b-, j) plus the energy scale R. A physical time t
/// corresponds to the rescaled time R t.
struct IsingParams {
  double b_plus = 0.0;
  double b_minus = 0.0;
  double j = 0.5;
  double R = 1.0;

  double rescaled_time(double physical_time) const { return R * physical_time; }
  PhysicalFields physical() const;
};

class DegenerateScaleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Normalized parameters with b- = sign * sqrt(1 - 4 j^2).
IsingParams make_params(double b_plus, double j, double b_minus_sign = 1.0,
                        double R = 1.0);

/// Throws std::invalid_argument if b-^2 + 4 j^2 != 1 (to 1e-12) or j is out
/// of [0, 1/2].
void validate(const IsingParams& p);

/// Throws DegenerateScaleError when B1 == B2 and J == 0.
IsingParams normalize_fields(const PhysicalFields& f);

Matrix4 hamiltonian(const PhysicalFields& f);

/// H / R, whose exponential exp(-i t' H/R) is evolution_closed_form(p, t').
Matrix4 normalized_hamiltonian(const IsingParams& p);

/// Entry-wise closed-form propagator at rescaled time t (any sign).
Matrix4 evolution_closed_form(const IsingParams& p, double t);

/// exp(-i H t) by spectral decomposition of hamiltonian(f); t is physical.
/// Works for R = 0.
Matrix4 evolution_oracle(const PhysicalFields& f, double t);

/// Propagator at physical time t. Uses the closed form when R > 0 and the
/// diagonal Zeeman propagator when R == 0.
Matrix4 evolve_physical(const PhysicalFields& f, double t);

}  // namespace isingctl

#endif  // ISINGCTL_ISING_EVOLUTION_HPP
