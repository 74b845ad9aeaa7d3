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

#ifndef ISINGCTL_STOCHASTIC_HPP
#define ISINGCTL_STOCHASTIC_HPP

// Distortion whose duration is normally distributed around t0 with spread s:
//   rho' = integral over t of N(t; t0, s) U(t) rho U(t)^dagger.
// The integral runs over the whole real line, which is a good model only for
// t0/s >> 1.

#include "isingctl/control.hpp"
#include "isingctl/ising_evolution.hpp"
#include "isingctl/qalg.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace isingctl {

/// Mean t0 >= 0 and spread s >= 0 of the distortion time.
struct GaussianTime {
  double t0 = 0.0;
  double s = 0.0;

  /// t0 / s when s > 0.
  std::optional<double> ratio() const;
  /// Set when t0/s < 3, outside the range where the Gaussian tails below
  /// t = 0 are negligible.
  bool validity_warning() const { return s > 0 && t0 / s < 3.0; }
};

void validate(const GaussianTime& g);

/// Exact average over the Gaussian via the energy eigenbasis of H/R:
///   rho' = sum_{k,l} P_k rho P_l exp(-i w_kl t0 - w_kl^2 s^2 / 2),
///   w_kl = E_k - E_l, with |w_kl| < 1e-12 treated as zero.
/// Times are rescaled.
DensityMatrix4 gaussian_mixed_state(const DensityMatrix4& rho,
                                    const IsingParams& p,
                                    const GaussianTime& g);

struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // for the weight function exp(-x^2)
};

GaussHermiteRule gauss_hermite(int nodes);

/// Gauss-Hermite sum of U(t_i) rho U(t_i)^dagger using the closed-form
/// propagator. nodes >= 16; s == 0 evaluates U(t0) directly.
DensityMatrix4 quadrature_oracle(const DensityMatrix4& rho,
                                 const IsingParams& p, const GaussianTime& g,
                                 int nodes);

/// Witness expectations Tr(W_ij rho') for ij = 00, 01, 10, 11, for both
/// mixed states, alongside the closed forms
///   rho1': W00 = -E cos 2b+t0, W10 = +E cos 2b+t0, W01 = W11 = 1,
///   rho2': W00 = 1 - cos^2(th)(1 - E cos 2b+t0)
///          W01 = 1 - sin^2(th)((1 + 4j^2) + (1 - 4j^2) e^{-2s^2} cos 2t0)
///          W10 = 1 - cos^2(th)(1 + E cos 2b+t0)
///          W11 = 1 - (1 - 4j^2) sin^2(th)(1 - e^{-2s^2} cos 2t0)
/// where E = exp(-2 b+^2 s^2).
struct WitnessTable {
  std::array<double, 4> rho1{};
  std::array<double, 4> rho2{};
  std::array<double, 4> rho1_closed_form{};
  std::array<double, 4> rho2_closed_form{};
  double max_deviation_rho1 = 0.0;
  double max_deviation_rho2 = 0.0;
};

WitnessTable witness_table(double theta, const IsingParams& p,
                           const GaussianTime& g);

/// A mixed-state fidelity with its printed closed form, when one exists.
/// `value` always carries the pipeline number; `formula_deviation` is set
/// when the closed form misses it by more than 1e-9.
struct MixedFidelity {
  double value = 0.0;
  std::optional<double> closed_form;
  double deviation = 0.0;
  bool formula_deviation = false;
};

/// Do-nothing scheme on the mixed pair: (Tr(rho1 rho1') + Tr(rho2 rho2'))/2,
/// compared against
///   1/4 ((1 + E cos 2b+t0)(1 + cos^4) + G_N cos^2 sin^2
///        + ((1 + 4j^2) + (1 - 4j^2) e^{-2s^2} cos 2t0) sin^4).
MixedFidelity f_n_mix(double theta, double b_plus, double j, double t0,
                      double s);

/// Printed G_N: sum over the four frequencies 1 +- b+ +- 2j, each weighted
/// by exp(-w^2 s^2 / 2) cos(w t0).
double g_n(double b_plus, double j, double t0, double s);

/// Situation-1 correction planned at t = t0 applied to the mixed pair, no
/// intermediate measurement. Compared against the printed F_1 (whose G_1
/// exponents lack the squares of G_N, so deviations are expected for s > 0).
MixedFidelity f1(double theta, const IsingParams& p, double t0, double s,
                 int n, int m);

/// Situation-2 local correction planned at t = t0 (physical units) applied
/// to the mixed pair, no intermediate measurement. No closed form attached.
MixedFidelity f2(double theta, const PhysicalFields& f, double t0, double s,
                 double T, int n, int m);

/// Printed A and D terms of F_2, with Delta read both as the planner's
/// -(m pi + f/2) and as phi + phi'.
struct F2PrintedTerms {
  double A = 0.0;
  double D_planner_delta = 0.0;
  double D_phi_sum_delta = 0.0;
};

F2PrintedTerms f2_printed_terms(const PhysicalFields& f, double t0, double s,
                                const Situation2Plan& plan);

class StructuralMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F(theta) = 1/4 (A (1 + cos^4) + G cos^2 sin^2 + D sin^4).
struct AbdCoefficients {
  double A = 0.0;
  double G = 0.0;
  double D = 0.0;
  /// Largest reconstruction error at theta = pi/8 and 3 pi/8.
  double residual = 0.0;

  double evaluate(double theta) const;
};

/// A = 2 F(0), D = 4 F(pi/2) - A, G = 16 F(pi/4) - 5 A - D. Throws
/// StructuralMismatch when the probe residual exceeds 1e-6.
AbdCoefficients abd_decompose(const std::function<double(double)>& scheme);

}  // namespace isingctl

#endif  // ISINGCTL_STOCHASTIC_HPP
