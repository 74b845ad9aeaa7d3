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

#include "isingctl/control.hpp"

#include "isingctl/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatchTol = 1e-12;

bool same_params(const IsingParams& a, const IsingParams& b) {
  return std::abs(a.b_plus - b.b_plus) <= kMatchTol &&
         std::abs(a.b_minus - b.b_minus) <= kMatchTol &&
         std::abs(a.j - b.j) <= kMatchTol;
}

bool same_fields(const PhysicalFields& a, const PhysicalFields& b) {
  return std::abs(a.B1 - b.B1) <= kMatchTol &&
         std::abs(a.B2 - b.B2) <= kMatchTol && std::abs(a.J - b.J) <= kMatchTol;
}

void require_matching(const Situation1Plan& plan, const IsingParams& p) {
  if (!same_params(plan.params, p)) {
    throw PlanError("situation-1 plan was built for different parameters");
  }
}

void require_matching(const Situation2Plan& plan, const PhysicalFields& f,
                      double t) {
  if (!same_fields(plan.fields, f) || std::abs(plan.t - t) > kMatchTol) {
    throw PlanError("situation-2 plan was built for different fields or time");
  }
}

}  // namespace

Situation1Plan plan_situation1(double t, const IsingParams& p, int n, int m) {
  validate(p);
  if (n <= 0) throw PlanError("situation 1 needs n >= 1");
  if (!(n * kPi > t)) {
    std::ostringstream msg;
    msg << "no time left for the loop: n pi = " << n * kPi << " <= t = " << t;
    throw PlanError(msg.str());
  }
  Situation1Plan plan;
  plan.n = n;
  plan.m = m;
  plan.t = t;
  plan.params = p;
  plan.T = n * kPi - t;
  plan.delta_b_plus = kPi * (2.0 * m - n * (p.b_plus - 2.0 * p.j + 1.0)) / plan.T;
  plan.s_num = std::lround(2.0 * n * p.j);
  plan.delta = p.j - static_cast<double>(plan.s_num) / (2.0 * n);
  return plan;
}

Situation1Plan plan_situation1_nearest(double t, const IsingParams& p) {
  int n = std::max(1, static_cast<int>(std::floor(t / kPi)) + 1);
  if (!(n * kPi > t)) ++n;
  int m = static_cast<int>(std::lround(0.5 * n * (p.b_plus - 2.0 * p.j + 1.0)));
  return plan_situation1(t, p, n, m);
}

Matrix4 situation1_correction(const Situation1Plan& plan, const IsingParams& p) {
  require_matching(plan, p);
  IsingParams boosted = p;
  boosted.b_plus += plan.delta_b_plus;
  return evolution_closed_form(boosted, plan.T);
}

Matrix4 situation1_propagator(const Situation1Plan& plan, const IsingParams& p) {
  return situation1_correction(plan, p) * evolution_closed_form(p, plan.t);
}

TwoQubitState apply_situation1(const Situation1Plan& plan, const IsingParams& p,
                               const TwoQubitState& original) {
  return situation1_propagator(plan, p) * original;
}

DensityMatrix4 apply_situation1(const Situation1Plan& plan,
                                const IsingParams& p,
                                const DensityMatrix4& original) {
  Matrix4 u = situation1_propagator(plan, p);
  return u * original * u.adjoint();
}

double unwrapped_arctan(double k, double x) {
  if (k == 0.0) return 0.0;
  // tan is singular at x = pi/2 + l pi; count the crossings since 0.
  double crossings = std::floor(x / kPi + 0.5);
  return std::atan(k * std::tan(x)) + std::copysign(kPi, k) * crossings;
}

double situation2_f(const PhysicalFields& f, double t) {
  const double R = f.scale();
  const double Bm = f.b_diff();
  const double phi = unwrapped_arctan((Bm - 2 * f.J) / R, R * t);
  const double phi_p = unwrapped_arctan((Bm + 2 * f.J) / R, R * t);
  return phi - phi_p + 4 * f.J * t;
}

Situation2Plan plan_situation2(double t, const PhysicalFields& f, double T,
                               int n, int m) {
  if (!(T > 0.0)) throw PlanError("situation 2 needs T > 0");
  if (!(f.J > 0.0)) throw PlanError("situation 2 needs J > 0");
  const double R = f.scale();
  const double Bm = f.b_diff();
  Situation2Plan plan;
  plan.t = t;
  plan.fields = f;
  plan.T = T;
  plan.n = n;
  plan.m = m;
  plan.phi = unwrapped_arctan((Bm - 2 * f.J) / R, R * t);
  plan.phi_prime = unwrapped_arctan((Bm + 2 * f.J) / R, R * t);
  const double sinRt = std::sin(R * t);
  const double skew = 4 * f.J * Bm / (R * R) * sinRt * sinRt;
  plan.r = std::sqrt(std::max(0.0, 1 - skew));
  plan.r_prime = std::sqrt(std::max(0.0, 1 + skew));
  plan.Bp_prime = (n * kPi - f.b_sum() * t) / T;
  plan.Bm_prime = ((m + n) * kPi - 0.5 * (plan.phi + plan.phi_prime)) / T;
  plan.f_value = plan.phi - plan.phi_prime + 4 * f.J * t;
  plan.Delta = -(m * kPi + 0.5 * plan.f_value);
  return plan;
}

Situation2Plan plan_situation2_nearest(double t, const PhysicalFields& f,
                                       double T) {
  int n = static_cast<int>(std::lround(f.b_sum() * t / kPi));
  Situation2Plan probe = plan_situation2(t, f, T, n, 0);
  // B-' = 0 at m = (phi + phi')/(2 pi) - n.
  double m_zero = 0.5 * (probe.phi + probe.phi_prime) / kPi - n;
  int lo = static_cast<int>(std::floor(m_zero));
  Situation2Plan best = plan_situation2(t, f, T, n, lo);
  for (int m = lo - 1; m <= lo + 2; ++m) {
    Situation2Plan cand = plan_situation2(t, f, T, n, m);
    const double gain = std::cos(cand.Delta) - std::cos(best.Delta);
    if (gain > 1e-12 ||
        (gain > -1e-12 && std::abs(cand.Bm_prime) < std::abs(best.Bm_prime))) {
      best = cand;
    }
  }
  return best;
}

Matrix4 situation2_correction(const Situation2Plan& plan) {
  return evolve_physical(plan.local_fields(), plan.T);
}

Matrix4 situation2_propagator(const Situation2Plan& plan,
                              const PhysicalFields& f) {
  require_matching(plan, f, plan.t);
  return situation2_correction(plan) * evolve_physical(f, plan.t);
}

TwoQubitState apply_situation2(const Situation2Plan& plan,
                               const PhysicalFields& f, double t,
                               const TwoQubitState& original) {
  require_matching(plan, f, t);
  return situation2_propagator(plan, f) * original;
}

DensityMatrix4 apply_situation2(const Situation2Plan& plan,
                                const PhysicalFields& f, double t,
                                const DensityMatrix4& original) {
  require_matching(plan, f, t);
  Matrix4 u = situation2_propagator(plan, f);
  return u * original * u.adjoint();
}

TwoQubitState situation2_predicted_beta2(const Situation2Plan& plan,
                                         double theta) {
  TwoQubitState v = TwoQubitState::Zero();
  const Complex rot = std::polar(std::sin(theta) / std::numbers::sqrt2, plan.Delta);
  v(1) = rot * plan.r;
  v(2) = rot * plan.r_prime;
  return v - std::cos(theta) * bell(1, 0);
}

double fidelity_overlap(const TwoQubitState& a, const TwoQubitState& b) {
  return std::norm(a.dot(b));
}

}  // namespace isingctl
