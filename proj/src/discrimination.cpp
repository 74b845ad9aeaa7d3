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

#include "isingctl/discrimination.hpp"

#include "isingctl/ising_evolution.hpp"
#include "isingctl/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<Vector2, Vector2> local_basis(double theta, double alpha) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Vector2 delta(c, std::polar(s, alpha));
  Vector2 epsilon(s, -std::polar(c, alpha));
  return {delta, epsilon};
}

double expectation(const DensityMatrix4& rho, const TwoQubitState& v) {
  return v.dot(rho * v).real();
}

double tr_product(const DensityMatrix4& a, const DensityMatrix4& b) {
  return (a * b).trace().real();
}

SchemeResult combine(double p1, double p2, double f11, double f12, double f22,
                     double f21) {
  SchemeResult r;
  r.p_h1 = p1;
  r.p_h2 = p2;
  r.avg_fidelity = 0.5 * (p1 * f11 + (1 - p1) * f12) +
                   0.5 * (p2 * f22 + (1 - p2) * f21);
  return r;
}

}  // namespace

std::array<TwoQubitState, 4> povm_states(const LocalPovm& povm) {
  auto [d1, e1] = local_basis(povm.theta1, povm.alpha1);
  auto [d2, e2] = local_basis(povm.theta2, povm.alpha2);
  return {kron(d1, d2), kron(e1, e2), kron(d1, e2), kron(e1, d2)};
}

HelstromProbabilities helstrom(const DensityMatrix4& rho1_distorted,
                               const DensityMatrix4& rho2_distorted,
                               const LocalPovm& povm) {
  auto v = povm_states(povm);
  HelstromProbabilities p;
  p.p_h1 = expectation(rho1_distorted, v[0]) + expectation(rho1_distorted, v[1]);
  p.p_h2 = expectation(rho2_distorted, v[2]) + expectation(rho2_distorted, v[3]);
  return p;
}

SchemeResult average_fidelity(const PurePair& originals,
                              const PurePair& distorted,
                              const PurePair& reprepared,
                              const LocalPovm& povm) {
  auto v = povm_states(povm);
  auto prob = [](const TwoQubitState& s, const TwoQubitState& a) {
    return std::norm(a.dot(s));
  };
  const double p1 = prob(distorted.first, v[0]) + prob(distorted.first, v[1]);
  const double p2 = prob(distorted.second, v[2]) + prob(distorted.second, v[3]);
  auto F = [](const TwoQubitState& a, const TwoQubitState& b) {
    return std::norm(a.dot(b));
  };
  return combine(p1, p2, F(originals.first, reprepared.first),
                 F(originals.first, reprepared.second),
                 F(originals.second, reprepared.second),
                 F(originals.second, reprepared.first));
}

SchemeResult average_fidelity(const MixedPair& originals,
                              const MixedPair& distorted,
                              const MixedPair& reprepared,
                              const LocalPovm& povm) {
  HelstromProbabilities p = helstrom(distorted.first, distorted.second, povm);
  return combine(p.p_h1, p.p_h2, tr_product(originals.first, reprepared.first),
                 tr_product(originals.first, reprepared.second),
                 tr_product(originals.second, reprepared.second),
                 tr_product(originals.second, reprepared.first));
}

const char* to_string(ObjectiveMode mode) {
  return mode == ObjectiveMode::as_printed ? "as-printed"
                                           : "reprepare-originals";
}

ObjectiveMode objective_mode_from_string(const std::string& name) {
  if (name == "as-printed") return ObjectiveMode::as_printed;
  if (name == "reprepare-originals") return ObjectiveMode::reprepare_originals;
  throw std::invalid_argument("unknown objective mode '" + name + "'");
}

SchemeResult scheme_fidelity(double theta, double b_plus, double j, double t,
                             const LocalPovm& povm, ObjectiveMode mode) {
  StatePair pair = initial_pair(theta);
  Matrix4 u = evolution_closed_form(make_params(b_plus, j), t);
  PurePair originals{pair.beta1, pair.beta2};
  PurePair distorted{u * pair.beta1, u * pair.beta2};
  const PurePair& reprepared =
      mode == ObjectiveMode::as_printed ? distorted : originals;
  return average_fidelity(originals, distorted, reprepared, povm);
}

double f_dr1(double theta) {
  const double s = std::sin(theta);
  return 0.5 * (1 + s * s);
}

double f_n(double theta, double b_plus, double j, double t) {
  const double cb = std::cos(b_plus * t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double s2 = std::sin(2 * theta);
  const double st = std::sin(t);
  const double ct = std::cos(t);
  return 0.5 * (cb * cb * (1 + std::pow(c, 4)) +
                0.5 * cb *
                    (ct * std::cos(2 * j * t) + 2 * j * st * std::sin(2 * j * t)) *
                    s2 * s2 +
                (4 * j * j * st * st + ct * ct) * std::pow(s, 4));
}

double f_n_pipeline(double theta, double b_plus, double j, double t) {
  StatePair pair = initial_pair(theta);
  Matrix4 u = evolution_closed_form(make_params(b_plus, j), t);
  return 0.5 * std::norm(pair.beta1.dot(u * pair.beta1)) +
         0.5 * std::norm(pair.beta2.dot(u * pair.beta2));
}

LocalPovm table1_povm(double theta, Table1Variant variant) {
  if (variant == Table1Variant::A) {
    const double a = 0.5 * (kPi - 2 * theta);
    return {a, a, 0.0, 0.0};
  }
  const double b = 0.5 * (kPi + 2 * theta);
  return {b, b, kPi, kPi};
}

LocalPovm computational_povm() { return {0.0, 0.0, 0.0, 0.0}; }

double f_ab(double theta, double b_plus, double j, double t) {
  return scheme_fidelity(theta, b_plus, j, t,
                         table1_povm(theta, Table1Variant::A),
                         ObjectiveMode::reprepare_originals)
      .avg_fidelity;
}

double f_ab_printed(double theta, double b_plus, double j, double t) {
  const double cb = std::cos(b_plus * t);
  const double sb = std::sin(b_plus * t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double mid = (1 + 4 * j * j) +
                     8 * cb *
                         ((1 + 2 * j) * std::cos((1 - 2 * j) * t) +
                          (1 - 2 * j) * std::cos((1 + 2 * j) * t)) +
                     4 * sb * sb - 2 * (1 - 4 * j * j);
  return (4 * cb * cb * (1 + std::pow(c, 4)) + mid * c * c * s * s +
          (3 * (1 + 4 * j * j) + 4 * sb * sb) * std::pow(s, 4)) /
         8;
}

double f_so(double theta, double b_plus, double j, double t) {
  return std::max(f_dr1(theta), f_ab(theta, b_plus, j, t));
}

std::array<double, 7> critical_fidelities(double theta) {
  const double s = std::sin(theta);
  std::array<double, 7> v{0.0,           0.5 * (1 - s), 0.5 * (1 - s * s), 0.5,
                          0.5 * (1 + s * s), 0.5 * (1 + s), 1.0};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace isingctl
