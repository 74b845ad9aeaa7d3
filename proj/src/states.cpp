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

#include "isingctl/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace isingctl {

namespace {

void require_bit(int b, const char* name) {
  if (b != 0 && b != 1) {
    throw std::invalid_argument(std::string(name) + " must be 0 or 1");
  }
}

void require_theta(double theta) {
  if (!(theta >= -1e-15 && theta <= std::numbers::pi / 2 + 1e-15)) {
    std::ostringstream msg;
    msg << "theta = " << theta << " outside [0, pi/2]";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

TwoQubitState bell(int i, int j) {
  require_bit(i, "i");
  require_bit(j, "j");
  TwoQubitState v = TwoQubitState::Zero();
  const double h = std::numbers::sqrt2 / 2;
  v(j) = h;
  v(2 + (1 - j)) = (i == 0 ? h : -h);
  return v;
}

StatePair initial_pair(double theta) {
  require_theta(theta);
  StatePair pair;
  pair.theta = theta;
  pair.beta1 = bell(0, 0);
  pair.beta2 = std::sin(theta) * bell(0, 1) - std::cos(theta) * bell(1, 0);
  return pair;
}

TwoQubitState beta1_from_local_bases(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  Vector2 phi(c, s);
  Vector2 eta(s, -c);
  return (kron(phi, phi) + kron(eta, eta)) / std::numbers::sqrt2;
}

DensityMatrix4 density(const TwoQubitState& v) { return projector(v); }

double trace_distance(const DensityMatrix4& a, const DensityMatrix4& b) {
  return 0.5 * trace_norm(a - b);
}

double computational_distance(const DensityMatrix4& a, const DensityMatrix4& b) {
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += std::abs(a(k, k).real() - b(k, k).real());
  return 0.5 * sum;
}

std::pair<double, double> schmidt(const TwoQubitState& state) {
  Matrix2 reduced = partial_trace(density(state), Qubit::second);
  // Rounding can put the Hermitian residue slightly above the default bound.
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  auto ev = hermitian_eigenvalues(reduced);
  return {ev[0], ev[1]};
}

SchmidtResult schmidt_closed_form(double theta, double j, double t) {
  require_theta(theta);
  if (!(j >= 0.0 && j <= 0.5)) {
    throw std::invalid_argument("j outside [0, 1/2]");
  }
  const double st = std::sin(t);
  const double sth = std::sin(theta);
  const double s2jt = std::sin(2 * j * t);
  SchmidtResult r;
  r.A_term = 16 * j * j * (1 - 4 * j * j) * std::pow(st, 4) * std::pow(sth, 4);
  // Same B as documented, regrouped into squares so it cannot cancel.
  const double lead = s2jt * std::cos(t) - 2 * j * st * std::cos(2 * j * t);
  r.B_term = lead * lead + (1 - 4 * j * j) * st * st * s2jt * s2jt;
  const double s2th = std::sin(2 * theta);
  double radicand = r.A_term + r.B_term * s2th * s2th;
  if (radicand < -1e-9 || radicand > 1 + 1e-9) {
    std::ostringstream msg;
    msg << "Schmidt radicand " << radicand << " outside [0, 1] at theta="
        << theta << " j=" << j << " t=" << t;
    throw FormulaViolation(msg.str());
  }
  if (radicand < -1e-12 || radicand > 1 + 1e-12) r.clamped = true;
  radicand = std::clamp(radicand, 0.0, 1.0);
  const double root = std::sqrt(radicand);
  r.lambda1 = 0.5 * (1 + root);
  r.lambda2 = 0.5 * (1 - root);
  return r;
}

double witness_value(const DensityMatrix4& rho, int i, int j) {
  TwoQubitState b = bell(i, j);
  Complex overlap = b.dot(rho * b);  // <b|rho|b>
  return (rho.trace() - 2.0 * overlap).real();
}

}  // namespace isingctl
