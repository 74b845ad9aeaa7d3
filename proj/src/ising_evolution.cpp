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

#include "isingctl/ising_evolution.hpp"

#include <cmath>
#include <sstream>

namespace isingctl {

namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

double PhysicalFields::scale() const {
  return std::sqrt(b_diff() * b_diff() + 4.0 * J * J);
}

PhysicalFields IsingParams::physical() const {
  double bp = b_plus * R;
  double bm = b_minus * R;
  return PhysicalFields{0.5 * (bp + bm), 0.5 * (bp - bm), j * R};
}

IsingParams make_params(double b_plus, double j, double b_minus_sign, double R) {
  double bm = std::sqrt(std::max(0.0, 1.0 - 4.0 * j * j));
  IsingParams p{b_plus, b_minus_sign < 0 ? -bm : bm, j, R};
  validate(p);
  return p;
}

void validate(const IsingParams& p) {
  double residual = p.b_minus * p.b_minus + 4.0 * p.j * p.j - 1.0;
  if (std::abs(residual) > 1e-12 || p.j < -1e-15 || p.j > 0.5 + 1e-15 ||
      !(p.R > 0.0) || !std::isfinite(p.b_plus)) {
    std::ostringstream msg;
    msg << "invalid Ising parameters: b+=" << p.b_plus << " b-=" << p.b_minus
        << " j=" << p.j << " R=" << p.R
        << " (b-^2 + 4j^2 - 1 = " << residual << ")";
    throw std::invalid_argument(msg.str());
  }
}

IsingParams normalize_fields(const PhysicalFields& f) {
  if (f.J < 0.0) throw std::invalid_argument("Ising coupling J must be >= 0");
  double R = f.scale();
  if (!(R > 0.0)) {
    throw DegenerateScaleError(
        "degenerate scale: B1 == B2 and J == 0 gives R = 0");
  }
  IsingParams p{f.b_sum() / R, f.b_diff() / R, f.J / R, R};
  // Restore the constraint exactly for the rounding in the divisions.
  double norm = std::hypot(p.b_minus, 2.0 * p.j);
  p.b_minus /= norm;
  p.j /= norm;
  return p;
}

Matrix4 hamiltonian(const PhysicalFields& f) {
  double bp = f.b_sum();
  double bm = f.b_diff();
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = bp - f.J;
  h(1, 1) = f.J + bm;
  h(1, 2) = -2.0 * f.J;
  h(2, 1) = -2.0 * f.J;
  h(2, 2) = f.J - bm;
  h(3, 3) = -(bp + f.J);
  return h;
}

Matrix4 normalized_hamiltonian(const IsingParams& p) {
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = p.b_plus - p.j;
  h(1, 1) = p.j + p.b_minus;
  h(1, 2) = -2.0 * p.j;
  h(2, 1) = -2.0 * p.j;
  h(2, 2) = p.j - p.b_minus;
  h(3, 3) = -(p.b_plus + p.j);
  return h;
}

Matrix4 evolution_closed_form(const IsingParams& p, double t) {
  const Complex block_phase = std::exp(-kI * (t * p.j));
  const double c = std::cos(t);
  const double s = std::sin(t);
  Matrix4 u = Matrix4::Zero();
  u(0, 0) = std::exp(-kI * (t * (p.b_plus - p.j)));
  u(1, 1) = block_phase * Complex(c, -p.b_minus * s);
  u(1, 2) = block_phase * Complex(0.0, 2.0 * p.j * s);
  u(2, 1) = u(1, 2);
  u(2, 2) = block_phase * Complex(c, p.b_minus * s);
  u(3, 3) = std::exp(kI * (t * (p.b_plus + p.j)));
  return u;
}

Matrix4 evolution_oracle(const PhysicalFields& f, double t) {
  Eigensystem4 es = hermitian_eigensystem(hamiltonian(f));
  Matrix4 u = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) {
    Vector4 v = es.vectors.col(k);
    u += std::exp(-kI * (es.values[k] * t)) * projector(v);
  }
  return u;
}

Matrix4 evolve_physical(const PhysicalFields& f, double t) {
  if (f.scale() > 0.0) {
    IsingParams p = normalize_fields(f);
    return evolution_closed_form(p, p.rescaled_time(t));
  }
  // R == 0 means J == 0 and B1 == B2: pure Zeeman.
  Matrix4 u = Matrix4::Zero();
  u(0, 0) = std::exp(-kI * (f.b_sum() * t));
  u(1, 1) = 1.0;
  u(2, 2) = 1.0;
  u(3, 3) = std::exp(kI * (f.b_sum() * t));
  return u;
}

}  // namespace isingctl
