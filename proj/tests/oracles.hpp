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

#ifndef ISINGCTL_TESTS_ORACLES_HPP
#define ISINGCTL_TESTS_ORACLES_HPP

// Reference computations that share no code path with the library.

#include "isingctl/qalg.hpp"

#include <cmath>
#include <random>

namespace oracle {

using isingctl::Complex;
using isingctl::Matrix2;
using isingctl::Matrix4;
using isingctl::Vector4;

/// exp(A) by scaling and squaring with a 30-term Taylor series.
inline Matrix4 expm(const Matrix4& a) {
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  Matrix4 scaled = a / std::pow(2.0, squarings);
  Matrix4 term = Matrix4::Identity();
  Matrix4 sum = Matrix4::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

/// Pauli-sum Hamiltonian built from explicit tensor products.
inline Matrix4 ising_hamiltonian(double B1, double B2, double J) {
  Matrix2 id = Matrix2::Identity();
  Matrix2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  auto kron = [](const Matrix2& p, const Matrix2& q) {
    Matrix4 out;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) out(2 * a + c, 2 * b + d) = p(a, b) * q(c, d);
    return out;
  };
  return -J * (kron(x, x) + kron(y, y) + kron(z, z)) + B1 * kron(z, id) + B2 * kron(id, z);
}

/// Reduced state of the first qubit (traced = 1) or of the second (traced = 0).
inline Matrix2 reduce(const Matrix4& rho, int keep_first) {
  Matrix2 out = Matrix2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) {
        if (keep_first) out(a, b) += rho(2 * a + k, 2 * b + k);
        else out(a, b) += rho(2 * k + a, 2 * k + b);
      }
  return out;
}

/// Eigenvalues (larger first) of a Hermitian 2x2 via the quadratic formula.
inline std::pair<double, double> eig2(const Matrix2& m) {
  const double tr = (m(0, 0) + m(1, 1)).real();
  // Sum of squares rather than tr^2/4 - det, which cancels near degeneracy.
  const double half_gap = 0.5 * (m(0, 0) - m(1, 1)).real();
  const double disc = std::sqrt(half_gap * half_gap + std::norm(m(0, 1)));
  return {tr / 2 + disc, tr / 2 - disc};
}

inline Matrix4 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  return 0.5 * (m + m.adjoint());
}

inline Matrix4 random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(n(rng), n(rng));
  Matrix4 rho = g * g.adjoint();
  return rho / rho.trace().real();
}

inline Vector4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vector4 v;
  for (int k = 0; k < 4; ++k) v(k) = Complex(n(rng), n(rng));
  return v.normalized();
}

/// Gaussian average of exp(-iHt) rho exp(iHt), H given, by composite Simpson
/// over t0 +- 12 s.
inline Matrix4 gaussian_average_simpson(const Matrix4& h, const Matrix4& rho,
                                        double t0, double s, int intervals = 2000) {
  if (s == 0) {
    Matrix4 u = expm(Complex(0, -t0) * h);
    return u * rho * u.adjoint();
  }
  const double lo = t0 - 12 * s;
  const double step = 24 * s / intervals;
  // U(t) advanced by the fixed step.
  Matrix4 u = expm(Complex(0, -lo) * h);
  const Matrix4 du = expm(Complex(0, -step) * h);
  Matrix4 acc = Matrix4::Zero();
  for (int k = 0; k <= intervals; ++k) {
    const double t = lo + k * step;
    const double w = (k == 0 || k == intervals) ? 1 : (k % 2 ? 4 : 2);
    const double pdf = std::exp(-0.5 * (t - t0) * (t - t0) / (s * s)) /
                       (s * std::sqrt(2 * M_PI));
    acc += (w * pdf) * (u * rho * u.adjoint());
    u = du * u;
  }
  return acc * (step / 3);
}

}  // namespace oracle

#endif  // ISINGCTL_TESTS_ORACLES_HPP
