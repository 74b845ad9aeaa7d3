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

#include "isingctl/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace isingctl {

namespace {

template <typename M>
void require_hermitian_impl(const M& m, double tol) {
  double asym = hermitian_asymmetry(m);
  if (!(asym <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |m - m^dagger| = " << asym
        << " exceeds " << tol;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double hermitian_asymmetry(const Matrix4& m) { return max_abs(m - m.adjoint()); }
double hermitian_asymmetry(const Matrix2& m) { return max_abs(m - m.adjoint()); }

void require_hermitian(const Matrix4& m, double tol) {
  require_hermitian_impl(m, tol);
}
void require_hermitian(const Matrix2& m, double tol) {
  require_hermitian_impl(m, tol);
}

std::array<double, 4> hermitian_eigenvalues(const Matrix4& m, double tol) {
  require_hermitian(m, tol);
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(m, Eigen::EigenvaluesOnly);
  std::array<double, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = solver.eigenvalues()(k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::array<double, 2> hermitian_eigenvalues(const Matrix2& m, double tol) {
  require_hermitian(m, tol);
  // Closed form for 2x2: mean +- sqrt(half-gap^2 + |off|^2).
  double a = m(0, 0).real();
  double d = m(1, 1).real();
  double mean = 0.5 * (a + d);
  double half_gap = 0.5 * (a - d);
  double radius = std::hypot(half_gap, std::abs(m(0, 1)));
  return {mean + radius, mean - radius};
}

Eigensystem4 hermitian_eigensystem(const Matrix4& m, double tol) {
  require_hermitian(m, tol);
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(m);
  Eigensystem4 out;
  for (int k = 0; k < 4; ++k) out.values[k] = solver.eigenvalues()(k);
  out.vectors = solver.eigenvectors();
  return out;
}

Matrix2 partial_trace(const DensityMatrix4& rho, Qubit traced) {
  require_hermitian(rho);
  Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kDefaultTolerance) {
    std::ostringstream msg;
    msg << "partial_trace expects unit trace, got " << tr;
    throw std::invalid_argument(msg.str());
  }
  Matrix2 out = Matrix2::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int k = 0; k < 2; ++k) {
        if (traced == Qubit::second) {
          out(a, b) += rho(2 * a + k, 2 * b + k);
        } else {
          out(a, b) += rho(2 * k + a, 2 * k + b);
        }
      }
    }
  }
  return out;
}

double trace_norm(const Matrix4& m, double tol) {
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(m, tol)) sum += std::abs(ev);
  return sum;
}

Matrix4 projector(const Vector4& v) { return v * v.adjoint(); }

Vector4 kron(const Vector2& a, const Vector2& b) {
  Vector4 out;
  out << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return out;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double phase_insensitive_distance(const Matrix4& a, const Matrix4& b) {
  Complex overlap = (b.adjoint() * a).trace();
  Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return max_abs(a - phase * b);
}

}  // namespace isingctl
