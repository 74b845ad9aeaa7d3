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

#ifndef ISINGCTL_QALG_HPP
#define ISINGCTL_QALG_HPP

// Dense complex algebra on the one- and two-qubit spaces. Basis ordering for
// two qubits is |00>, |01>, |10>, |11> (first qubit is the high bit).

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace isingctl {

using Complex = std::complex<double>;
using Vector2 = Eigen::Matrix<Complex, 2, 1>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

using TwoQubitState = Vector4;
using DensityMatrix4 = Matrix4;

inline constexpr double kDefaultTolerance = 1e-10;

enum class Qubit { first, second };

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// max |m - m^dagger| over all entries.
double hermitian_asymmetry(const Matrix4& m);
double hermitian_asymmetry(const Matrix2& m);

/// Throws std::invalid_argument reporting the asymmetry when it exceeds tol.
void require_hermitian(const Matrix4& m, double tol = kDefaultTolerance);
void require_hermitian(const Matrix2& m, double tol = kDefaultTolerance);

/// Eigenvalues of a Hermitian matrix, sorted descending.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& m,
                                            double tol = kDefaultTolerance);
std::array<double, 2> hermitian_eigenvalues(const Matrix2& m,
                                            double tol = kDefaultTolerance);

struct Eigensystem4 {
  std::array<double, 4> values;  // ascending
  Matrix4 vectors;               // column k belongs to values[k]
};

/// Full spectral decomposition of a Hermitian 4x4 matrix.
Eigensystem4 hermitian_eigensystem(const Matrix4& m,
                                   double tol = kDefaultTolerance);

/// Reduced state after tracing out `traced`.
Matrix2 partial_trace(const DensityMatrix4& rho, Qubit traced);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix4& m, double tol = kDefaultTolerance);

Matrix4 projector(const Vector4& v);
Vector4 kron(const Vector2& a, const Vector2& b);
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// min over phi of max|a - e^{i phi} b|, with phi taken from Tr(b^dagger a).
double phase_insensitive_distance(const Matrix4& a, const Matrix4& b);

template <typename A, typename B>
bool approx_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                  double tol = kDefaultTolerance) {
  return max_abs(a - b) <= tol;
}

}  // namespace isingctl

#endif  // ISINGCTL_QALG_HPP
