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
#include "isingctl/states.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace isingctl;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRt2 = std::sqrt(2.0);

Vector4 ket(double a, double b, double c, double d) {
  Vector4 v;
  v << a, b, c, d;
  return v;
}

}  // namespace

TEST(Bell, ConventionAndOrthonormality) {
  EXPECT_LT(max_abs(bell(0, 0) - ket(1, 0, 0, 1) / kRt2), 1e-15);
  EXPECT_LT(max_abs(bell(0, 1) - ket(0, 1, 1, 0) / kRt2), 1e-15);
  EXPECT_LT(max_abs(bell(1, 0) - ket(1, 0, 0, -1) / kRt2), 1e-15);
  EXPECT_LT(max_abs(bell(1, 1) - ket(0, 1, -1, 0) / kRt2), 1e-15);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      EXPECT_NEAR(std::abs(bell(a / 2, a % 2).dot(bell(b / 2, b % 2))), a == b ? 1 : 0, 1e-15);
}

TEST(InitialPair, EndpointsNormsAndOrthogonality) {
  StatePair half = initial_pair(kPi / 2);
  EXPECT_LT(max_abs(half.beta2 - bell(0, 1)), 1e-15);
  StatePair zero = initial_pair(0);
  EXPECT_LT(max_abs(zero.beta2 + bell(1, 0)), 1e-15);
  for (double th = 0; th <= kPi / 2; th += 0.05) {
    StatePair p = initial_pair(th);
    EXPECT_NEAR(p.beta1.norm(), 1, 1e-15);
    EXPECT_NEAR(p.beta2.norm(), 1, 1e-15);
    EXPECT_NEAR(std::abs(p.beta1.dot(p.beta2)), 0, 1e-15);
    EXPECT_LT(max_abs(p.beta1 - bell(0, 0)), 1e-15);
  }
  EXPECT_THROW(initial_pair(-0.1), std::invalid_argument);
  EXPECT_THROW(initial_pair(2.0), std::invalid_argument);
}

TEST(InitialPair, FirstStateFromLocalBases) {
  for (double th = 0; th <= kPi / 2; th += 0.1) {
    const double c = std::cos(th / 2), s = std::sin(th / 2);
    Vector2 phi(c, s), eta(s, -c);
    Vector4 built = (kron(phi, phi) + kron(eta, eta)) / kRt2;
    EXPECT_LT(max_abs(built - bell(0, 0)), 1e-14);
    EXPECT_LT(max_abs(beta1_from_local_bases(th) - built), 1e-14);
  }
}

TEST(InitialPair, SecondStateOverlapsAsCosineSquared) {
  for (double a = 0; a <= kPi / 2; a += 0.2)
    for (double b = 0; b <= kPi / 2; b += 0.2)
      EXPECT_NEAR(std::norm(initial_pair(a).beta2.dot(initial_pair(b).beta2)),
                  std::pow(std::cos(a - b), 2), 1e-14);
}

TEST(TraceDistance, OrthogonalPairStaysAtOneUnderEvolution) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ub(-5, 5), uj(0, 0.5), ut(-6, 6);
  for (int k = 0; k < 200; ++k) {
    const double th = kPi / 2 * k / 199.0;
    StatePair pair = initial_pair(th);
    Matrix4 u = evolution_closed_form(make_params(ub(rng), uj(rng)), ut(rng));
    DensityMatrix4 r1 = density(pair.beta1), r2 = density(pair.beta2);
    DensityMatrix4 e1 = u * r1 * u.adjoint(), e2 = u * r2 * u.adjoint();
    EXPECT_NEAR(trace_distance(r1, r1), 0, 1e-15);
    EXPECT_NEAR(trace_distance(e1, e2), trace_distance(r1, r2), 1e-12);
    EXPECT_NEAR(trace_distance(e1, e2), 1.0, 1e-12);
    // The computational-basis statistics carry the sin^2 separation.
    EXPECT_NEAR(computational_distance(r1, r2), std::pow(std::sin(th), 2), 1e-14);
    EXPECT_NEAR(computational_distance(e1, e2), std::pow(std::sin(th), 2), 1e-12);
  }
}

TEST(Schmidt, KnownStates) {
  auto b = schmidt(bell(0, 0));
  EXPECT_NEAR(b.first, 0.5, 1e-15);
  EXPECT_NEAR(b.second, 0.5, 1e-15);
  auto p = schmidt(ket(1, 0, 0, 0));
  EXPECT_NEAR(p.first, 1, 1e-15);
  EXPECT_NEAR(p.second, 0, 1e-15);
}

TEST(Schmidt, MatchesSingularValuesOfAmplitudeMatrix) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 500; ++k) {
    Vector4 v = oracle::random_state(rng);
    Matrix2 amp;
    amp << v(0), v(1), v(2), v(3);
    auto ref = oracle::eig2(amp * amp.adjoint());
    auto got = schmidt(v);
    ASSERT_NEAR(got.first, ref.first, 1e-12);
    ASSERT_NEAR(got.second, ref.second, 1e-12);
    ASSERT_NEAR(got.first + got.second, 1, 1e-12);
    ASSERT_GE(got.first, got.second);
  }
}

TEST(Schmidt, FirstStateStaysMaximallyEntangled) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ub(-5, 5), uj(0, 0.5), ut(-6, 6);
  for (int k = 0; k < 500; ++k) {
    auto s = schmidt(evolution_closed_form(make_params(ub(rng), uj(rng)), ut(rng)) * bell(0, 0));
    ASSERT_NEAR(s.first, 0.5, 1e-10);
  }
}

TEST(SchmidtClosedForm, MatchesReducedDensityOnGrid) {
  const int n = 20;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double th = kPi / 2 * a / (n - 1), j = 0.5 * b / (n - 1), t = 2 * kPi * c / (n - 1);
        Vector4 evolved = evolution_closed_form(make_params(-1.1, j), t) * initial_pair(th).beta2;
        Matrix2 reduced = oracle::reduce(evolved * evolved.adjoint(), 1);
        auto ref = oracle::eig2(reduced);
        SchmidtResult cf = schmidt_closed_form(th, j, t);
        ASSERT_NEAR(cf.lambda1, ref.first, 1e-9) << th << " " << j << " " << t;
        ASSERT_NEAR(cf.lambda2, ref.second, 1e-9);
        ASSERT_FALSE(cf.clamped);
      }
}

TEST(SchmidtClosedForm, Examples) {
  SchmidtResult t0 = schmidt_closed_form(0.6, 0.2, 0);
  EXPECT_NEAR(t0.lambda1, 0.5, 1e-15);
  SchmidtResult th0 = schmidt_closed_form(0, 0.2, 1.4);
  EXPECT_NEAR(th0.lambda1, 0.5, 1e-15);
  SchmidtResult q = schmidt_closed_form(kPi / 2, 0.25, kPi / 2);
  EXPECT_NEAR(q.A_term, 0.75, 1e-15);
  EXPECT_NEAR(q.lambda1, 0.5 * (1 + std::sqrt(0.75)), 1e-15);
  EXPECT_NEAR(q.lambda2, 0.5 * (1 - std::sqrt(0.75)), 1e-15);
  auto numeric = schmidt(evolution_closed_form(make_params(0.3, 0.25), kPi / 2) * initial_pair(kPi / 2).beta2);
  EXPECT_NEAR(numeric.first, q.lambda1, 1e-12);
}

TEST(Witness, KnownValuesAndCompleteness) {
  EXPECT_NEAR(witness_value(density(bell(0, 0)), 0, 0), -1, 1e-15);
  DensityMatrix4 mixed = 0.25 * Matrix4::Identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(witness_value(mixed, i, j), 0.5, 1e-15);
  std::mt19937_64 rng(24);
  for (int k = 0; k < 200; ++k) {
    DensityMatrix4 rho = oracle::random_density(rng);
    double sum = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum += witness_value(rho, i, j);
    ASSERT_NEAR(sum, 2, 1e-12);
  }
}
