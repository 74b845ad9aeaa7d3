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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace isingctl;

namespace {

constexpr double kPi = std::numbers::pi;

LocalPovm random_povm(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(0, kPi), b(0, 2 * kPi);
  return {a(rng), a(rng), b(rng), b(rng)};
}

Vector2 delta(double th, double al) {
  return Vector2(std::cos(th / 2), std::polar(std::sin(th / 2), al));
}
Vector2 epsilon(double th, double al) {
  return Vector2(std::sin(th / 2), -std::polar(std::cos(th / 2), al));
}

}  // namespace

TEST(PovmStates, ComputationalOrderAndCompleteness) {
  auto v = povm_states(computational_povm());
  const int expected_index[4] = {0, 3, 1, 2};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(v[k](expected_index[k])), 1, 1e-15);

  std::mt19937_64 rng(41);
  for (int k = 0; k < 1000; ++k) {
    LocalPovm p = random_povm(rng);
    auto s = povm_states(p);
    Matrix4 sum = Matrix4::Zero();
    for (int a = 0; a < 4; ++a) {
      sum += projector(s[a]);
      for (int b = 0; b < 4; ++b) ASSERT_NEAR(std::abs(s[a].dot(s[b])), a == b ? 1 : 0, 1e-12);
    }
    ASSERT_LT(max_abs(sum - Matrix4::Identity()), 1e-12);
    // Order is (dd, ee, de, ed).
    ASSERT_LT(max_abs(s[2] - kron(delta(p.theta1, p.alpha1), epsilon(p.theta2, p.alpha2))), 1e-14);
    ASSERT_LT(max_abs(s[3] - kron(epsilon(p.theta1, p.alpha1), delta(p.theta2, p.alpha2))), 1e-14);
  }
}

TEST(Table1Povm, Angles) {
  const double th = 0.4;
  LocalPovm a = table1_povm(th, Table1Variant::A);
  EXPECT_NEAR(a.theta1, (kPi - 2 * th) / 2, 1e-15);
  EXPECT_NEAR(a.theta2, a.theta1, 1e-15);
  EXPECT_EQ(a.alpha1, 0);
  LocalPovm a_half = table1_povm(kPi / 2, Table1Variant::A);
  EXPECT_NEAR(a_half.theta1, 0, 1e-15);
  LocalPovm b0 = table1_povm(0, Table1Variant::B);
  // Half-angle pi/4 with the sign carried by the phase.
  EXPECT_NEAR(b0.theta1 / 2, kPi / 4, 1e-15);
  EXPECT_NEAR(b0.alpha1, kPi, 1e-15);
}

TEST(Helstrom, Examples) {
  for (double th = 0; th <= kPi / 2; th += 0.1) {
    StatePair pair = initial_pair(th);
    HelstromProbabilities h = helstrom(density(pair.beta1), density(pair.beta2), computational_povm());
    EXPECT_NEAR(h.p_h1, 1, 1e-15);
    EXPECT_NEAR(h.p_h2, std::pow(std::sin(th), 2), 1e-15);
  }
  std::mt19937_64 rng(42);
  DensityMatrix4 mixed = 0.25 * Matrix4::Identity();
  for (int k = 0; k < 50; ++k) {
    HelstromProbabilities h = helstrom(mixed, mixed, random_povm(rng));
    EXPECT_NEAR(h.p_h1, 0.5, 1e-14);
    EXPECT_NEAR(h.p_h2, 0.5, 1e-14);
  }
}

TEST(AverageFidelity, MatchesTermwiseExpansion) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 300; ++k) {
    PurePair orig{oracle::random_state(rng), oracle::random_state(rng)};
    PurePair dist{oracle::random_state(rng), oracle::random_state(rng)};
    PurePair rep{oracle::random_state(rng), oracle::random_state(rng)};
    LocalPovm p = random_povm(rng);
    auto v = povm_states(p);
    Matrix4 vote1 = projector(v[0]) + projector(v[1]);
    Matrix4 vote2 = projector(v[2]) + projector(v[3]);
    const double p1 = dist.first.dot(vote1 * dist.first).real();
    const double p2 = dist.second.dot(vote2 * dist.second).real();
    auto F = [](const Vector4& a, const Vector4& b) { return std::norm(a.dot(b)); };
    const double ref = 0.5 * (p1 * F(orig.first, rep.first) + (1 - p1) * F(orig.first, rep.second)) +
                       0.5 * (p2 * F(orig.second, rep.second) + (1 - p2) * F(orig.second, rep.first));
    SchemeResult got = average_fidelity(orig, dist, rep, p);
    ASSERT_NEAR(got.avg_fidelity, ref, 1e-13);
    ASSERT_NEAR(got.p_h1, p1, 1e-13);
    MixedPair mo{projector(orig.first), projector(orig.second)};
    MixedPair md{projector(dist.first), projector(dist.second)};
    MixedPair mr{projector(rep.first), projector(rep.second)};
    ASSERT_NEAR(average_fidelity(mo, md, mr, p).avg_fidelity, ref, 1e-13);
  }
}

TEST(AverageFidelity, BoundsAndPerfectCase) {
  StatePair pair = initial_pair(1.0);
  PurePair o{pair.beta1, pair.beta2};
  EXPECT_NEAR(average_fidelity(o, o, o, table1_povm(1.0, Table1Variant::A)).avg_fidelity, 1, 1e-12);
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> uth(0, kPi / 2), ub(-5, 5), uj(0, 0.5), ut(-6, 6);
  for (int k = 0; k < 500; ++k) {
    for (ObjectiveMode mode : {ObjectiveMode::as_printed, ObjectiveMode::reprepare_originals}) {
      double v = scheme_fidelity(uth(rng), ub(rng), uj(rng), ut(rng), random_povm(rng), mode).avg_fidelity;
      ASSERT_GE(v, -1e-12);
      ASSERT_LE(v, 1 + 1e-12);
    }
  }
}

TEST(FDr1, ClosedFormPipelineAndMonotone) {
  EXPECT_NEAR(f_dr1(0), 0.5, 1e-15);
  EXPECT_NEAR(f_dr1(kPi / 2), 1, 1e-15);
  EXPECT_NEAR(f_dr1(kPi / 4), 0.75, 1e-15);
  double prev = 0;
  for (double th = 0; th <= kPi / 2; th += 0.01) {
    const double v = f_dr1(th);
    EXPECT_NEAR(v, 0.5 * (1 + std::pow(std::sin(th), 2)), 1e-15);
    EXPECT_GE(v, prev);
    prev = v;
    // No distortion (t = 0), computational measurement, originals reprepared.
    EXPECT_NEAR(scheme_fidelity(th, 0.8, 0.3, 0, computational_povm(),
                                ObjectiveMode::reprepare_originals).avg_fidelity,
                v, 1e-12);
  }
}

TEST(FN, ClosedFormEqualsPipelineOnGrid) {
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          const double th = kPi / 2 * a / 19, bp = -5 + 10.0 * b / 19, j = 0.5 * c / 4,
                       t = 2 * kPi * d / 4;
          // Reference through Taylor exponentials, independent of the closed form.
          Matrix4 u = oracle::expm(Complex(0, -t) * oracle::ising_hamiltonian(
                                                        0.5 * (bp + std::sqrt(1 - 4 * j * j)),
                                                        0.5 * (bp - std::sqrt(1 - 4 * j * j)), j));
          StatePair pair = initial_pair(th);
          const double ref = 0.5 * (std::norm(pair.beta1.dot(u * pair.beta1)) +
                                    std::norm(pair.beta2.dot(u * pair.beta2)));
          ASSERT_NEAR(f_n(th, bp, j, t), ref, 1e-9);
          ASSERT_NEAR(f_n_pipeline(th, bp, j, t), ref, 1e-9);
        }
}

TEST(FN, Limits) {
  const double bp = 1.3, j = 0.2, t = 0.9;
  EXPECT_NEAR(f_n(0.3, bp, j, 0), 1, 1e-15);
  EXPECT_NEAR(f_n(0, bp, j, t), std::pow(std::cos(bp * t), 2), 1e-12);
  EXPECT_NEAR(f_n(kPi / 2, bp, j, t),
              0.5 * (1 + (4 * j * j - 1) * std::pow(std::sin(t), 2) + std::pow(std::cos(bp * t), 2)),
              1e-12);
  // No field and j = 1/2: both states are stationary.
  EXPECT_NEAR(f_n(0.7, 0, 0.5, 2.3), 1, 1e-12);
}

TEST(FAB, LimitsAndFrozenValue) {
  for (double bp : {0.0, 0.5, 1.0, 2.0, 4.5})
    for (double t : {0.3, kPi / 2, 2.0}) {
      EXPECT_NEAR(f_ab(1e-4, bp, 1.0 / 6, t), std::pow(std::cos(bp * t), 2), 1e-6);
      EXPECT_NEAR(f_ab(kPi / 2, bp, 1.0 / 6, t), 1, 1e-10);
      EXPECT_LT(std::abs(f_ab(1e-3, bp, 0.3, t) - f_n(1e-3, bp, 0.3, t)), 1e-4);
    }
  EXPECT_NEAR(f_ab(kPi / 4, 1, 1.0 / 6, kPi / 2), 35.0 / 72.0, 1e-12);
  // The two Table I measurements give the same value.
  for (double th = 0.1; th < 1.5; th += 0.23) {
    EXPECT_NEAR(scheme_fidelity(th, 1.4, 0.3, 0.8, table1_povm(th, Table1Variant::B),
                                ObjectiveMode::reprepare_originals).avg_fidelity,
                f_ab(th, 1.4, 0.3, 0.8), 1e-12);
  }
}

TEST(FAB, PrintedFormDoesNotReachOneAtHalfPi) {
  EXPECT_GT(std::abs(f_ab_printed(kPi / 2, 1, 1.0 / 6, kPi / 2) - 1), 1e-3);
}

TEST(Table1Povm, ZeroFieldGivesUnitFidelity) {
  for (double th = 0; th <= kPi / 2; th += 0.05)
    for (Table1Variant v : {Table1Variant::A, Table1Variant::B})
      for (ObjectiveMode mode : {ObjectiveMode::as_printed, ObjectiveMode::reprepare_originals})
        EXPECT_NEAR(scheme_fidelity(th, 0, 0.5, 1.7, table1_povm(th, v), mode).avg_fidelity, 1, 1e-12);
}

TEST(FSO, MaxOfComponents) {
  EXPECT_NEAR(f_so(kPi / 2, 1, 1.0 / 6, kPi / 2), 1, 1e-12);
  EXPECT_NEAR(f_so(0, 1, 1.0 / 6, kPi / 2), 0.5, 1e-12);
  for (double th = 0; th <= kPi / 2; th += 0.1)
    for (double bp = 0; bp <= 5; bp += 0.5) {
      const double v = f_so(th, bp, 1.0 / 6, kPi / 2);
      EXPECT_GE(v, f_dr1(th));
      EXPECT_GE(v, f_ab(th, bp, 1.0 / 6, kPi / 2));
    }
}

TEST(CriticalFidelities, Endpoints) {
  auto z = critical_fidelities(0);
  std::array<double, 7> want0{0, 0.5, 0.5, 0.5, 0.5, 0.5, 1};
  auto h = critical_fidelities(kPi / 2);
  std::array<double, 7> want1{0, 0, 0, 0.5, 1, 1, 1};
  for (int k = 0; k < 7; ++k) {
    EXPECT_NEAR(z[k], want0[k], 1e-15);
    EXPECT_NEAR(h[k], want1[k], 1e-15);
  }
}

TEST(ObjectiveModeNames, RoundTrip) {
  for (ObjectiveMode m : {ObjectiveMode::as_printed, ObjectiveMode::reprepare_originals})
    EXPECT_EQ(objective_mode_from_string(to_string(m)), m);
  EXPECT_THROW(objective_mode_from_string("best"), std::invalid_argument);
}
