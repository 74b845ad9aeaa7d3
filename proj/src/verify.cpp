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

#include "isingctl/verify.hpp"

#include "isingctl/discrimination.hpp"
#include "isingctl/ising_evolution.hpp"
#include "isingctl/states.hpp"
#include "isingctl/stochastic.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;

double grid(double lo, double hi, int i, int n) {
  return lo + (hi - lo) * i / (n - 1);
}

class Suite {
 public:
  Suite(std::string name, double tol) { report_.name = std::move(name); report_.tolerance = tol; }
  void check(double deviation) {
    ++report_.checks;
    if (!(deviation <= report_.max_deviation)) report_.max_deviation = deviation;
  }
  SuiteReport done() {
    report_.passed = report_.checks > 0 && report_.max_deviation < report_.tolerance;
    return report_;
  }

 private:
  SuiteReport report_;
};

SuiteReport propagator_suite(int draws) {
  Suite suite("propagator closed form vs spectral oracle", 1e-10);
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> uj(0.0, 0.5), ub(-5.0, 5.0),
      ut(-2 * kPi, 2 * kPi), uR(0.25, 4.0);
  for (int k = 0; k < draws; ++k) {
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    IsingParams p = make_params(ub(rng), uj(rng), sign, uR(rng));
    const double t = ut(rng);
    Matrix4 closed = evolution_closed_form(p, t);
    Matrix4 oracle = evolution_oracle(p.physical(), t / p.R);
    suite.check(max_abs(closed - oracle));
  }
  return suite.done();
}

SuiteReport schmidt_suite(int n) {
  Suite suite("Schmidt closed form vs reduced density", 1e-9);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double theta = grid(0, kPi / 2, a, n);
        const double j = grid(0, 0.5, b, n);
        const double t = grid(0, 2 * kPi, c, n);
        IsingParams p = make_params(0.7, j);
        TwoQubitState evolved = evolution_closed_form(p, t) * initial_pair(theta).beta2;
        auto numeric = schmidt(evolved);
        SchmidtResult closed = schmidt_closed_form(theta, j, t);
        suite.check(std::max(std::abs(closed.lambda1 - numeric.first),
                             std::abs(closed.lambda2 - numeric.second)));
      }
    }
  }
  return suite.done();
}

SuiteReport fn_suite(int n, const VerifyOverrides& overrides) {
  Suite suite("do-nothing fidelity closed form vs pipeline", 1e-9);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ub(-5.0, 5.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double theta = grid(0, kPi / 2, a, n);
        const double t = grid(0, 2 * kPi, b, n);
        const double j = grid(0, 0.5, c, n);
        const double bp = ub(rng);
        const double closed = overrides.f_n ? overrides.f_n(theta, bp, j, t)
                                            : f_n(theta, bp, j, t);
        suite.check(std::abs(closed - f_n_pipeline(theta, bp, j, t)));
      }
    }
  }
  return suite.done();
}

SuiteReport mixing_suite(int n) {
  Suite suite("Gaussian mixing analytic vs 64-node quadrature", 1e-8);
  const double t0s[] = {kPi / 2, 3 * kPi / 4, 7 * kPi / 4};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (double t0 : t0s) {
        for (int c = 0; c < n; ++c) {
          const double theta = grid(0, kPi / 2, a, n);
          PhysicalFields f{0.3 + 0.8 * b, -0.4 + 0.1 * b, 0.25};
          IsingParams p = normalize_fields(f);
          GaussianTime g{t0, grid(0, t0 / 3, c, n)};
          for (const TwoQubitState& v : {initial_pair(theta).beta1, initial_pair(theta).beta2}) {
            DensityMatrix4 rho = density(v);
            suite.check(max_abs(gaussian_mixed_state(rho, p, g) - quadrature_oracle(rho, p, g, 64)));
          }
        }
      }
    }
  }
  return suite.done();
}

SuiteReport witness_suite(int n, bool second_state) {
  Suite suite(second_state ? "witness closed forms, second state"
                           : "witness closed forms, first state",
              1e-9);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double bp = grid(-2, 2, a, n);
        const double t0 = grid(0.1, 2 * kPi, b, n);
        const double s = grid(0, 1.5, c, n);
        for (double theta : {0.0, kPi / 5, kPi / 2}) {
          WitnessTable w = witness_table(theta, make_params(bp, 0.3), {t0, s});
          suite.check(second_state ? w.max_deviation_rho2 : w.max_deviation_rho1);
        }
      }
    }
  }
  return suite.done();
}

SuiteReport mixed_fn_suite(int n) {
  Suite suite("mixed do-nothing closed form vs pipeline", 1e-9);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double theta = grid(0, kPi / 2, a, n);
        const double t0 = grid(0, 2 * kPi, b, n);
        const double s = grid(0, 2, c, n);
        suite.check(f_n_mix(theta, 1.3 - 0.4 * a, 0.1 + 0.05 * c, t0, s).deviation);
      }
    }
  }
  return suite.done();
}

}  // namespace

VerifyLevel verify_level_from_string(const std::string& name) {
  if (name == "fast") return VerifyLevel::fast;
  if (name == "full") return VerifyLevel::full;
  throw std::invalid_argument("unknown verify level '" + name + "'");
}

bool VerifyReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed) return false;
  }
  return !suites.empty();
}

VerifyReport run_verify(VerifyLevel level, const VerifyOverrides& overrides) {
  const bool full = level == VerifyLevel::full;
  VerifyReport report;
  auto run = [&](auto&& fn) {
    try {
      report.suites.push_back(fn());
    } catch (const std::exception& e) {
      SuiteReport failed;
      failed.name = std::string("suite raised: ") + e.what();
      report.suites.push_back(failed);
    }
  };
  run([&] { return propagator_suite(full ? 10000 : 500); });
  run([&] { return schmidt_suite(full ? 20 : 6); });
  run([&] { return fn_suite(full ? 20 : 6, overrides); });
  run([&] { return mixing_suite(full ? 5 : 2); });
  run([&] { return witness_suite(full ? 8 : 3, false); });
  run([&] { return witness_suite(full ? 8 : 3, true); });
  run([&] { return mixed_fn_suite(full ? 8 : 3); });
  return report;
}

void print(const VerifyReport& report, std::ostream& out) {
  char buf[256];
  for (const auto& s : report.suites) {
    std::snprintf(buf, sizeof buf, "%s %s max_dev=%.3g tol=%.3g checks=%ld\n",
                  s.passed ? "PASS" : "FAIL", s.name.c_str(), s.max_deviation,
                  s.tolerance, s.checks);
    out << buf;
  }
  out << (report.passed() ? "verify: all suites passed\n" : "verify: FAILED\n");
}

}  // namespace isingctl
