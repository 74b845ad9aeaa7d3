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

#include "isingctl/stochastic.hpp"

#include "isingctl/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFormulaTol = 1e-9;

double tr_product(const DensityMatrix4& a, const DensityMatrix4& b) {
  return (a * b).trace().real();
}

std::array<DensityMatrix4, 2> mixed_pair(double theta, const IsingParams& p,
                                         const GaussianTime& g) {
  StatePair pair = initial_pair(theta);
  return {gaussian_mixed_state(density(pair.beta1), p, g),
          gaussian_mixed_state(density(pair.beta2), p, g)};
}

MixedFidelity with_closed_form(double pipeline, double closed) {
  MixedFidelity out;
  out.value = pipeline;
  out.closed_form = closed;
  out.deviation = std::abs(pipeline - closed);
  out.formula_deviation = out.deviation > kFormulaTol;
  return out;
}

}  // namespace

std::optional<double> GaussianTime::ratio() const {
  if (s > 0) return t0 / s;
  return std::nullopt;
}

void validate(const GaussianTime& g) {
  if (!(g.t0 >= 0.0) || !(g.s >= 0.0) || !std::isfinite(g.t0) ||
      !std::isfinite(g.s)) {
    std::ostringstream msg;
    msg << "invalid Gaussian time: t0=" << g.t0 << " s=" << g.s;
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix4 gaussian_mixed_state(const DensityMatrix4& rho,
                                    const IsingParams& p,
                                    const GaussianTime& g) {
  validate(p);
  validate(g);
  require_hermitian(rho);
  Eigensystem4 es = hermitian_eigensystem(normalized_hamiltonian(p));
  const Matrix4& v = es.vectors;
  Matrix4 in_basis = v.adjoint() * rho * v;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      double w = es.values[k] - es.values[l];
      if (std::abs(w) < 1e-12) continue;
      in_basis(k, l) *= std::polar(std::exp(-0.5 * w * w * g.s * g.s), -w * g.t0);
    }
  }
  DensityMatrix4 out = v * in_basis * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Hermite needs >= 1 node");
  GaussHermiteRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double pim4 = std::pow(kPi, -0.25);
  double z = 0.0;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (k + 1)) * p2 - std::sqrt(static_cast<double>(k) / (k + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

DensityMatrix4 quadrature_oracle(const DensityMatrix4& rho,
                                 const IsingParams& p, const GaussianTime& g,
                                 int nodes) {
  validate(p);
  validate(g);
  if (g.s == 0.0) {
    Matrix4 u = evolution_closed_form(p, g.t0);
    return u * rho * u.adjoint();
  }
  if (nodes < 16) throw std::invalid_argument("quadrature oracle needs >= 16 nodes");
  GaussHermiteRule rule = gauss_hermite(nodes);
  DensityMatrix4 out = DensityMatrix4::Zero();
  for (int i = 0; i < nodes; ++i) {
    double t = g.t0 + std::numbers::sqrt2 * g.s * rule.nodes[i];
    Matrix4 u = evolution_closed_form(p, t);
    out += rule.weights[i] * (u * rho * u.adjoint());
  }
  return out / std::sqrt(kPi);
}

WitnessTable witness_table(double theta, const IsingParams& p,
                           const GaussianTime& g) {
  auto rho = mixed_pair(theta, p, g);
  WitnessTable w;
  for (int k = 0; k < 4; ++k) {
    w.rho1[k] = witness_value(rho[0], k / 2, k % 2);
    w.rho2[k] = witness_value(rho[1], k / 2, k % 2);
  }
  const double E = std::exp(-2 * p.b_plus * p.b_plus * g.s * g.s);
  const double ec = E * std::cos(2 * p.b_plus * g.t0);
  const double e2 = std::exp(-2 * g.s * g.s) * std::cos(2 * g.t0);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  const double jj = 4 * p.j * p.j;
  w.rho1_closed_form = {-ec, 1.0, ec, 1.0};
  w.rho2_closed_form = {1 - c2 * (1 - ec), 1 - s2 * ((1 + jj) + (1 - jj) * e2),
                        1 - c2 * (1 + ec), 1 - (1 - jj) * s2 * (1 - e2)};
  for (int k = 0; k < 4; ++k) {
    w.max_deviation_rho1 =
        std::max(w.max_deviation_rho1, std::abs(w.rho1[k] - w.rho1_closed_form[k]));
    w.max_deviation_rho2 =
        std::max(w.max_deviation_rho2, std::abs(w.rho2[k] - w.rho2_closed_form[k]));
  }
  return w;
}

double g_n(double b_plus, double j, double t0, double s) {
  auto term = [&](double w) {
    return std::exp(-0.5 * w * w * s * s) * std::cos(w * t0);
  };
  return (1 - 2 * j) * (term(1 + b_plus + 2 * j) + term(1 - b_plus + 2 * j)) +
         (1 + 2 * j) * (term(1 + b_plus - 2 * j) + term(1 - b_plus - 2 * j));
}

MixedFidelity f_n_mix(double theta, double b_plus, double j, double t0,
                      double s) {
  IsingParams p = make_params(b_plus, j);
  StatePair pair = initial_pair(theta);
  auto rho = mixed_pair(theta, p, {t0, s});
  const double pipeline = 0.5 * (tr_product(density(pair.beta1), rho[0]) +
                                 tr_product(density(pair.beta2), rho[1]));
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double E = std::exp(-2 * b_plus * b_plus * s * s);
  const double closed =
      0.25 * ((1 + E * std::cos(2 * b_plus * t0)) * (1 + std::pow(c, 4)) +
              g_n(b_plus, j, t0, s) * c * c * sn * sn +
              ((1 + 4 * j * j) +
               (1 - 4 * j * j) * std::exp(-2 * s * s) * std::cos(2 * t0)) *
                  std::pow(sn, 4));
  return with_closed_form(pipeline, closed);
}

MixedFidelity f1(double theta, const IsingParams& p, double t0, double s,
                 int n, int m) {
  Situation1Plan plan = plan_situation1(t0, p, n, m);
  Matrix4 v = situation1_correction(plan, p);
  StatePair pair = initial_pair(theta);
  auto rho = mixed_pair(theta, p, {t0, s});
  const double pipeline =
      0.5 * (tr_product(density(pair.beta1), v * rho[0] * v.adjoint()) +
             tr_product(density(pair.beta2), v * rho[1] * v.adjoint()));

  const double j = p.j;
  const double bp = p.b_plus;
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double loop = std::cos(4 * j * n * kPi);
  const double s2 = s * s;
  const double g1 = (1 - 2 * j) * std::exp(-0.5 * (1 + bp + 2 * j) * s2) * loop +
                    (1 - 2 * j) * std::exp(-0.5 * (1 - bp + 2 * j) * s2) +
                    (1 + 2 * j) * std::exp(-0.5 * (1 - bp - 2 * j) * s2) * loop +
                    (1 + 2 * j) * std::exp(-0.5 * (1 + bp - 2 * j) * s2);
  const double closed =
      0.25 * ((1 + std::exp(-2 * bp * bp * s2) * loop) * (1 + std::pow(c, 4)) +
              g1 * c * c * sn * sn +
              ((1 + 4 * j * j) + (1 - 4 * j * j) * std::exp(-2 * s2)) *
                  std::pow(sn, 4));
  return with_closed_form(pipeline, closed);
}

MixedFidelity f2(double theta, const PhysicalFields& f, double t0, double s,
                 double T, int n, int m) {
  Situation2Plan plan = plan_situation2(t0, f, T, n, m);
  IsingParams p = normalize_fields(f);
  Matrix4 v = situation2_correction(plan);
  StatePair pair = initial_pair(theta);
  auto rho = mixed_pair(theta, p, {p.rescaled_time(t0), p.rescaled_time(s)});
  MixedFidelity out;
  out.value = 0.5 * (tr_product(density(pair.beta1), v * rho[0] * v.adjoint()) +
                     tr_product(density(pair.beta2), v * rho[1] * v.adjoint()));
  return out;
}

F2PrintedTerms f2_printed_terms(const PhysicalFields& f, double t0, double s,
                                const Situation2Plan& plan) {
  IsingParams p = normalize_fields(f);
  const double t = p.rescaled_time(t0);
  const double sr = p.rescaled_time(s);
  const double e2 = std::exp(-2 * sr * sr);
  auto D = [&](double delta) {
    return (1 + 4 * p.j * p.j * std::cos(delta)) +
           p.b_minus * e2 * std::sin(delta) * std::sin(2 * t) +
           (1 - 4 * p.j * p.j) * e2 * std::cos(delta) * std::cos(2 * t);
  };
  F2PrintedTerms out;
  out.A = 1 + std::exp(-2 * p.b_plus * p.b_plus * sr * sr);
  out.D_planner_delta = D(plan.Delta);
  out.D_phi_sum_delta = D(plan.phi + plan.phi_prime);
  return out;
}

double AbdCoefficients::evaluate(double theta) const {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  return 0.25 * (A * (1 + c2 * c2) + G * c2 * s2 + D * s2 * s2);
}

AbdCoefficients abd_decompose(const std::function<double(double)>& scheme) {
  AbdCoefficients abd;
  abd.A = 2 * scheme(0.0);
  abd.D = 4 * scheme(kPi / 2) - abd.A;
  abd.G = 16 * scheme(kPi / 4) - 5 * abd.A - abd.D;
  for (double probe : {kPi / 8, 3 * kPi / 8}) {
    abd.residual = std::max(abd.residual, std::abs(abd.evaluate(probe) - scheme(probe)));
  }
  if (abd.residual > 1e-6) {
    std::ostringstream msg;
    msg << "scheme is not of the A/G/D form: probe residual " << abd.residual;
    throw StructuralMismatch(msg.str());
  }
  return abd;
}

}  // namespace isingctl
