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

#include "isingctl/optimize.hpp"

#include "isingctl/ising_evolution.hpp"
#include "isingctl/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace isingctl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

double& coord(LocalPovm& p, int k) {
  switch (k) {
    case 0: return p.theta1;
    case 1: return p.theta2;
    case 2: return p.alpha1;
    default: return p.alpha2;
  }
}

void fold(double& theta, double& alpha) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  if (theta > kPi) {
    theta = kTwoPi - theta;
    alpha += kPi;
  }
  alpha = std::fmod(alpha, kTwoPi);
  if (alpha < 0) alpha += kTwoPi;
}

// Strictly better, ties broken toward the lexicographically smaller angles.
bool better(double v, const LocalPovm& p, double best_v, const LocalPovm& best_p) {
  return v > best_v || (v == best_v && p < best_p);
}

}  // namespace

FidelityObjective::FidelityObjective(double theta, double b_plus, double j,
                                     double t, ObjectiveMode mode) {
  StatePair pair = initial_pair(theta);
  Matrix4 u = evolution_closed_form(make_params(b_plus, j), t);
  distorted1_ = u * pair.beta1;
  distorted2_ = u * pair.beta2;
  const TwoQubitState& r1 =
      mode == ObjectiveMode::as_printed ? distorted1_ : pair.beta1;
  const TwoQubitState& r2 =
      mode == ObjectiveMode::as_printed ? distorted2_ : pair.beta2;
  f11_ = std::norm(pair.beta1.dot(r1));
  f12_ = std::norm(pair.beta1.dot(r2));
  f22_ = std::norm(pair.beta2.dot(r2));
  f21_ = std::norm(pair.beta2.dot(r1));
}

double FidelityObjective::operator()(const LocalPovm& povm) const {
  auto v = povm_states(povm);
  const double p1 = std::norm(v[0].dot(distorted1_)) + std::norm(v[1].dot(distorted1_));
  const double p2 = std::norm(v[2].dot(distorted2_)) + std::norm(v[3].dot(distorted2_));
  return 0.5 * (p1 * f11_ + (1 - p1) * f12_) + 0.5 * (p2 * f22_ + (1 - p2) * f21_);
}

LocalPovm canonical(const LocalPovm& povm) {
  LocalPovm out = povm;
  fold(out.theta1, out.alpha1);
  fold(out.theta2, out.alpha2);
  return out;
}

RefineResult local_refine(const PovmObjective& objective, const LocalPovm& start,
                          double initial_step, const OptimizerSettings& settings) {
  RefineResult r;
  r.povm = start;
  r.value = objective(start);
  r.history.push_back(r.value);
  double step = initial_step;
  while (step >= settings.refine_tolerance) {
    if (r.steps >= settings.max_refine_steps) {
      r.converged = false;
      r.povm = canonical(r.povm);
      return r;
    }
    ++r.steps;
    bool moved = false;
    for (int k = 0; k < 4; ++k) {
      for (double dir : {1.0, -1.0}) {
        LocalPovm trial = r.povm;
        coord(trial, k) += dir * step;
        const double v = objective(trial);
        if (v > r.value) {
          r.povm = trial;
          r.value = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved) step *= 0.5;
    r.history.push_back(r.value);
  }
  r.converged = true;
  r.povm = canonical(r.povm);
  return r;
}

OptimizeResult optimize_povm(const PovmObjective& objective, double theta,
                             const OptimizerSettings& settings) {
  const int g = std::max(4, settings.grid_per_axis);
  struct Seed {
    LocalPovm povm;
    double value;
  };
  std::vector<Seed> grid;
  grid.reserve(static_cast<std::size_t>(g) * g * g * g);
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int c = 0; c < g; ++c)
        for (int d = 0; d < g; ++d) {
          LocalPovm p{kPi * a / (g - 1), kPi * b / (g - 1), kTwoPi * c / g,
                      kTwoPi * d / g};
          grid.push_back({p, objective(p)});
        }
  const int top = std::clamp(settings.refine_top, 0, static_cast<int>(grid.size()));
  std::partial_sort(grid.begin(), grid.begin() + top, grid.end(),
                    [](const Seed& x, const Seed& y) {
                      return better(x.value, x.povm, y.value, y.povm);
                    });

  std::vector<LocalPovm> starts = {computational_povm(),
                                   table1_povm(theta, Table1Variant::A),
                                   table1_povm(theta, Table1Variant::B)};
  for (int k = 0; k < top; ++k) starts.push_back(grid[k].povm);

  OptimizeResult best;
  best.povm = grid.front().povm;
  best.value = grid.front().value;
  const double step = 0.5 * kPi / (g - 1);
  for (const LocalPovm& s : starts) {
    RefineResult r = local_refine(objective, s, step, settings);
    ++best.seeds_refined;
    best.converged = best.converged && r.converged;
    if (better(r.value, r.povm, best.value, best.povm)) {
      best.value = r.value;
      best.povm = r.povm;
    }
  }
  return best;
}

OptimizeResult optimize_fdr2(double theta, double b_plus, double j, double t,
                             const OptimizerSettings& settings) {
  FidelityObjective objective(theta, b_plus, j, t, settings.objective_mode);
  return optimize_povm(std::cref(objective), theta, settings);
}

double zero_field_objective(double theta, const LocalPovm& p) {
  const double s2 = std::sin(2 * theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return std::cos(p.alpha1) * std::sin(p.theta1) *
             (std::cos(p.theta2) * s2 +
              2 * std::cos(p.alpha2) * c * c * std::sin(p.theta2)) +
         std::cos(p.theta1) * (2 * std::cos(p.theta2) * s * s +
                               std::cos(p.alpha2) * s2 * std::sin(p.theta2)) -
         2 * std::sin(p.alpha1) * std::sin(p.alpha2) * std::sin(p.theta1) * std::sin(p.theta2);
}

std::array<double, 4> zero_field_gradient(double theta, const LocalPovm& p) {
  const double s2 = std::sin(2 * theta);
  const double cc = std::cos(theta) * std::cos(theta);
  const double ss = std::sin(theta) * std::sin(theta);
  const double ca1 = std::cos(p.alpha1), sa1 = std::sin(p.alpha1);
  const double ca2 = std::cos(p.alpha2), sa2 = std::sin(p.alpha2);
  const double ct1 = std::cos(p.theta1), st1 = std::sin(p.theta1);
  const double ct2 = std::cos(p.theta2), st2 = std::sin(p.theta2);
  const double first = ct2 * s2 + 2 * ca2 * cc * st2;
  const double second = 2 * ct2 * ss + ca2 * s2 * st2;
  return {
      ca1 * ct1 * first - st1 * second - 2 * sa1 * sa2 * ct1 * st2,
      ca1 * st1 * (-st2 * s2 + 2 * ca2 * cc * ct2) +
          ct1 * (-2 * st2 * ss + ca2 * s2 * ct2) - 2 * sa1 * sa2 * st1 * ct2,
      -sa1 * st1 * first - 2 * ca1 * sa2 * st1 * st2,
      ca1 * st1 * (-2 * sa2 * cc * st2) + ct1 * (-sa2 * s2 * st2) -
          2 * sa1 * ca2 * st1 * st2,
  };
}

std::vector<double> zero_field_stationary_fidelities(double theta,
                                                     int seeds_per_axis) {
  using Vec = Eigen::Vector4d;
  auto grad = [&](const Vec& x) {
    auto g = zero_field_gradient(theta, {x(0), x(1), x(2), x(3)});
    return Vec(g[0], g[1], g[2], g[3]);
  };
  std::vector<double> values;
  const int n = std::max(2, seeds_per_axis);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          // Offset seeds so none sits on a symmetry plane.
          Vec x(0.1 + (kPi - 0.2) * a / (n - 1), 0.1 + (kPi - 0.2) * b / (n - 1),
                0.1 + kTwoPi * c / n, 0.1 + kTwoPi * d / n);
          for (int it = 0; it < 60; ++it) {
            Vec g = grad(x);
            if (g.norm() < 1e-13) break;
            Eigen::Matrix4d h;
            const double eps = 1e-5;
            for (int k = 0; k < 4; ++k) {
              Vec e = Vec::Zero();
              e(k) = eps;
              h.col(k) = (grad(x + e) - grad(x - e)) / (2 * eps);
            }
            Vec dx = h.completeOrthogonalDecomposition().solve(-g);
            if (!dx.allFinite()) break;
            x += dx;
          }
          if (grad(x).norm() < 1e-9) {
            values.push_back(0.5 + 0.25 * zero_field_objective(
                                              theta, {x(0), x(1), x(2), x(3)}));
          }
        }
  std::sort(values.begin(), values.end());
  std::vector<double> merged;
  for (double v : values) {
    if (merged.empty() || v - merged.back() > 1e-7) merged.push_back(v);
  }
  return merged;
}

}  // namespace isingctl
