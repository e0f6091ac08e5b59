// Copyright 2026 The isoinertia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoinertia/optimizer.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "isoinertia/error.h"

namespace isoinertia {
namespace {

// Packed index of each coefficient of mode k >= 1.
int IndexA(int k) { return 4 * k - 2; }
int IndexAPrime(int k) { return 4 * k - 1; }
int IndexB(int k) { return 4 * k; }
int IndexBPrime(int k) { return 4 * k + 1; }

bool IsGauge(int index) {
  return index == 0 || index == 1 || index == IndexAPrime(1) ||
         index == IndexB(1);
}

int DefaultNodes(const FourierBoundary& fb, int nodes) {
  return nodes > 0 ? nodes : std::max(128, 32 * fb.order());
}

// Derivatives of a functional with respect to the sampled curve values
// x_j, y_j, x'_j, y'_j.
struct NodePartials {
  std::vector<double> x, y, dx, dy;
  explicit NodePartials(int n) : x(n, 0.0), y(n, 0.0), dx(n, 0.0), dy(n, 0.0) {}
};

// Chain rule from node values to the packed coefficients.
std::vector<double> Project(const FourierBoundary& fb,
                            const NodePartials& partials) {
  const int n = static_cast<int>(partials.x.size());
  const int order = fb.order();
  std::vector<double> grad(2 + 4 * order, 0.0);
  for (int j = 0; j < n; ++j) {
    const double s = 2.0 * kPi * j / n;
    grad[0] += 0.5 * partials.x[j];
    grad[1] += 0.5 * partials.y[j];
    for (int k = 1; k <= order; ++k) {
      const double c = std::cos(k * s);
      const double sn = std::sin(k * s);
      grad[IndexA(k)] += partials.x[j] * c - partials.dx[j] * k * sn;
      grad[IndexAPrime(k)] += partials.x[j] * sn + partials.dx[j] * k * c;
      grad[IndexB(k)] += partials.y[j] * c - partials.dy[j] * k * sn;
      grad[IndexBPrime(k)] += partials.y[j] * sn + partials.dy[j] * k * c;
    }
  }
  return grad;
}

struct Evaluation {
  double objective = 0.0;  // I_x I_y about the boundary centroid
  double area = 0.0;
  double speed = 0.0;      // speed variance penalty
  std::vector<double> objective_grad;
  std::vector<double> area_grad;
  std::vector<double> speed_grad;
};

Evaluation Evaluate(const FourierBoundary& fb, int nodes, bool gradients) {
  const int n = DefaultNodes(fb, nodes);
  std::vector<Vec2> p, t;
  SampleBoundary(fb, n, p, t);
  const double w = 2.0 * kPi / n;

  double length = 0.0, mx = 0.0, my = 0.0, ix = 0.0, iy = 0.0, area = 0.0;
  double mean_q = 0.0;
  std::vector<double> v(n), q(n);
  for (int j = 0; j < n; ++j) {
    q[j] = t[j].squaredNorm();
    v[j] = std::sqrt(q[j]);
    const double x = p[j].x(), y = p[j].y();
    length += w * v[j];
    mx += w * x * v[j];
    my += w * y * v[j];
    ix += w * x * x * v[j];
    iy += w * y * y * v[j];
    area += w * 0.5 * (x * t[j].y() - y * t[j].x());
    mean_q += q[j] / n;
  }
  const double ixc = ix - mx * mx / length;
  const double iyc = iy - my * my / length;
  double variance = 0.0;
  for (int j = 0; j < n; ++j) variance += (q[j] - mean_q) * (q[j] - mean_q);

  Evaluation e;
  e.objective = ixc * iyc;
  e.area = area;
  e.speed = variance / (n * mean_q * mean_q);
  if (!gradients) return e;

  const double g_ix = iyc;
  const double g_iy = ixc;
  const double g_mx = -2.0 * iyc * mx / length;
  const double g_my = -2.0 * ixc * my / length;
  const double g_l =
      iyc * mx * mx / (length * length) + ixc * my * my / (length * length);
  NodePartials obj(n), ar(n), sp(n);
  for (int j = 0; j < n; ++j) {
    const double x = p[j].x(), y = p[j].y();
    obj.x[j] = w * (g_ix * 2.0 * x * v[j] + g_mx * v[j]);
    obj.y[j] = w * (g_iy * 2.0 * y * v[j] + g_my * v[j]);
    const double speed_weight =
        w * (g_l + g_ix * x * x + g_mx * x + g_iy * y * y + g_my * y) / v[j];
    obj.dx[j] = speed_weight * t[j].x();
    obj.dy[j] = speed_weight * t[j].y();

    ar.x[j] = 0.5 * w * t[j].y();
    ar.y[j] = -0.5 * w * t[j].x();
    ar.dx[j] = -0.5 * w * y;
    ar.dy[j] = 0.5 * w * x;

    const double dq = 2.0 * (q[j] - mean_q) / (n * mean_q * mean_q) -
                      2.0 * variance / (n * n * mean_q * mean_q * mean_q);
    sp.dx[j] = dq * 2.0 * t[j].x();
    sp.dy[j] = dq * 2.0 * t[j].y();
  }
  e.objective_grad = Project(fb, obj);
  e.area_grad = Project(fb, ar);
  e.speed_grad = Project(fb, sp);
  return e;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double InfNorm(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

// Infinity norm of `gradient` after removing its component along the area
// gradient (both over the free coordinates).
double TangentialNorm(const std::vector<double>& gradient,
                      const Evaluation& e, const std::vector<int>& free) {
  double ga = 0.0, aa = 0.0;
  for (std::size_t i = 0; i < free.size(); ++i) {
    ga += gradient[i] * e.area_grad[free[i]];
    aa += e.area_grad[free[i]] * e.area_grad[free[i]];
  }
  const double t = aa > 0.0 ? ga / aa : 0.0;
  double m = 0.0;
  for (std::size_t i = 0; i < free.size(); ++i) {
    m = std::max(m, std::abs(gradient[i] - t * e.area_grad[free[i]]));
  }
  return m;
}

// The augmented Lagrangian over the free (non-gauge) coordinates.
class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const OptimizationProblem& problem, int order)
      : problem_(problem), size_(2 + 4 * order) {
    for (int i = 0; i < size_; ++i) {
      if (!IsGauge(i)) free_.push_back(i);
    }
  }

  const std::vector<int>& free() const { return free_; }

  // Returns +inf for curves that are not simple.
  double Value(const std::vector<double>& packed, Evaluation* out,
               std::vector<double>* gradient) const {
    const FourierBoundary fb = UnpackCoefficients(packed);
    if (!CheckSimple(fb).simple) return std::numeric_limits<double>::infinity();
    const Evaluation e = Evaluate(fb, problem_.quadrature_nodes, gradient);
    const double c = (e.area - problem_.target_area) / problem_.target_area;
    const double value = e.objective + problem_.speed_weight * e.speed -
                         multiplier * c + 0.5 * penalty * c * c;
    if (gradient) {
      gradient->assign(free_.size(), 0.0);
      const double dc = (penalty * c - multiplier) / problem_.target_area;
      for (std::size_t i = 0; i < free_.size(); ++i) {
        const int idx = free_[i];
        (*gradient)[i] = e.objective_grad[idx] +
                         problem_.speed_weight * e.speed_grad[idx] +
                         dc * e.area_grad[idx];
      }
    }
    if (out) *out = e;
    return value;
  }

  double multiplier = 0.0;  // on the relative area residual
  double penalty = 0.0;

 private:
  const OptimizationProblem& problem_;
  int size_;
  std::vector<int> free_;
};

}  // namespace

std::vector<double> PackCoefficients(const FourierBoundary& fb) {
  std::vector<double> packed(2 + 4 * fb.order());
  packed[0] = fb.a0;
  packed[1] = fb.b0;
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    packed[IndexA(k)] = m.a;
    packed[IndexAPrime(k)] = m.a_prime;
    packed[IndexB(k)] = m.b;
    packed[IndexBPrime(k)] = m.b_prime;
  }
  return packed;
}

FourierBoundary UnpackCoefficients(const std::vector<double>& packed) {
  if (packed.size() < 2 || (packed.size() - 2) % 4 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad packed coefficient length");
  }
  FourierBoundary fb;
  fb.a0 = packed[0];
  fb.b0 = packed[1];
  fb.modes.resize((packed.size() - 2) / 4);
  for (int k = 1; k <= fb.order(); ++k) {
    FourierMode& m = fb.mode(k);
    m.a = packed[IndexA(k)];
    m.a_prime = packed[IndexAPrime(k)];
    m.b = packed[IndexB(k)];
    m.b_prime = packed[IndexBPrime(k)];
  }
  return fb;
}

double ObjectiveValue(const FourierBoundary& fb, int nodes) {
  return Evaluate(fb, nodes, /*gradients=*/false).objective;
}

std::vector<double> ObjectiveGradient(const FourierBoundary& fb, int nodes) {
  return Evaluate(fb, nodes, /*gradients=*/true).objective_grad;
}

std::vector<double> AreaGradient(const FourierBoundary& fb, int nodes) {
  return Evaluate(fb, nodes, /*gradients=*/true).area_grad;
}

std::vector<double> ProjectedObjectiveGradient(const FourierBoundary& fb,
                                               int nodes) {
  const Evaluation e = Evaluate(fb, nodes, /*gradients=*/true);
  std::vector<double> g = e.objective_grad;
  std::vector<double> a = e.area_grad;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (IsGauge(static_cast<int>(i))) g[i] = a[i] = 0.0;
  }
  const double aa = Dot(a, a);
  const double coefficient = aa > 0.0 ? Dot(g, a) / aa : 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] -= coefficient * a[i];
  return g;
}

FourierBoundary ApplyGauge(const FourierBoundary& fb) {
  FourierBoundary out = fb;
  out.a0 = out.b0 = 0.0;
  if (fb.order() == 0) return out;
  auto alpha_of = [](const FourierMode& m) {
    return std::complex<double>(m.a + m.b_prime, m.b - m.a_prime) / 2.0;
  };
  auto beta_of = [](const FourierMode& m) {
    return std::complex<double>(m.a - m.b_prime, m.b + m.a_prime) / 2.0;
  };
  const std::complex<double> alpha1 = alpha_of(fb.mode(1));
  const std::complex<double> beta1 = beta_of(fb.mode(1));
  double theta = 0.0;
  double phi = 0.0;
  if (std::abs(beta1) <= 1e-14 * std::abs(alpha1)) {
    theta = -std::arg(alpha1);
  } else if (std::abs(alpha1) <= 1e-14 * std::abs(beta1)) {
    theta = -std::arg(beta1);
  } else {
    theta = -0.5 * (std::arg(alpha1) + std::arg(beta1));
    phi = 0.5 * (std::arg(beta1) - std::arg(alpha1));
  }
  for (int k = 1; k <= fb.order(); ++k) {
    const std::complex<double> alpha =
        alpha_of(fb.mode(k)) * std::polar(1.0, theta + k * phi);
    const std::complex<double> beta =
        beta_of(fb.mode(k)) * std::polar(1.0, theta - k * phi);
    // z = alpha e^{iks} + beta e^{-iks} = (a + ib) cos ks + (a' + ib') sin ks.
    const std::complex<double> cosine = alpha + beta;
    const std::complex<double> sine = std::complex<double>(0.0, 1.0) * (alpha - beta);
    FourierMode& m = out.mode(k);
    m.a = cosine.real();
    m.b = cosine.imag();
    m.a_prime = sine.real();
    m.b_prime = sine.imag();
  }
  // Exact zeros for the pinned coordinates.
  out.mode(1).a_prime = 0.0;
  out.mode(1).b = 0.0;
  return out;
}

FourierBoundary ScaleToArea(const FourierBoundary& fb, double area) {
  const double current = std::abs(CoefficientArea(fb));
  if (!(current > 0.0) || !(area > 0.0)) {
    throw Error(ErrorCode::kDegenerate, "cannot rescale a zero-area curve");
  }
  const double f = std::sqrt(area / current);
  FourierBoundary out = fb;
  out.a0 *= f;
  out.b0 *= f;
  for (FourierMode& m : out.modes) {
    m.a *= f;
    m.a_prime *= f;
    m.b *= f;
    m.b_prime *= f;
  }
  return out;
}

double RadiusDeviation(const FourierBoundary& fb) {
  constexpr int kSamples = 4096;
  std::vector<Vec2> p, t;
  SampleBoundary(fb, kSamples, p, t);
  double total = 0.0;
  Vec2 centroid = Vec2::Zero();
  for (int j = 0; j < kSamples; ++j) {
    total += t[j].norm();
    centroid += t[j].norm() * p[j];
  }
  centroid /= total;
  double mean = 0.0;
  for (int j = 0; j < kSamples; ++j) mean += t[j].norm() * (p[j] - centroid).norm();
  mean /= total;
  double var = 0.0;
  for (int j = 0; j < kSamples; ++j) {
    const double d = (p[j] - centroid).norm() - mean;
    var += t[j].norm() * d * d;
  }
  return std::sqrt(var / total);
}

OptimizationTrace MinimizeI(const FourierBoundary& initial,
                            const OptimizationProblem& problem) {
  if (problem.order < 2 || !(problem.target_area > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "optimization needs order >= 2 and positive target area");
  }
  if (initial.order() < 1 || !CheckSimple(initial).simple) {
    throw Error(ErrorCode::kInvalidShape, "initial curve is not simple");
  }
  FourierBoundary start = ApplyGauge(initial);
  start.modes.resize(problem.order);
  if (!CheckSimple(start).simple) {
    throw Error(ErrorCode::kInvalidShape,
                "initial curve is not simple after truncation to the "
                "problem order");
  }

  OptimizationTrace trace;
  AugmentedLagrangian lagrangian(problem, start.order());
  const std::vector<int>& free = lagrangian.free();
  std::vector<double> packed = PackCoefficients(start);

  {
    const Evaluation e = Evaluate(start, problem.quadrature_nodes, true);
    std::vector<double> g(free.size()), a(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) {
      g[i] = e.objective_grad[free[i]];
      a[i] = e.area_grad[free[i]] / problem.target_area;
    }
    lagrangian.multiplier = Dot(g, a) / Dot(a, a);
    lagrangian.penalty = problem.initial_penalty;
  }

  const int m = static_cast<int>(free.size());
  double previous_violation = std::numeric_limits<double>::infinity();
  bool failed = false;
  Evaluation current;
  std::vector<double> grad;
  double value = 0.0;
  double grad_norm = 0.0;
  int iteration_counter = 0;

  for (int outer = 0; outer < problem.max_outer_iterations; ++outer) {
    value = lagrangian.Value(packed, &current, &grad);
    MatX h_inv = MatX::Identity(m, m);
    bool scaled = false;
    for (int inner = 0; inner < problem.max_inner_iterations; ++inner) {
      grad_norm = InfNorm(grad);
      TraceEntry entry;
      entry.outer = outer;
      entry.iteration = iteration_counter++;
      entry.objective = current.objective;
      entry.area_residual =
          (current.area - problem.target_area) / problem.target_area;
      entry.speed_residual = current.speed;
      entry.gradient_norm = grad_norm;
      entry.multiplier = 4.0 * kPi *
                         (lagrangian.multiplier -
                          lagrangian.penalty * entry.area_residual) /
                         problem.target_area;
      entry.augmented = value;
      trace.iterations.push_back(entry);
      if (grad_norm < problem.gradient_tolerance) break;

      const Eigen::Map<const VecX> g(grad.data(), m);
      VecX direction = -h_inv * g;
      if (direction.dot(g) >= 0.0) {
        h_inv.setIdentity();
        direction = -g;
      }
      double step = 1.0;
      bool accepted = false;
      std::vector<double> trial = packed;
      std::vector<double> trial_grad;
      Evaluation trial_eval;
      double trial_value = 0.0;
      for (int tries = 0; tries < 60; ++tries) {
        for (int i = 0; i < m; ++i) {
          trial[free[i]] = packed[free[i]] + step * direction(i);
        }
        trial_value = lagrangian.Value(trial, &trial_eval, &trial_grad);
        if (trial_value <= value + 1e-4 * step * direction.dot(g)) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        if (h_inv.isIdentity()) break;
        h_inv.setIdentity();
        continue;
      }
      const VecX s = step * direction;
      const VecX y = Eigen::Map<const VecX>(trial_grad.data(), m) - g;
      const double sy = s.dot(y);
      if (sy > 1e-14 * s.norm() * y.norm()) {
        if (!scaled) {
          h_inv *= sy / y.squaredNorm();
          scaled = true;
        }
        const VecX hy = h_inv * y;
        const double rho = 1.0 / sy;
        h_inv += (rho * rho * y.dot(hy) + rho) * s * s.transpose() -
                 rho * (hy * s.transpose() + s * hy.transpose());
      }
      packed = trial;
      grad = trial_grad;
      current = trial_eval;
      const bool stalled = std::abs(value - trial_value) <=
                           1e-16 * std::max(1.0, std::abs(value));
      value = trial_value;
      if (stalled) break;
    }
    grad_norm = InfNorm(grad);

    const double violation =
        (current.area - problem.target_area) / problem.target_area;
    trace.lambda = 4.0 * kPi *
                   (lagrangian.multiplier - lagrangian.penalty * violation) /
                   problem.target_area;
    // Once the area is met, the gradient left along the area normal only
    // reflects the multiplier estimate; stationarity is the tangential part.
    if (std::abs(violation) < problem.area_tolerance &&
        TangentialNorm(grad, current, free) < 1e3 * problem.gradient_tolerance) {
      trace.converged = true;
      break;
    }
    lagrangian.multiplier -= lagrangian.penalty * violation;
    if (std::abs(violation) > 0.25 * previous_violation &&
        std::abs(violation) >= problem.area_tolerance) {
      lagrangian.penalty = std::min(lagrangian.penalty * 10.0, 1e10);
    }
    previous_violation = std::abs(violation);
    if (!std::isfinite(value)) {
      failed = true;
      break;
    }
  }

  trace.final_boundary = UnpackCoefficients(packed);
  trace.final_objective = current.objective;
  trace.final_area_residual =
      (current.area - problem.target_area) / problem.target_area;
  if (trace.converged) {
    trace.verdict = "converged";
  } else if (failed) {
    trace.verdict = "failed: no simple descent step";
  } else {
    trace.verdict = "stopped: iteration limit";
  }
  return trace;
}

StationarityReport MakeStationarityReport(const FourierBoundary& fb,
                                          double activity_tolerance,
                                          double root_tolerance) {
  // Residuals are affine in lambda: R = g - lambda h.
  const LagrangeSystemResult zero = LagrangeSystem(fb, 0.0);
  double gh = 0.0, hh = 0.0, gg = 0.0;
  for (int k = 1; k <= fb.order(); ++k) {
    const FourierMode& m = fb.mode(k);
    const std::array<double, 4> h = {k * m.b_prime, -k * m.b, -k * m.a_prime,
                                     k * m.a};
    for (int i = 0; i < 4; ++i) {
      gh += zero.modes[k - 1].residual[i] * h[i];
      hh += h[i] * h[i];
      gg += zero.modes[k - 1].residual[i] * zero.modes[k - 1].residual[i];
    }
  }
  StationarityReport report;
  report.lambda = hh > 0.0 ? gh / hh : 0.0;
  report.system = LagrangeSystem(fb, report.lambda);
  report.relative_residual =
      gg > 0.0 ? report.system.residual_norm / std::sqrt(gg) : 0.0;

  double max_amplitude = 0.0;
  std::vector<double> amplitude;
  for (const FourierMode& m : fb.modes) {
    amplitude.push_back(std::sqrt(m.a * m.a + m.a_prime * m.a_prime +
                                  m.b * m.b + m.b_prime * m.b_prime));
    max_amplitude = std::max(max_amplitude, amplitude.back());
  }
  for (int k = 1; k <= fb.order(); ++k) {
    if (amplitude[k - 1] > activity_tolerance * max_amplitude) {
      report.active_modes.push_back(k);
    }
    const double scale =
        static_cast<double>(k) * k * report.lambda * report.lambda;
    if (std::abs(report.system.modes[k - 1].M) <= root_tolerance * scale) {
      report.vanishing_M.push_back(k);
    }
  }
  report.at_most_two_roots = report.vanishing_M.size() <= 2;
  return report;
}

}  // namespace isoinertia
