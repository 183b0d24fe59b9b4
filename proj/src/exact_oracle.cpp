#include "lplde/exact_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "lplde/errors.hpp"

namespace lplde {
namespace {

constexpr int kGaussOrder = 64;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev-like initial guess.
const GaussRule& gauss_legendre() {
  static const GaussRule rule = [] {
    GaussRule r;
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      r.nodes[i] = -x;
      r.nodes[n - 1 - i] = x;
      r.weights[i] = r.weights[n - 1 - i] = w;
    }
    return r;
  }();
  return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& rule = gauss_legendre();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

// Returns (integral, absolute error estimate).
std::pair<double, double> integrate(const std::function<double(double)>& f, double a, double b,
                                    double whole, double rel_tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gauss_panel(f, a, m), right = gauss_panel(f, m, b);
  const double halves = left + right;
  const double err = std::abs(halves - whole);
  if (err <= rel_tol * std::abs(halves) || depth >= 24) return {halves, err};
  auto [l, el] = integrate(f, a, m, left, rel_tol, depth + 1);
  auto [r, er] = integrate(f, m, b, right, rel_tol, depth + 1);
  return {l + r, el + er};
}

void require_bounded(const ModelSpec& spec) {
  spec.validate();
  if (!spec.bounded()) {
    throw UnboundedMotion("omega^2 + mu A^2 <= 0: no periodic orbit through x = A");
  }
}

struct PhasePoint {
  double x;
  double v;
};

PhasePoint rk4_step(const PhasePoint& p, double h, double w2, double mu) {
  auto acc = [w2, mu](double x) { return -w2 * x - mu * x * x * x; };
  const double k1x = p.v, k1v = acc(p.x);
  const double k2x = p.v + 0.5 * h * k1v, k2v = acc(p.x + 0.5 * h * k1x);
  const double k3x = p.v + 0.5 * h * k2v, k3v = acc(p.x + 0.5 * h * k2x);
  const double k4x = p.v + h * k3v, k4v = acc(p.x + h * k3x);
  return {p.x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
          p.v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

double ode_half_period(const ModelSpec& spec, double h, double t_limit) {
  const double w2 = spec.omega * spec.omega;
  PhasePoint p{spec.amplitude, 0.0};
  double t = 0.0;
  while (t < t_limit) {
    const PhasePoint next = rk4_step(p, h, w2, spec.mu);
    if (p.v < 0.0 && next.v >= 0.0 && next.x < 0.0) {
      double lo = 0.0, hi = h;
      while (hi - lo > 1e-14 * h) {
        const double mid = 0.5 * (lo + hi);
        (rk4_step(p, mid, w2, spec.mu).v < 0.0 ? lo : hi) = mid;
      }
      return t + 0.5 * (lo + hi);
    }
    p = next;
    t += h;
  }
  throw IntegrationFailure("no velocity zero crossing with x < 0 within " +
                           std::to_string(t_limit) + " time units");
}

}  // namespace

std::string_view to_string(PeriodMethod method) {
  switch (method) {
    case PeriodMethod::ELLIPTIC_AGM: return "ELLIPTIC_AGM";
    case PeriodMethod::QUADRATURE: return "QUADRATURE";
    case PeriodMethod::ODE: return "ODE";
  }
  return "?";
}

double complete_elliptic_k(double k_squared) {
  if (!(k_squared >= 0.0 && k_squared < 1.0)) {
    throw UnsupportedModulus("complete_elliptic_k: k^2 = " + std::to_string(k_squared) +
                             " outside [0, 1)");
  }
  double a = 1.0, g = std::sqrt(1.0 - k_squared);
  for (int it = 0; it < 64 && std::abs(a - g) > 1e-15 * a; ++it) {
    const double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  return std::numbers::pi / (a + g);
}

PeriodResult period_quadrature(const ModelSpec& spec) {
  require_bounded(spec);
  const double w2 = spec.omega * spec.omega;
  const double ma2 = spec.mu * spec.amplitude * spec.amplitude;
  const std::function<double(double)> integrand = [w2, ma2](double theta) {
    const double s = std::sin(theta);
    return 1.0 / std::sqrt(w2 + 0.5 * ma2 * (1.0 + s * s));
  };
  const double b = 0.5 * std::numbers::pi;
  auto [value, err] = integrate(integrand, 0.0, b, gauss_panel(integrand, 0.0, b), 1e-14, 0);
  return {4.0 * value, PeriodMethod::QUADRATURE, 4.0 * err};
}

PeriodResult period_elliptic(const ModelSpec& spec) {
  require_bounded(spec);
  if (spec.mu < 0.0) throw UnsupportedModulus("elliptic route needs mu >= 0; use quadrature");
  const double stiff = spec.omega * spec.omega + spec.mu * spec.amplitude * spec.amplitude;
  const double k2 = spec.mu * spec.amplitude * spec.amplitude / (2.0 * stiff);
  const double period = 4.0 * complete_elliptic_k(k2) / std::sqrt(stiff);
  return {period, PeriodMethod::ELLIPTIC_AGM, 4.0 * std::numeric_limits<double>::epsilon() * period};
}

PeriodResult period_ode(const ModelSpec& spec, const OdeOptions& options) {
  require_bounded(spec);
  const double estimate = period_quadrature(spec).period;
  const double limit = options.search_periods * estimate;
  const double h = estimate / options.steps_per_period;
  const double fine = 2.0 * ode_half_period(spec, h, limit);
  const double coarse = 2.0 * ode_half_period(spec, 2.0 * h, limit);
  // RK4 is fourth order: fine - exact ~ (coarse - fine) / 15.
  return {fine, PeriodMethod::ODE, std::abs(coarse - fine) / 15.0};
}

double ode_energy_drift(const ModelSpec& spec, double periods, const OdeOptions& options) {
  require_bounded(spec);
  const double estimate = period_quadrature(spec).period;
  const double h = estimate / options.steps_per_period;
  const EnergyModel model{spec.omega, spec.mu};
  const double e0 = model.energy_of_amplitude(spec.amplitude);
  const auto steps = static_cast<long>(std::ceil(periods * options.steps_per_period));
  PhasePoint p{spec.amplitude, 0.0};
  double worst = 0.0;
  for (long i = 0; i < steps; ++i) {
    p = rk4_step(p, h, spec.omega * spec.omega, spec.mu);
    worst = std::max(worst, std::abs(model.energy(p.x, p.v) - e0));
  }
  return worst / std::abs(e0);
}

double omega_exact(const ModelSpec& spec) {
  const PeriodResult r = spec.mu >= 0.0 ? period_elliptic(spec) : period_quadrature(spec);
  return 2.0 * std::numbers::pi / r.period;
}

}  // namespace lplde
