#include "lplde/pms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lplde/engine.hpp"

namespace lplde {
namespace {

double step_at(double lambda) { return 1e-5 * (1.0 + lambda); }

double derivative(const std::function<double(double)>& f, double lambda) {
  const double h = step_at(lambda);
  return (f(lambda + h) - f(lambda - h)) / (2.0 * h);
}

double curvature(const std::function<double(double)>& f, double lambda) {
  const double h = 1e3 * step_at(lambda);
  return (f(lambda + h) - 2.0 * f(lambda) + f(lambda - h)) / (h * h);
}

}  // namespace

PmsResult find_pms_lambda(const std::function<double(double)>& omega2_of_lambda,
                          double lambda_max, int scan_points) {
  PmsResult best;
  best.omega_squared = omega2_of_lambda(0.0);
  if (!(lambda_max > 0.0) || scan_points < 2) return best;

  // Derivatives below this are round-off in the difference quotient.
  const double noise =
      1e-9 * std::max(std::abs(best.omega_squared), std::abs(omega2_of_lambda(lambda_max)));
  if (noise == 0.0) return best;
  auto sign_of = [noise](double d) { return std::abs(d) < noise ? 0 : (d > 0 ? 1 : -1); };

  const double dl = lambda_max / scan_points;
  double prev_l = dl;
  int prev_s = sign_of(derivative(omega2_of_lambda, prev_l));
  bool have = false;
  for (int i = 2; i <= scan_points; ++i) {
    const double l = dl * i;
    const int s = sign_of(derivative(omega2_of_lambda, l));
    if (s == 0) continue;
    if (prev_s != 0 && s != prev_s) {
      double lo = prev_l, hi = l;
      for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double dm = derivative(omega2_of_lambda, mid);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        ((dm > 0.0) == (prev_s > 0) ? lo : hi) = mid;
      }
      const double root = 0.5 * (lo + hi);
      const double c = curvature(omega2_of_lambda, root);
      if (!have || std::abs(c) < std::abs(best.curvature)) {
        best.lambda = root;
        best.curvature = c;
        best.omega_squared = omega2_of_lambda(root);
        best.stationary = true;
        have = true;
      }
    }
    prev_l = l;
    prev_s = s;
  }
  return best;
}

double pms_scan_limit(const ModelSpec& spec) {
  return 4.0 * spec.amplitude * std::sqrt(std::max(spec.mu, 0.0)) + spec.omega;
}

PmsResult pms_lambda_numeric(const ModelSpec& spec) {
  spec.validate();
  // alpha_0 + alpha_1 does not depend on lambda; differencing only the higher
  // corrections keeps their lambda dependence above round-off when A^2 mu is small.
  auto corrections = [&spec](double lambda) {
    const ExpansionState st = run(spec.with_lambda(std::abs(lambda)));
    double sum = 0.0;
    for (std::size_t n = 2; n < st.alphas.size(); ++n) sum += st.alphas[n];
    return sum;
  };
  PmsResult r = find_pms_lambda(corrections, pms_scan_limit(spec));
  const FrequencyResult f = frequency_squared(run(spec.with_lambda(r.lambda)));
  r.omega_squared = f.omega_squared;
  return r;
}

}  // namespace lplde
