#include "lplde/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lplde/errors.hpp"

namespace lplde {
namespace {

// Coefficient of delta^m in f(sum_{j<=m} delta^j x_j), by Horner's rule on
// delta-power series truncated at degree m.
CosineSeries force_order_coefficient(const Polynomial& force,
                                     const std::vector<CosineSeries>& xs, int m) {
  const auto len = static_cast<std::size_t>(m) + 1;
  std::vector<CosineSeries> acc(len);
  for (auto c = force.rbegin(); c != force.rend(); ++c) {
    std::vector<CosineSeries> next(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (acc[i].empty()) continue;
      for (std::size_t j = 0; i + j < len; ++j) {
        next[i + j] = add(next[i + j], mul(acc[i], xs[j]));
      }
    }
    next[0] = add(next[0], CosineSeries::constant(*c));
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(m)];
}

// Scalar counterpart for the residual check.
double force_order_coefficient(const Polynomial& force, const std::vector<double>& xs, int m) {
  const auto len = static_cast<std::size_t>(m) + 1;
  std::vector<double> acc(len, 0.0);
  for (auto c = force.rbegin(); c != force.rend(); ++c) {
    std::vector<double> next(len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; i + j < len; ++j) next[i + j] += acc[i] * xs[j];
    }
    next[0] += *c;
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(m)];
}

void require(bool ok, const std::string& what) {
  if (!ok) throw OrderOutOfRange(what);
}

}  // namespace

Polynomial cubic_force(double mu) { return {0.0, 0.0, 0.0, -mu}; }

ExpansionState init(const ModelSpec& spec) { return init(spec, cubic_force(spec.mu)); }

ExpansionState init(const ModelSpec& spec, Polynomial force) {
  spec.validate();
  const double alpha0 = spec.interpolating_frequency_squared();
  if (!(alpha0 > 0.0)) throw InvalidModel("omega^2 + lambda^2 must be positive");
  ExpansionState state{spec, std::move(force), {alpha0}, {CosineSeries::harmonic(1, spec.amplitude)}};
  return state;
}

CosineSeries driving_term(const ExpansionState& state, int n) {
  require(n >= 1, "driving_term: order must be >= 1, got " + std::to_string(n));
  require(state.completed_order() >= n - 1,
          "driving_term: orders below " + std::to_string(n) + " are not complete");
  const double lambda2 = state.spec.lambda * state.spec.lambda;
  CosineSeries s;
  for (int k = 1; k <= n - 1; ++k) {
    s = add(s, scale(second_derivative(state.solutions[n - k]), -state.alphas[k]));
  }
  s = add(s, scale(state.solutions[n - 1], lambda2));
  return add(s, force_order_coefficient(state.force, state.solutions, n - 1));
}

double cancel_secular(ExpansionState& state, int n, const CosineSeries& s) {
  require(n >= 1 && static_cast<int>(state.alphas.size()) == n,
          "cancel_secular: alpha_" + std::to_string(n) + " is not the next unknown");
  const double alpha = -s.coefficient(1) / state.spec.amplitude;
  state.alphas.push_back(alpha);
  return alpha;
}

CosineSeries solve_order(ExpansionState& state, int n, const CosineSeries& s_reduced) {
  require(n >= 1 && static_cast<int>(state.solutions.size()) == n &&
              static_cast<int>(state.alphas.size()) == n + 1,
          "solve_order: x_" + std::to_string(n) + " is not the next unknown");
  const double resonant = s_reduced.coefficient(1);
  if (std::abs(resonant) > 1e-10 * std::max(1.0, s_reduced.max_abs_coefficient())) {
    throw ConsistencyError("solve_order: cos(tau) component " + std::to_string(resonant) +
                           " survived secular cancellation at order " + std::to_string(n));
  }
  const double stiffness = state.spec.interpolating_frequency_squared();
  const double alpha0 = state.alphas[0];
  CosineSeries::Harmonics out;
  double at_zero = 0.0;
  for (const auto& [k, c] : s_reduced.coefficients()) {
    if (k == 1) continue;
    const double coeff = c / (stiffness - alpha0 * k * k);
    out[k] = coeff;
    at_zero += coeff;
  }
  out[1] = -at_zero;
  state.solutions.emplace_back(std::move(out));
  return state.solutions.back();
}

ExpansionState run(const ModelSpec& spec) { return run(spec, cubic_force(spec.mu)); }

ExpansionState run(const ModelSpec& spec, Polynomial force) {
  ExpansionState state = init(spec, std::move(force));
  for (int n = 1; n <= spec.order; ++n) {
    const CosineSeries s = driving_term(state, n);
    const double alpha = cancel_secular(state, n, s);
    solve_order(state, n, add(s, CosineSeries::harmonic(1, alpha * spec.amplitude)));
  }
  return state;
}

FrequencyResult frequency_squared(const ExpansionState& state) {
  FrequencyResult r;
  double sum = 0.0;
  for (double a : state.alphas) {
    sum += a;
    r.partials.push_back(sum);
  }
  r.omega_squared = sum;
  r.lambda_used = state.spec.lambda;
  r.method_tag = state.spec.lambda == 0.0 ? MethodTag::LP : MethodTag::LPLDE_FIXED_LAMBDA;
  r.nonpositive = !(sum > 0.0);
  return r;
}

ResidualReport residual(const ExpansionState& state, std::span<const double> tau_samples) {
  const int top = state.completed_order();
  const double stiffness = state.spec.interpolating_frequency_squared();
  const double lambda2 = state.spec.lambda * state.spec.lambda;

  std::vector<CosineSeries> accel;
  for (int m = 0; m <= top; ++m) accel.push_back(second_derivative(state.solutions[m]));

  ResidualReport report;
  std::vector<double> x(static_cast<std::size_t>(top) + 1);
  std::vector<double> xpp(x.size());
  for (double tau : tau_samples) {
    for (int m = 0; m <= top; ++m) {
      x[m] = state.solutions[m].eval(tau);
      xpp[m] = accel[m].eval(tau);
    }
    for (int m = 0; m <= top; ++m) {
      double lhs = stiffness * x[m];
      double largest = std::abs(lhs);
      for (int k = 0; k <= m; ++k) {
        const double term = state.alphas[k] * xpp[m - k];
        lhs += term;
        largest = std::max(largest, std::abs(term));
      }
      double rhs = 0.0;
      if (m >= 1) {
        const double interp = lambda2 * x[m - 1];
        const double forced = force_order_coefficient(state.force, x, m - 1);
        rhs = interp + forced;
        largest = std::max({largest, std::abs(interp), std::abs(forced)});
      }
      report.max_abs = std::max(report.max_abs, std::abs(lhs - rhs));
      report.scale = std::max(report.scale, largest);
    }
  }
  return report;
}

}  // namespace lplde
