#pragma once

#include <span>
#include <vector>

#include "lplde/model.hpp"
#include "lplde/trig_series.hpp"

namespace lplde {

/// Polynomial force term c_0 + c_1 x + c_2 x^2 + ... on the right-hand side.
using Polynomial = std::vector<double>;

/// The Duffing force -mu x^3.
Polynomial cubic_force(double mu);

/// Frequency coefficients alpha_0..alpha_n and solutions x_0..x_n accumulated
/// by the order-by-order recursion for
///
///   Omega^2 x'' + (omega^2 + lambda^2) x = delta [f(x) + lambda^2 x],
///
/// with Omega^2 = sum alpha_n delta^n and x = sum x_n delta^n, delta = 1 at
/// evaluation. Every x_n with n >= 1 vanishes at tau = 0.
struct ExpansionState {
  ModelSpec spec;
  Polynomial force;
  std::vector<double> alphas;
  std::vector<CosineSeries> solutions;

  /// Highest order for which both alpha_n and x_n are present.
  [[nodiscard]] int completed_order() const noexcept {
    return static_cast<int>(std::min(alphas.size(), solutions.size())) - 1;
  }
};

ExpansionState init(const ModelSpec& spec);
ExpansionState init(const ModelSpec& spec, Polynomial force);

/// The alpha_n-independent part of the order-n driving term:
///   -sum_{k=1}^{n-1} alpha_k x_{n-k}'' + lambda^2 x_{n-1} + [f(x)]_{n-1}.
/// Requires orders 0..n-1 to be complete.
CosineSeries driving_term(const ExpansionState& state, int n);

/// Chooses alpha_n so that s + alpha_n A cos(tau) has no cos(tau) term,
/// appends it to the state and returns it.
double cancel_secular(ExpansionState& state, int n, const CosineSeries& s);

/// Particular solution of alpha_0 x'' + (omega^2 + lambda^2) x = s_reduced plus
/// the homogeneous cos(tau) part that makes x_n(0) = 0. Appends and returns x_n.
/// Throws ConsistencyError if s_reduced still carries a resonant cos(tau) term.
CosineSeries solve_order(ExpansionState& state, int n, const CosineSeries& s_reduced);

/// Runs the recursion through spec.order with the cubic force.
ExpansionState run(const ModelSpec& spec);
ExpansionState run(const ModelSpec& spec, Polynomial force);

FrequencyResult frequency_squared(const ExpansionState& state);

struct ResidualReport {
  double max_abs = 0.0;  ///< largest |lhs - rhs| over orders and samples
  double scale = 0.0;    ///< largest single term magnitude in those equations
};

/// Substitutes the computed orders back into the equation, one order at a
/// time, and evaluates the imbalance pointwise at each tau sample. The force
/// is expanded in delta with scalar arithmetic, independently of the series
/// products used to build the state.
ResidualReport residual(const ExpansionState& state, std::span<const double> tau_samples);

}  // namespace lplde
