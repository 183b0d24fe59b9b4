#pragma once

#include <functional>

#include "lplde/model.hpp"

namespace lplde {

struct PmsResult {
  double lambda = 0.0;
  /// False when no interior stationary point exists in the scan window; the
  /// search then falls back to lambda = 0 (plain Lindstedt-Poincare).
  bool stationary = false;
  double omega_squared = 0.0;
  double curvature = 0.0;  ///< d^2 Omega^2 / d lambda^2 at the returned point
};

/// Principle of minimal sensitivity by numerics: scans dOmega^2/dlambda
/// (central differences, step 1e-5 (1 + lambda)) over (0, lambda_max], bisects
/// every sign change and keeps the flattest stationary point.
///
/// lambda = 0 is always stationary by symmetry in lambda and is not counted.
/// The function may be shifted by any lambda-independent constant; the
/// round-off floor is taken relative to its magnitude at the window ends.
PmsResult find_pms_lambda(const std::function<double(double)>& omega2_of_lambda,
                          double lambda_max, int scan_points = 400);

/// Upper end of the scan window: 4 A sqrt(max(mu, 0)) + omega.
double pms_scan_limit(const ModelSpec& spec);

/// Numeric PMS on the engine's Omega^2 at spec.order. The returned
/// omega_squared is the full engine value at the chosen lambda.
PmsResult pms_lambda_numeric(const ModelSpec& spec);

}  // namespace lplde
