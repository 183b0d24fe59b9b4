#pragma once

#include <string_view>

#include "lplde/model.hpp"

namespace lplde {

enum class PeriodMethod { ELLIPTIC_AGM, QUADRATURE, ODE };

std::string_view to_string(PeriodMethod method);

struct PeriodResult {
  double period = 0.0;
  PeriodMethod method_tag = PeriodMethod::QUADRATURE;
  double est_error = 0.0;  ///< absolute, in time units
};

/// Energy bookkeeping for  x'' + omega^2 x + mu x^3 = 0.
struct EnergyModel {
  double omega = 1.0;
  double mu = 0.0;

  [[nodiscard]] double potential(double x) const noexcept {
    const double x2 = x * x;
    return 0.5 * omega * omega * x2 + 0.25 * mu * x2 * x2;
  }
  [[nodiscard]] double energy(double x, double v) const noexcept { return 0.5 * v * v + potential(x); }
  [[nodiscard]] double energy_of_amplitude(double amplitude) const noexcept {
    return potential(amplitude);
  }
};

/// K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta) by the
/// arithmetic-geometric mean. Throws UnsupportedModulus unless 0 <= k^2 < 1.
double complete_elliptic_k(double k_squared);

/// T = 4 integral_0^{pi/2} dtheta / sqrt(omega^2 + mu A^2 (1 + sin^2 theta) / 2),
/// the energy integral after x = A sin(theta). 64-point Gauss-Legendre panels,
/// split in halves until the two estimates agree. Any sign of mu.
PeriodResult period_quadrature(const ModelSpec& spec);

/// T = 4 K(k) / sqrt(omega^2 + mu A^2),  k^2 = mu A^2 / (2 (omega^2 + mu A^2)).
/// Requires mu >= 0.
PeriodResult period_elliptic(const ModelSpec& spec);

struct OdeOptions {
  int steps_per_period = 2000;
  /// Crossings are searched for within this many estimated periods.
  double search_periods = 3.0;
};

/// Classic RK4 from x(0) = A, x'(0) = 0. The half period is the first time
/// the velocity returns to zero with x < 0, located by bisecting the length
/// of the final step. est_error compares against a run at twice the step.
PeriodResult period_ode(const ModelSpec& spec, const OdeOptions& options = {});

/// Largest relative deviation of the energy from its initial value along an
/// RK4 trajectory of the given length (in periods, at the ODE route's step).
double ode_energy_drift(const ModelSpec& spec, double periods, const OdeOptions& options = {});

/// 2 pi / T, elliptic route for mu >= 0, quadrature otherwise.
double omega_exact(const ModelSpec& spec);

}  // namespace lplde
