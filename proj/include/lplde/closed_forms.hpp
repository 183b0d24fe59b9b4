#pragma once

#include <array>

#include "lplde/model.hpp"

namespace lplde {

/// alpha_0..alpha_3 of the delta-interpolated Duffing expansion, written out:
///   alpha_0 = omega^2 + lambda^2
///   alpha_1 = 3 A^2 mu / 4 - lambda^2
///   alpha_2 = -3 A^4 mu^2 / (128 (omega^2 + lambda^2))
///   alpha_3 = 3 A^4 mu^2 (3 A^2 mu - 4 lambda^2) / (512 (omega^2 + lambda^2)^2)
std::array<double, 4> alpha_coeffs(const ModelSpec& spec);

/// Third-order Omega^2 at the spec's lambda. Tagged LP when lambda = 0.
FrequencyResult omega2_order3(const ModelSpec& spec);

/// Stationary point of the third-order Omega^2 in lambda: A sqrt(3 mu) / 2.
/// Throws PmsUndefined for mu < 0.
double pms_lambda(const ModelSpec& spec);

/// omega2_order3 at lambda = pms_lambda, simplified:
///   (69 A^4 mu^2 + 192 A^2 mu omega^2 + 128 omega^4) / (96 A^2 mu + 128 omega^2).
/// Throws PmsUndefined for mu < 0.
FrequencyResult omega2_pms_derived(const ModelSpec& spec);

/// Same with 64 in place of 69 in the numerator, the variant found in the
/// literature. Kept for comparison output only.
FrequencyResult omega2_pms_printed(const ModelSpec& spec);

/// mu -> mu_new, A -> A sqrt(mu / mu_new). Leaves A^2 mu, and therefore the
/// Duffing dynamics in units of A, unchanged. Both couplings must be nonzero
/// and share a sign; otherwise throws InvalidModel.
ModelSpec rescale(const ModelSpec& spec, double mu_new);

}  // namespace lplde
