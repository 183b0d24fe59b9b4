#include "lplde/closed_forms.hpp"

#include <cmath>

#include "lplde/errors.hpp"

namespace lplde {
namespace {

FrequencyResult cumulative(const std::array<double, 4>& alphas, double lambda, MethodTag tag) {
  FrequencyResult r;
  double sum = 0.0;
  for (double a : alphas) {
    sum += a;
    r.partials.push_back(sum);
  }
  r.omega_squared = sum;
  r.lambda_used = lambda;
  r.method_tag = tag;
  r.nonpositive = !(sum > 0.0);
  return r;
}

double coupling(const ModelSpec& s) { return s.amplitude * s.amplitude * s.mu; }

}  // namespace

std::array<double, 4> alpha_coeffs(const ModelSpec& spec) {
  const double u = spec.interpolating_frequency_squared();
  const double l2 = spec.lambda * spec.lambda;
  const double a = coupling(spec);
  return {u, 0.75 * a - l2, -3.0 * a * a / (128.0 * u),
          3.0 * a * a * (3.0 * a - 4.0 * l2) / (512.0 * u * u)};
}

FrequencyResult omega2_order3(const ModelSpec& spec) {
  return cumulative(alpha_coeffs(spec), spec.lambda,
                    spec.lambda == 0.0 ? MethodTag::LP : MethodTag::LPLDE_FIXED_LAMBDA);
}

double pms_lambda(const ModelSpec& spec) {
  if (spec.mu < 0.0) throw PmsUndefined("PMS lambda is imaginary for mu < 0");
  return spec.amplitude * std::sqrt(3.0 * spec.mu) / 2.0;
}

FrequencyResult omega2_pms_derived(const ModelSpec& spec) {
  const double lambda = pms_lambda(spec);
  const double a = coupling(spec);
  const double w2 = spec.omega * spec.omega;
  FrequencyResult r = cumulative(alpha_coeffs(spec.with_lambda(lambda)), lambda, MethodTag::LPLDE_PMS);
  r.omega_squared = (69.0 * a * a + 192.0 * a * w2 + 128.0 * w2 * w2) / (96.0 * a + 128.0 * w2);
  r.partials.back() = r.omega_squared;
  r.nonpositive = !(r.omega_squared > 0.0);
  return r;
}

FrequencyResult omega2_pms_printed(const ModelSpec& spec) {
  const double a = coupling(spec);
  const double w2 = spec.omega * spec.omega;
  FrequencyResult r;
  r.omega_squared = (64.0 * a * a + 192.0 * a * w2 + 128.0 * w2 * w2) / (96.0 * a + 128.0 * w2);
  r.partials = {r.omega_squared};
  r.lambda_used = spec.mu >= 0.0 ? pms_lambda(spec) : 0.0;
  r.method_tag = MethodTag::LPLDE_PMS;
  r.nonpositive = !(r.omega_squared > 0.0);
  return r;
}

ModelSpec rescale(const ModelSpec& spec, double mu_new) {
  if (spec.mu == 0.0 || mu_new == 0.0) throw InvalidModel("rescale: couplings must be nonzero");
  if ((spec.mu > 0.0) != (mu_new > 0.0)) throw InvalidModel("rescale: couplings differ in sign");
  ModelSpec out = spec;
  out.amplitude = spec.amplitude * std::sqrt(spec.mu / mu_new);
  out.mu = mu_new;
  return out;
}

}  // namespace lplde
