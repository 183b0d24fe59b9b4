#include "lplde/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lplde {

CosineSeries::CosineSeries(Harmonics coefficients) : coeffs_(std::move(coefficients)) {
  if (!coeffs_.empty() && coeffs_.begin()->first < 0) {
    throw std::invalid_argument("CosineSeries: negative harmonic index " +
                                std::to_string(coeffs_.begin()->first));
  }
  prune();
}

CosineSeries CosineSeries::harmonic(int k, double c) { return CosineSeries(Harmonics{{k, c}}); }

double CosineSeries::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? 0.0 : it->second;
}

int CosineSeries::max_harmonic() const noexcept {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

double CosineSeries::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double CosineSeries::eval(double tau) const {
  double sum = 0.0;
  for (const auto& [k, c] : coeffs_) sum += c * std::cos(k * tau);
  return sum;
}

void CosineSeries::prune() {
  const double threshold = kPruneRelative * max_abs_coefficient();
  std::erase_if(coeffs_, [threshold](const auto& kv) {
    return kv.second == 0.0 || std::abs(kv.second) < threshold;
  });
}

CosineSeries add(const CosineSeries& a, const CosineSeries& b) {
  CosineSeries::Harmonics out = a.coefficients();
  for (const auto& [k, c] : b.coefficients()) out[k] += c;
  return CosineSeries(std::move(out));
}

CosineSeries scale(const CosineSeries& a, double factor) {
  CosineSeries::Harmonics out;
  for (const auto& [k, c] : a.coefficients()) out[k] = factor * c;
  return CosineSeries(std::move(out));
}

CosineSeries mul(const CosineSeries& a, const CosineSeries& b) {
  CosineSeries::Harmonics out;
  for (const auto& [j, cj] : a.coefficients()) {
    for (const auto& [k, ck] : b.coefficients()) {
      const double half = 0.5 * cj * ck;
      out[j + k] += half;
      out[std::abs(j - k)] += half;
    }
  }
  return CosineSeries(std::move(out));
}

CosineSeries second_derivative(const CosineSeries& a) {
  CosineSeries::Harmonics out;
  for (const auto& [k, c] : a.coefficients()) {
    if (k != 0) out[k] = -static_cast<double>(k) * k * c;
  }
  return CosineSeries(std::move(out));
}

double eval(const CosineSeries& a, double tau) { return a.eval(tau); }

CosineSeries poly_apply(std::span<const double> coeffs, const CosineSeries& x) {
  CosineSeries result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result = add(mul(result, x), CosineSeries::constant(*it));
  }
  return result;
}

}  // namespace lplde
