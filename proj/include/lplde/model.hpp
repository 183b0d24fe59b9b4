#pragma once

#include <string_view>
#include <vector>

namespace lplde {

/// Highest expansion order the engine accepts. Past this, cancellation in the
/// high harmonics eats the double-precision budget.
inline constexpr int kMaxOrder = 16;

/// One Duffing problem  x'' + omega^2 x = -mu x^3  with x(0) = A, x'(0) = 0,
/// interpolated through the linear frequency omega^2 + lambda^2.
struct ModelSpec {
  double omega = 1.0;
  double mu = 1.0;
  double amplitude = 1.0;
  double lambda = 0.0;
  int order = 3;

  /// Throws InvalidModel unless omega > 0, A > 0, lambda >= 0 and
  /// 0 <= order <= kMaxOrder (all values finite).
  void validate() const;

  [[nodiscard]] double interpolating_frequency_squared() const noexcept {
    return omega * omega + lambda * lambda;
  }
  /// omega^2 + mu A^2 > 0, the condition for a closed orbit through x = A.
  [[nodiscard]] bool bounded() const noexcept {
    return omega * omega + mu * amplitude * amplitude > 0.0;
  }
  [[nodiscard]] ModelSpec with_lambda(double l) const {
    ModelSpec s = *this;
    s.lambda = l;
    return s;
  }
  [[nodiscard]] ModelSpec with_order(int n) const {
    ModelSpec s = *this;
    s.order = n;
    return s;
  }
};

enum class MethodTag { LP, LPLDE_PMS, LPLDE_FIXED_LAMBDA };

std::string_view to_string(MethodTag tag);

/// Squared frequency together with its cumulative per-order partial sums.
struct FrequencyResult {
  double omega_squared = 0.0;
  std::vector<double> partials;
  double lambda_used = 0.0;
  MethodTag method_tag = MethodTag::LP;
  /// Set when omega_squared <= 0: parameters outside the expansion's validity.
  bool nonpositive = false;
};

}  // namespace lplde
