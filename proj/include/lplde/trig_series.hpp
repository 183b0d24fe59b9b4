#pragma once

#include <map>
#include <span>

namespace lplde {

/// Finite cosine series  sum_k c_k cos(k tau)  over non-negative harmonics k.
///
/// The set is closed under sums, products and second derivatives, which is
/// all the Lindstedt-Poincare recursion needs for even initial data. Every
/// operation returns a pruned series: coefficients whose magnitude is below
/// 1e-14 times the largest coefficient (and exact zeros) are dropped, so an
/// absent harmonic always reads as 0.
class CosineSeries {
 public:
  using Harmonics = std::map<int, double>;

  static constexpr double kPruneRelative = 1e-14;

  CosineSeries() = default;
  /// Throws std::invalid_argument on a negative harmonic index.
  explicit CosineSeries(Harmonics coefficients);

  static CosineSeries constant(double c) { return harmonic(0, c); }
  static CosineSeries harmonic(int k, double c);

  [[nodiscard]] double coefficient(int k) const;
  [[nodiscard]] const Harmonics& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] bool empty() const noexcept { return coeffs_.empty(); }
  /// Largest populated harmonic, -1 for the zero series.
  [[nodiscard]] int max_harmonic() const noexcept;
  [[nodiscard]] double max_abs_coefficient() const noexcept;
  [[nodiscard]] double eval(double tau) const;

  friend bool operator==(const CosineSeries&, const CosineSeries&) = default;

 private:
  void prune();

  Harmonics coeffs_;
};

CosineSeries add(const CosineSeries& a, const CosineSeries& b);
CosineSeries scale(const CosineSeries& a, double factor);
/// Exact product through cos(j t) cos(k t) = [cos((j+k) t) + cos(|j-k| t)] / 2.
CosineSeries mul(const CosineSeries& a, const CosineSeries& b);
CosineSeries second_derivative(const CosineSeries& a);
double eval(const CosineSeries& a, double tau);

/// c_0 + c_1 x + c_2 x^2 + ... evaluated on a series (Horner, exact products).
CosineSeries poly_apply(std::span<const double> coeffs, const CosineSeries& x);

inline CosineSeries operator+(const CosineSeries& a, const CosineSeries& b) { return add(a, b); }
inline CosineSeries operator-(const CosineSeries& a, const CosineSeries& b) {
  return add(a, scale(b, -1.0));
}
inline CosineSeries operator*(const CosineSeries& a, const CosineSeries& b) { return mul(a, b); }
inline CosineSeries operator*(double s, const CosineSeries& a) { return scale(a, s); }

}  // namespace lplde
