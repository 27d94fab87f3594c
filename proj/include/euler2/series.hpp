#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "euler2/polynomial.hpp"
#include "euler2/rational.hpp"

namespace euler2 {

// An exact commutative coefficient ring: decidable canonical equality,
// rational scalar action, and inversion of unit elements. Rational and PolyQ
// are the two instances used here; distinct rings are distinct types, so
// mixing them in one expression is rejected at compile time.
template <typename R>
concept CoefficientRing =
    std::regular<R> && std::constructible_from<R, long long> &&
    requires(const R& a, const R& b, const Rational& q) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { a * q } -> std::convertible_to<R>;
      { a / q } -> std::convertible_to<R>;
      { is_ring_unit(a) } -> std::convertible_to<bool>;
      { ring_unit_inverse(a) } -> std::convertible_to<R>;
    };

// Formal power series truncated at a fixed order T: the coefficients of
// x^0..x^T, all exact. The truncation order is explicit and caller-chosen;
// binary operations truncate to min(T_a, T_b) and never extend precision.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, R{0}) {}

  explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("series: coefficient list must not be empty");
  }

  static TruncatedSeries constant(R value, int order) {
    std::vector<R> coeffs(check_order(order) + 1, R{0});
    coeffs[0] = std::move(value);
    return TruncatedSeries{std::move(coeffs)};
  }

  /// The series x (when order permits a degree-1 term).
  static TruncatedSeries identity(int order) {
    std::vector<R> coeffs(check_order(order) + 1, R{0});
    if (order >= 1) coeffs[1] = R{1};
    return TruncatedSeries{std::move(coeffs)};
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  const R& operator[](int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series: coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw std::out_of_range("series: truncation order out of range");
    return TruncatedSeries{
        std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1)};
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series: negative truncation order");
    return order;
  }

  std::vector<R> coeffs_;
};

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<R> out(static_cast<std::size_t>(t) + 1);
  for (int n = 0; n <= t; ++n) out[n] = a[n] + b[n];
  return TruncatedSeries<R>{std::move(out)};
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<R> out(static_cast<std::size_t>(t) + 1);
  for (int n = 0; n <= t; ++n) out[n] = a[n] - b[n];
  return TruncatedSeries<R>{std::move(out)};
}

/// Cauchy product through x^min(T_a, T_b).
template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  const int t = std::min(a.order(), b.order());
  std::vector<R> out(static_cast<std::size_t>(t) + 1, R{0});
  for (int i = 0; i <= t; ++i)
    for (int j = 0; i + j <= t; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return TruncatedSeries<R>{std::move(out)};
}

/// Multiplicative inverse; requires a unit constant term.
template <CoefficientRing R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& a) {
  if (!is_ring_unit(a[0]))
    throw std::domain_error("series inverse: constant term is not invertible");
  const R lead_inv = ring_unit_inverse(a[0]);
  const int t = a.order();
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  out.push_back(lead_inv);
  for (int n = 1; n <= t; ++n) {
    R acc{0};
    for (int i = 1; i <= n; ++i) acc = acc + a[i] * out[n - i];
    out.push_back(-(lead_inv * acc));
  }
  return TruncatedSeries<R>{std::move(out)};
}

// log and exp use the derivative recurrences: one division (resp. one
// convolution) per coefficient, O(T^2) ring operations total.

/// Requires constant term 1. Satisfies r' = a'/a through x^(T-1), r_0 = 0.
template <CoefficientRing R>
TruncatedSeries<R> log(const TruncatedSeries<R>& a) {
  if (!(a[0] == R{1})) throw std::domain_error("series log: constant term must be 1");
  const int t = a.order();
  std::vector<R> out(static_cast<std::size_t>(t) + 1, R{0});
  if (t > 0) {
    std::vector<R> deriv(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) deriv[i] = a[i + 1] * Rational{i + 1};
    const auto quotient =
        TruncatedSeries<R>{std::move(deriv)} * inverse(a.truncated(t - 1));
    for (int n = 1; n <= t; ++n) out[n] = quotient[n - 1] / Rational{n};
  }
  return TruncatedSeries<R>{std::move(out)};
}

/// Requires constant term 0. Inverse of log through x^T.
template <CoefficientRing R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& a) {
  if (!(a[0] == R{0})) throw std::domain_error("series exp: constant term must be 0");
  const int t = a.order();
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(t) + 1);
  out.push_back(R{1});
  for (int n = 1; n <= t; ++n) {
    R acc{0};
    for (int i = 1; i <= n; ++i) acc = acc + a[i] * Rational{i} * out[n - i];
    out.push_back(acc / Rational{n});
  }
  return TruncatedSeries<R>{std::move(out)};
}

/// Integer power by repeated squaring; negative exponents go through inverse.
template <CoefficientRing R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& a, long long exponent) {
  TruncatedSeries<R> base = exponent < 0 ? inverse(a) : a;
  unsigned long long e = exponent < 0
                             ? -static_cast<unsigned long long>(exponent)
                             : static_cast<unsigned long long>(exponent);
  auto result = TruncatedSeries<R>::constant(R{1}, a.order());
  while (e > 0) {
    if (e & 1ull) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// n! * c_n, the exponential-generating-function coefficient.
template <CoefficientRing R>
R egf_coefficient(const TruncatedSeries<R>& a, int n) {
  if (n < 0 || n > a.order())
    throw std::out_of_range("egf_coefficient: index beyond truncation order");
  Rational scale{1};
  for (int i = 2; i <= n; ++i) scale *= i;
  return a[n] * scale;
}

}  // namespace euler2
