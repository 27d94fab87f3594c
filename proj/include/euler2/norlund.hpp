#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "euler2/eulerian.hpp"
#include "euler2/polynomial.hpp"
#include "euler2/rational.hpp"
#include "euler2/series.hpp"
#include "euler2/special_numbers.hpp"

namespace euler2 {

// Norlund polynomials B_n^(z): the EGF coefficient family of (x/(e^x-1))^z,
// a degree-n polynomial in z for each n. Three genuinely independent
// construction paths are provided; their agreement is consumed as evidence
// by the verification suite, so none of them may delegate to another.

namespace detail {

// All B_k^(z) for k <= order in one exp pass over the polynomial ring:
// (x/(e^x-1))^z = exp(-z * L(x)) with L = log((e^x-1)/x).
inline std::vector<PolyQ> norlund_egf_prefix(int order) {
  const auto lser = log(exp_minus_one_over_x(order));
  std::vector<PolyQ> exponent(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) exponent[k] = PolyQ{Rational{0}, -lser[k]};
  const auto egf = exp(TruncatedSeries<PolyQ>{std::move(exponent)});
  std::vector<PolyQ> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out[k] = egf_coefficient(egf, k);
  return out;
}

}  // namespace detail

/// B_n^(z) from the exponential generating function.
inline PolyQ norlund_via_egf(int n) {
  if (n < 0) throw std::domain_error("norlund: negative index");
  thread_local std::vector<PolyQ> cache;
  if (static_cast<int>(cache.size()) <= n) {
    const int t = std::max({8, n, 2 * static_cast<int>(cache.size())});
    cache = detail::norlund_egf_prefix(t);
  }
  return cache[static_cast<std::size_t>(n)];
}

/// B_n^(z) from the closed form
///   n!/(2n)! * sum_k (-1)^k C(n,k) <z>_k <-z+n+1>_{n-k},
/// built on the Eulerian recurrence and rising-factorial products.
/// Defined for n >= 1; the k-sum is empty at n = 0 (where B_0^(z) = 1).
inline PolyQ norlund_via_theorem1(int n) {
  if (n < 1) throw std::domain_error("norlund closed form: defined for n >= 1");
  const EulerianRow row = eulerian_row(n);
  const PolyQ z = PolyQ::variable();
  const PolyQ reflected{Rational{n + 1}, Rational{-1}};  // -z + n + 1
  // <z>_k ascending in k and <-z+n+1>_j ascending in j, each one factor at a time
  std::vector<PolyQ> rising(static_cast<std::size_t>(n) + 1);
  rising[0] = PolyQ{1};
  for (int k = 1; k <= n; ++k) rising[k] = rising[k - 1] * (z + PolyQ{Rational{k - 1}});
  std::vector<PolyQ> reflected_rising(static_cast<std::size_t>(n));
  if (n >= 1) {
    reflected_rising[0] = PolyQ{1};
    for (int j = 1; j <= n - 1; ++j)
      reflected_rising[j] = reflected_rising[j - 1] * (reflected + PolyQ{Rational{j - 1}});
  }
  PolyQ sum;
  for (int k = 1; k <= n; ++k) {
    const PolyQ term = rising[k] * reflected_rising[n - k] * Rational{row.c(k)};
    sum = (k % 2 == 0) ? sum + term : sum - term;
  }
  return sum * Rational{factorial(n), factorial(2 * n)};
}

/// B_n^(-m) = S(m+n, m) / binomial(m+n, n), exact.
inline Rational norlund_at_negative_int(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("norlund: negative parameters");
  return Rational{stirling2(m + n, m), binomial(m + n, n)};
}

/// B_n^(z) as the unique degree-<=n interpolant through the n+1 points
/// (z = -m, B_n^(-m)) for m = 0..n, via Newton divided differences.
inline PolyQ norlund_via_interpolation(int n) {
  if (n < 0) throw std::domain_error("norlund: negative index");
  std::vector<Rational> dd(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) dd[m] = norlund_at_negative_int(n, m);
  // nodes z_m = -m, so z_m - z_{m-j} = -j at stage j
  for (int j = 1; j <= n; ++j)
    for (int m = n; m >= j; --m) dd[m] = (dd[m] - dd[m - 1]) / Rational{-j};
  PolyQ result{dd[0]};
  PolyQ basis{1};
  const PolyQ z = PolyQ::variable();
  for (int j = 1; j <= n; ++j) {
    basis = basis * (z + PolyQ{Rational{j - 1}});  // z - z_{j-1}
    result = result + basis * dd[j];
  }
  return result;
}

/// B_n^(N) for integer N >= 0 as the N-th power of the Bernoulli EGF —
/// the multinomial Bernoulli convolution.
inline Rational norlund_int_power(int n, int N) {
  if (n < 0 || N < 0) throw std::domain_error("norlund power: negative parameters");
  std::vector<Rational> egf(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) egf[k] = bernoulli(k) / Rational{factorial(k)};
  const auto power = pow(TruncatedSeries<Rational>{std::move(egf)}, N);
  return egf_coefficient(power, n);
}

/// order! * (coefficient of z^order): the exact derivative at z = 0.
/// Supported orders: 1 and 2.
inline Rational derivative_at_zero(const PolyQ& p, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("derivative_at_zero: supported orders are 1 and 2");
  return p.coeff(order) * Rational{order == 2 ? 2 : 1};
}

}  // namespace euler2
