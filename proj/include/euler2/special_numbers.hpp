#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "euler2/polynomial.hpp"
#include "euler2/rational.hpp"
#include "euler2/series.hpp"

namespace euler2 {

// Scalar number families. Everything is memoized row-at-a-time or
// prefix-at-a-time; caches are thread-confined and behave as if absent.
// Out-of-range Stirling and binomial indices return 0 so identity sums can
// run over natural ranges without boundary special cases.

inline Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative index");
  thread_local std::vector<Int> cache{Int{1}};
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

inline Int binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: negative row index");
  if (k < 0 || k > n) return Int{0};
  thread_local std::vector<std::vector<Int>> rows{{Int{1}}};
  while (static_cast<long long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<Int> row(prev.size() + 1, Int{1});
    for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// (2n-1)!! = 1*3*5*...*(2n-1), the number of Stirling permutations of order n.
inline Int double_factorial_odd(int n) {
  if (n < 1) throw std::domain_error("double_factorial_odd: index must be >= 1");
  thread_local std::vector<Int> cache{Int{1}};  // cache[m] = (2m-1)!!, cache[0] unused sentinel
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(cache.back() * (2 * m - 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
inline Rational harmonic(int n) {
  if (n < 0) throw std::domain_error("harmonic: negative index");
  thread_local std::vector<Rational> cache{Rational{0}};
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(cache.back() + Rational{Int{1}, Int{m}});
  }
  return cache[static_cast<std::size_t>(n)];
}

/// Stirling numbers of the second kind, S(n,m) = m*S(n-1,m) + S(n-1,m-1).
inline Int stirling2(int n, int m) {
  if (n < 0 || m < 0 || m > n) return Int{0};
  thread_local std::vector<std::vector<Int>> rows{{Int{1}}};
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<Int> row(static_cast<std::size_t>(r) + 1, Int{0});
    for (int j = 1; j <= r; ++j)
      row[j] = (j < r ? Int{j} * prev[j] : Int{0}) + prev[j - 1];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

/// Signed Stirling numbers of the first kind: coefficients of the falling
/// factorial, s(n,k) = s(n-1,k-1) - (n-1)*s(n-1,k).
inline Int stirling1_signed(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int{0};
  thread_local std::vector<std::vector<Int>> rows{{Int{1}}};
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    const auto& prev = rows.back();
    std::vector<Int> row(static_cast<std::size_t>(r) + 1, Int{0});
    for (int j = 1; j <= r; ++j)
      row[j] = prev[j - 1] - (j < r ? Int{r - 1} * prev[j] : Int{0});
    // row[0] = -(r-1) * s(r-1, 0), zero for r >= 2; s(1,0) = 0 as well
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace detail {

// Coefficients of (e^x - 1)/x through x^order.
inline TruncatedSeries<Rational> exp_minus_one_over_x(int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) coeffs[k] = Rational{Int{1}, factorial(k + 1)};
  return TruncatedSeries<Rational>{std::move(coeffs)};
}

}  // namespace detail

/// Bernoulli numbers as EGF coefficients of x/(e^x - 1).
inline Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  thread_local std::vector<Rational> cache;
  if (static_cast<int>(cache.size()) <= n) {
    const int t = std::max({16, n, 2 * static_cast<int>(cache.size())});
    const auto inv = inverse(detail::exp_minus_one_over_x(t));
    cache.resize(static_cast<std::size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) cache[k] = egf_coefficient(inv, k);
  }
  return cache[static_cast<std::size_t>(n)];
}

/// Cauchy numbers of the second kind: EGF coefficients of -x/((1-x)ln(1-x)).
inline Rational cauchy2(int n) {
  if (n < 0) throw std::domain_error("cauchy2: negative index");
  thread_local std::vector<Rational> cache;
  if (static_cast<int>(cache.size()) <= n) {
    const int t = std::max({16, n, 2 * static_cast<int>(cache.size())});
    std::vector<Rational> lin(static_cast<std::size_t>(t) + 2, Rational{0});
    lin[0] = 1;
    lin[1] = -1;
    const auto lg = log(TruncatedSeries<Rational>{std::move(lin)});
    // ln(1-x) = -x*h with h_k = 1/(k+1); the EGF is then 1/((1-x)*h).
    std::vector<Rational> h(static_cast<std::size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) h[k] = -lg[k + 1];
    std::vector<Rational> one_minus_x(static_cast<std::size_t>(t) + 1, Rational{0});
    one_minus_x[0] = 1;
    if (t >= 1) one_minus_x[1] = -1;
    const auto egf = inverse(TruncatedSeries<Rational>{std::move(one_minus_x)} *
                             TruncatedSeries<Rational>{std::move(h)});
    cache.resize(static_cast<std::size_t>(t) + 1);
    for (int k = 0; k <= t; ++k) cache[k] = egf_coefficient(egf, k);
  }
  return cache[static_cast<std::size_t>(n)];
}

/// Product (argument)(argument+1)...(argument+count-1) expanded as a
/// polynomial; the argument may be any polynomial (for example -z+c).
inline PolyQ rising_factorial_poly(const PolyQ& argument, int count) {
  if (count < 0) throw std::domain_error("rising factorial: negative length");
  PolyQ result{1};
  for (int i = 0; i < count; ++i) result = result * (argument + PolyQ{Rational{i}});
  return result;
}

/// The rising factorial of z itself, a degree-count polynomial.
inline PolyQ rising_factorial_poly(int count) {
  return rising_factorial_poly(PolyQ::variable(), count);
}

/// (start)(start+1)...(start+count-1) evaluated directly, no expansion.
inline Rational rising_factorial_eval(const Rational& start, int count) {
  if (count < 0) throw std::domain_error("rising factorial: negative length");
  Rational result{1};
  for (int i = 0; i < count; ++i) result *= start + i;
  return result;
}

}  // namespace euler2
