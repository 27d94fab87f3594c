#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "euler2/rational.hpp"

namespace euler2 {

// Dense univariate polynomial over Rational, coefficients stored in
// ascending degree. Canonical form: no trailing zero coefficients, the zero
// polynomial stores nothing (degree -1). Canonical form is what makes
// operator== decide exact equality.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long long value) : PolyQ(Rational{value}) {}
  PolyQ(Rational value) {
    if (!value.is_zero()) coeffs_.push_back(std::move(value));
  }
  PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyQ variable() { return PolyQ{Rational{0}, Rational{1}}; }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational{0};
    return coeffs_[static_cast<std::size_t>(i)];
  }

  Rational leading() const { return coeffs_.empty() ? Rational{0} : coeffs_.back(); }

  /// Horner evaluation.
  Rational operator()(const Rational& point) const {
    Rational acc{0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
  }

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return PolyQ{std::move(out)};
  }

  friend PolyQ operator-(const PolyQ& a) {
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = -a.coeffs_[i];
    return PolyQ{std::move(out)};
  }

  friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ{};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational{0});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyQ{std::move(out)};
  }

  friend PolyQ operator*(const PolyQ& a, const Rational& s) {
    if (s.is_zero()) return PolyQ{};
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i] * s;
    return PolyQ{std::move(out)};
  }

  friend PolyQ operator/(const PolyQ& a, const Rational& s) {
    if (s.is_zero()) throw std::domain_error("polynomial: division by zero scalar");
    std::vector<Rational> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i] / s;
    return PolyQ{std::move(out)};
  }

  friend bool operator==(const PolyQ& a, const PolyQ& b) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline bool is_ring_unit(const PolyQ& p) { return p.degree() == 0; }

inline PolyQ ring_unit_inverse(const PolyQ& p) {
  if (p.degree() != 0)
    throw std::domain_error("polynomial: only nonzero constants are invertible");
  return PolyQ{ring_unit_inverse(p.coeff(0))};
}

/// "[c0, c1, ...]" ascending; the zero polynomial prints "[]".
inline std::string to_string(const PolyQ& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p.coefficients()[i]);
  }
  out += "]";
  return out;
}

}  // namespace euler2
