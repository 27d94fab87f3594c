#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace euler2 {

// Exact scalars. Expression templates are disabled so arithmetic yields
// plain values, which generic ring code relies on.
//
// Rational is canonical by construction: numerator and denominator are
// coprime, the denominator is positive, zero is stored as 0/1.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Int& value) { return value.str(); }

/// Canonical form "p/q"; the "/1" is omitted for integers.
inline std::string to_string(const Rational& value) { return value.str(); }

/// Parses "p", "-p" or "p/q" (q > 0). Rejects anything else.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return fail();
  Int numerator{std::string(text.substr(num_begin, pos - num_begin))};
  if (negative) numerator = -numerator;
  Int denominator{1};
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return fail();
    denominator = Int{std::string(text.substr(den_begin))};
    if (denominator.is_zero()) return fail();
  }
  return Rational{numerator, denominator};
}

inline bool is_ring_unit(const Rational& value) { return !value.is_zero(); }

inline Rational ring_unit_inverse(const Rational& value) {
  if (value.is_zero()) throw std::domain_error("rational: division by zero");
  return Rational{1} / value;
}

}  // namespace euler2
