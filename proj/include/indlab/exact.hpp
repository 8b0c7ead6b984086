#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <cstdint>
#include <string>

namespace indlab {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer binomial(std::size_t n, std::size_t k);
Integer ipow(const Integer& base, std::size_t exponent);
Rational rpow(const Rational& base, std::size_t exponent);
Rational make_rational(std::int64_t num, std::int64_t den = 1);
/// Parses a finite decimal literal such as "0.6" or "1.01" exactly.
Rational decimal(const std::string& literal);

/// "p/q" (or "p" for integers).
std::string exact_string(const Rational& q);
/// Scientific notation with `digits` significant digits; no underflow for tiny values.
std::string decimal_string(const Rational& q, int digits = 12);
/// Nearest double; may underflow to 0 for very small magnitudes.
double to_double(const Rational& q);

/// Largest multiple of 2^-bits that is <= q (resp. smallest that is >= q).
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

/// Closed interval [lo, hi] of rationals. Arithmetic is exact on the endpoints,
/// so an enclosure stays an enclosure through every operation.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
Interval ipow(const Interval& a, std::size_t exponent);
/// Outward rounding of both endpoints to a dyadic grid; keeps numbers small.
Interval widen_to_bits(const Interval& a, unsigned bits);

/// Rigorous enclosures of transcendental constants; width below 2^-(bits-8).
Interval enclose_e(unsigned bits);
Interval enclose_exp(const Rational& x, unsigned bits);
/// Natural logarithm of a positive rational.
Interval enclose_log(const Rational& x, unsigned bits);

}  // namespace indlab
