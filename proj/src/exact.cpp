#include "indlab/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "indlab/error.hpp"

namespace indlab {

namespace mp = boost::multiprecision;

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer ipow(const Integer& base, std::size_t exponent) {
  Integer r = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1U) r *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return r;
}

Rational rpow(const Rational& base, std::size_t exponent) {
  return Rational(ipow(mp::numerator(base), exponent), ipow(mp::denominator(base), exponent));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(Integer(num), Integer(den));
}

Rational decimal(const std::string& literal) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < literal.size() && (literal[pos] == '-' || literal[pos] == '+')) negative = literal[pos++] == '-';
  Integer num = 0;
  Integer den = 1;
  bool seen_digit = false;
  bool fraction = false;
  for (; pos < literal.size(); ++pos) {
    const char c = literal[pos];
    if (c == '.' && !fraction) {
      fraction = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("bad decimal literal: " + literal);
    num = num * 10 + (c - '0');
    if (fraction) den *= 10;
    seen_digit = true;
  }
  if (!seen_digit) throw ValidationError("bad decimal literal: " + literal);
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::string exact_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string decimal_string(const Rational& q, int digits) {
  if (q == 0) return "0";
  const mp::mpf_float_100 f(q);
  return f.str(digits, std::ios_base::scientific);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (a < 0 && q * b != a) q -= 1;
  return q;
}

}  // namespace

Rational round_down(const Rational& q, unsigned bits) {
  const Integer scale = Integer(1) << bits;
  return Rational(floor_div(mp::numerator(q) * scale, mp::denominator(q)), scale);
}

Rational round_up(const Rational& q, unsigned bits) { return -round_down(-q, bits); }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing 0");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval ipow(const Interval& a, std::size_t exponent) {
  if (exponent == 0) return Interval::point(1);
  if (a.lo >= 0) return {rpow(a.lo, exponent), rpow(a.hi, exponent)};
  if (a.hi <= 0) {
    const Rational x = rpow(a.lo, exponent), y = rpow(a.hi, exponent);
    return {std::min(x, y), std::max(x, y)};
  }
  const Rational x = rpow(a.lo, exponent), y = rpow(a.hi, exponent);
  if (exponent % 2 == 0) return {Rational(0), std::max(x, y)};
  return {x, y};
}

Interval widen_to_bits(const Interval& a, unsigned bits) { return {round_down(a.lo, bits), round_up(a.hi, bits)}; }

Interval enclose_exp(const Rational& x, unsigned bits) {
  // exp(x) = exp(x / 2^m)^(2^m) with |x / 2^m| <= 1/2.
  unsigned m = 0;
  Rational y = x;
  while (mp::abs(y) > Rational(1, 2)) {
    y /= 2;
    ++m;
  }
  const unsigned work = bits + 2 * m + 16;
  const Rational eps = Rational(Integer(1), Integer(1) << work);
  Rational sum = 0;
  Rational term = 1;
  std::size_t j = 0;
  while (mp::abs(term) > eps) {
    sum += term;
    ++j;
    term = round_down(term * y / j, work + 32);
  }
  // remaining terms shrink by at least 1/2 each step; each rounded term drifts by < 2^-(work+31)
  const Rational slack = 2 * mp::abs(term) + Rational(Integer(2 * (j + 2)), Integer(1) << (work + 32));
  Interval r = widen_to_bits({sum - slack, sum + slack}, work);
  for (unsigned s = 0; s < m; ++s) r = widen_to_bits(r * r, work);
  return widen_to_bits(r, bits);
}

Interval enclose_e(unsigned bits) { return enclose_exp(1, bits); }

namespace {

/// 2 * atanh(s) for 0 <= s <= 1/3.
Interval two_atanh(const Rational& s, unsigned work) {
  const Rational eps = Rational(Integer(1), Integer(1) << work);
  const Rational s2 = s * s;
  Rational power = s;
  Rational sum = 0;
  std::size_t j = 0;
  while (power / (2 * j + 1) > eps) {
    sum += round_down(power / (2 * j + 1), work + 32);
    power = round_down(power * s2, work + 32);
    ++j;
  }
  // tail: sum_{i>=j} s^{2i+1}/(2i+1) <= power / (1 - s^2), plus rounding loss
  const Rational tail = power / (1 - s2) + Rational(Integer(2 * j + 2), Integer(1) << (work + 32));
  return {2 * sum, 2 * (sum + tail)};
}

}  // namespace

Interval enclose_log(const Rational& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log of a non-positive number");
  const unsigned work = bits + 16;
  // x = 2^m * y with 1 <= y < 2
  long m = static_cast<long>(mp::msb(mp::numerator(x))) - static_cast<long>(mp::msb(mp::denominator(x)));
  Rational y = m >= 0 ? Rational(x / Rational(Integer(1) << m)) : Rational(x * Rational(Integer(1) << -m));
  while (y < 1) {
    y *= 2;
    --m;
  }
  while (y >= 2) {
    y /= 2;
    ++m;
  }
  const Interval ln2 = two_atanh(Rational(1, 3), work + 16);
  const Interval lny = two_atanh((y - 1) / (y + 1), work);
  const Interval scaled = m >= 0 ? Interval{ln2.lo * m, ln2.hi * m} : Interval{ln2.hi * m, ln2.lo * m};
  return widen_to_bits(scaled + lny, bits);
}

}  // namespace indlab
