#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "lpc/errors.hpp"

namespace lpc {

using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in canonical form (mpq_class(num, den) does not reduce).
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses a plain or scientific decimal ("3.5", "-2", ".25", "1e-6", "4.2E+1")
/// into an exact rational. Throws UsageError on malformed input.
inline Rational parse_decimal(std::string_view text) {
  auto fail = [&] { throw UsageError("malformed decimal: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i == end) fail();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < end; ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();

  long exponent = 0;
  if (i < end) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    bool exp_negative = false;
    if (i < end && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == end) fail();
    for (; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) fail();
    }
    if (exp_negative) exponent = -exponent;
  }

  BigInt numerator(digits, 10);
  const long scale = exponent - fraction_digits;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational value = scale < 0 ? Rational(numerator, power) : Rational(numerator * power);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

/// Exact decimal rendering when the denominator divides a power of ten, otherwise
/// a rounded scientific rendering with `significant` digits.
inline std::string to_decimal_string(const Rational& q, int significant = 20) {
  BigInt den = q.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den == 1 && std::max(twos, fives) <= 60) {
    const int places = std::max(twos, fives);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    BigInt scaled = q.get_num() * (scale / q.get_den());
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (places > 0) {
      if (static_cast<int>(s.size()) <= places) s.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(s.size())), '0');
      s.insert(s.size() - static_cast<std::size_t>(places), ".");
      while (s.back() == '0') s.pop_back();
      if (s.back() == '.') s.pop_back();
    }
    return negative ? "-" + s : s;
  }
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(significant));
  const bool negative = !mant.empty() && mant[0] == '-';
  if (negative) mant.erase(0, 1);
  if (mant.empty()) return "0";
  std::string out = mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return negative ? "-" + out : out;
}

inline Rational midpoint(const Rational& lo, const Rational& hi) {
  Rational m = (lo + hi) / 2;
  m.canonicalize();
  return m;
}

}  // namespace lpc
