#pragma once

// The function family f(x) = sum a_k x^k with a_0 = a_1 = 1 and second quotients
// q_n = a_{n-1}^2 / (a_{n-2} a_n) equal to `a` at even n and `b` at odd n.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <deque>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/rational.hpp"

namespace lpc {

struct Exponents {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// a_k = a^{-e.a} b^{-e.b}. Even k = 2m gives (m^2, m(m-1)); odd k = 2m+1 gives (m(m+1), m^2).
constexpr Exponents exponents(std::uint64_t k) {
  const std::uint64_t m = k / 2;
  if (k % 2 == 0) return {m * m, m == 0 ? 0 : m * (m - 1)};
  return {m * (m + 1), m * m};
}

class QuotientSpec {
 public:
  QuotientSpec(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    if (a_ <= 1 || b_ <= 1) {
      throw ParameterError("second quotients must exceed 1 (a=" + to_decimal_string(a_) +
                           ", b=" + to_decimal_string(b_) + ")");
    }
  }

  static QuotientSpec parse(std::string_view a, std::string_view b) {
    return QuotientSpec(parse_decimal(a), parse_decimal(b));
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Second quotient q_n for n >= 2.
  const Rational& quotient(std::size_t n) const { return n % 2 == 0 ? a_ : b_; }

  bool increasing() const { return a_ < b_; }
  bool constant() const { return a_ == b_; }

  double a_double() const { return a_.get_d(); }
  double b_double() const { return b_.get_d(); }

 private:
  Rational a_;
  Rational b_;
};

/// Exact coefficient a_k.
inline Rational coefficient_exact(const QuotientSpec& spec, std::size_t k) {
  const Exponents e = exponents(k);
  BigInt den_a;
  BigInt num_a;
  mpz_pow_ui(num_a.get_mpz_t(), spec.a().get_num_mpz_t(), e.a);
  mpz_pow_ui(den_a.get_mpz_t(), spec.a().get_den_mpz_t(), e.a);
  BigInt den_b;
  BigInt num_b;
  mpz_pow_ui(num_b.get_mpz_t(), spec.b().get_num_mpz_t(), e.b);
  mpz_pow_ui(den_b.get_mpz_t(), spec.b().get_den_mpz_t(), e.b);
  Rational c(den_a * den_b, num_a * num_b);
  c.canonicalize();
  return c;
}

/// Enclosure of a_k from the closed-form exponents: a^{-e_a} b^{-e_b}.
inline Interval coefficient(const QuotientSpec& spec, std::size_t k, Precision prec) {
  require_precision(prec);
  const Exponents e = exponents(k);
  if (e.a == 0 && e.b == 0) return Interval::point_si(1, prec);
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  const Interval denominator = pow(a, static_cast<long>(e.a)) * pow(b, static_cast<long>(e.b));
  return Interval::point_si(1, prec) / denominator;
}

/// Recomputes q_n = a_{n-1}^2 / (a_{n-2} a_n) from coefficient enclosures.
inline Interval quotient_roundtrip(const QuotientSpec& spec, std::size_t n, Precision prec) {
  if (n < 2) throw UsageError("quotient index must be at least 2");
  const Interval prev = coefficient(spec, n - 1, prec);
  return (prev * prev) / (coefficient(spec, n - 2, prec) * coefficient(spec, n, prec));
}

/// On-demand coefficient enclosures at a fixed precision. The cache only grows to
/// the largest index a caller has asked for; instances are not shared across threads.
class CoefficientStream {
 public:
  CoefficientStream(QuotientSpec spec, Precision prec)
      : spec_(std::move(spec)), prec_(prec), log_a_(std::log(spec_.a_double())), log_b_(std::log(spec_.b_double())) {
    require_precision(prec);
  }

  const QuotientSpec& spec() const { return spec_; }
  Precision precision() const { return prec_; }

  const Interval& operator[](std::size_t k) {
    while (cache_.size() <= k) cache_.push_back(coefficient(spec_, cache_.size(), prec_));
    return cache_[k];
  }

  Exponents exponents_at(std::size_t k) const { return exponents(k); }

  /// Natural log of a_k in double precision; used only to choose truncation points.
  double log_coefficient(std::size_t k) const {
    const Exponents e = exponents(k);
    return -(static_cast<double>(e.a) * log_a_ + static_cast<double>(e.b) * log_b_);
  }

 private:
  QuotientSpec spec_;
  Precision prec_;
  double log_a_;
  double log_b_;
  std::deque<Interval> cache_;
};

}  // namespace lpc
