#pragma once

// Outward-rounded interval arithmetic over MPFR. Every operation returns an
// enclosure of the exact result; the result precision is the larger of the
// operand precisions.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "lpc/errors.hpp"
#include "lpc/rational.hpp"

namespace lpc {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMinPrecision = 32;

enum class SignVerdict { StrictlyNegative, StrictlyPositive, NonPositive, NonNegative, Indeterminate };

inline const char* to_string(SignVerdict s) {
  switch (s) {
    case SignVerdict::StrictlyNegative: return "StrictlyNegative";
    case SignVerdict::StrictlyPositive: return "StrictlyPositive";
    case SignVerdict::NonPositive: return "NonPositive";
    case SignVerdict::NonNegative: return "NonNegative";
    case SignVerdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

inline void require_precision(Precision prec) {
  if (prec < kMinPrecision) {
    throw ConfigError("working precision " + std::to_string(prec) + " is below the minimum of " +
                      std::to_string(kMinPrecision) + " bits");
  }
}

class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const Interval& other) {
    init(other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }

  Interval(Interval&& other) noexcept {
    init(kMinPrecision);
    swap(other);
  }

  Interval& operator=(const Interval& other) {
    if (this != &other) {
      Interval copy(other);
      swap(copy);
    }
    return *this;
  }

  Interval& operator=(Interval&& other) noexcept {
    swap(other);
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  void swap(Interval& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }

  static Interval point(double v, Precision prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval point_si(long v, Precision prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const Rational& q, Precision prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static Interval from_bounds(double lo, double hi, Precision prec = kDefaultPrecision) {
    if (!(lo <= hi)) throw DomainError("interval bounds out of order");
    Interval r(prec);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
  }

  static Interval hull(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }

  static Interval pi(Precision prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  static Interval entire(Precision prec = kDefaultPrecision) {
    Interval r(prec);
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
  }

  Precision precision() const { return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_)); }

  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }

  double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const {
    if (mpfr_inf_p(lo_) || mpfr_inf_p(hi_)) return std::nan("");
    Interval m = mid();
    return mpfr_get_d(m.lo_, MPFR_RNDN);
  }

  /// Upper bound of hi - lo as a double.
  double width_double() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    const double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }

  Interval width() const {
    Interval r(precision());
    mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    return r;
  }

  /// Point enclosure of the midpoint, rounded to nearest at the working precision.
  Interval mid() const {
    Interval r(precision());
    mpfr_t s;
    mpfr_init2(s, precision() + 2);
    mpfr_add(s, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(s, s, 1, MPFR_RNDN);
    mpfr_set(r.lo_, s, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    mpfr_clear(s);
    return r;
  }

  Interval lower_point() const {
    Interval r(precision());
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, lo_, MPFR_RNDU);
    return r;
  }

  Interval upper_point() const {
    Interval r(precision());
    mpfr_set(r.lo_, hi_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  /// Re-rounds outward to a new precision.
  Interval with_precision(Precision prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  /// Widens each endpoint by `ulps` units in the last place at the current precision.
  Interval widened(unsigned ulps = 1) const {
    Interval r(*this);
    for (unsigned i = 0; i < ulps; ++i) {
      mpfr_nextbelow(r.lo_);
      mpfr_nextabove(r.hi_);
    }
    return r;
  }

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool contains(double v) const { return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0; }
  bool contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
  }
  bool contains(const Interval& inner) const {
    return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
  }

  /// Certainly x < y for every member pair.
  bool certainly_less(const Interval& y) const { return mpfr_less_p(hi_, y.lo_) != 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }

  /// Outward decimal renderings ("%.*Re" with directed rounding).
  std::string lower_decimal(int digits = 0) const { return render(lo_, digits, 'D'); }
  std::string upper_decimal(int digits = 0) const { return render(hi_, digits, 'U'); }
  std::string mid_decimal(int digits = 0) const { return render(mid().lo_, digits, 'N'); }

  /// Decimal digits that represent the working precision.
  int decimal_digits() const { return static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1; }

  friend Interval operator-(const Interval& x) {
    Interval r(x.precision());
    mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    if (mpfr_sgn(x.lo_) >= 0 && mpfr_sgn(y.lo_) >= 0) {
      mul_checked(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
      mul_checked(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
      return r;
    }
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_srcptr xs[2] = {x.lo_, x.hi_};
    mpfr_srcptr ys[2] = {y.lo_, y.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto* xa : xs) {
      for (auto* yb : ys) {
        mul_checked(t, xa, yb, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mul_checked(t, xa, yb, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return r;
  }

  friend Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero()) throw DomainError("division by an interval containing 0");
    Interval r(std::max(x.precision(), y.precision()));
    if (mpfr_sgn(x.lo_) >= 0 && mpfr_sgn(y.lo_) > 0) {
      mpfr_div(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
      mpfr_div(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
      return r;
    }
    mpfr_t t;
    mpfr_init2(t, r.precision());
    mpfr_srcptr xs[2] = {x.lo_, x.hi_};
    mpfr_srcptr ys[2] = {y.lo_, y.hi_};
    mpfr_set_inf(r.lo_, 1);
    mpfr_set_inf(r.hi_, -1);
    for (auto* xa : xs) {
      for (auto* yb : ys) {
        mpfr_div(t, xa, yb, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, xa, yb, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
      }
    }
    mpfr_clear(t);
    return r;
  }

  Interval& operator+=(const Interval& y) { return *this = *this + y; }
  Interval& operator-=(const Interval& y) { return *this = *this - y; }
  Interval& operator*=(const Interval& y) { return *this = *this * y; }
  Interval& operator/=(const Interval& y) { return *this = *this / y; }

  /// Multiplication by an exact integer.
  friend Interval scale(const Interval& x, long k) {
    Interval r(x.precision());
    if (k >= 0) {
      mpfr_mul_si(r.lo_, x.lo_, k, MPFR_RNDD);
      mpfr_mul_si(r.hi_, x.hi_, k, MPFR_RNDU);
    } else {
      mpfr_mul_si(r.lo_, x.hi_, k, MPFR_RNDD);
      mpfr_mul_si(r.hi_, x.lo_, k, MPFR_RNDU);
    }
    return r;
  }

  /// Multiplication by 2^e (exact unless over/underflow).
  friend Interval ldexp(const Interval& x, long e) {
    Interval r(x.precision());
    mpfr_mul_2si(r.lo_, x.lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, x.hi_, e, MPFR_RNDU);
    return r;
  }

  friend Interval sqrt(const Interval& x) {
    if (mpfr_sgn(x.lo_) < 0) throw DomainError("sqrt of an interval reaching below 0");
    Interval r(x.precision());
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval abs(const Interval& x) {
    if (mpfr_sgn(x.lo_) >= 0) return x;
    if (mpfr_sgn(x.hi_) <= 0) return -x;
    Interval r(x.precision());
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval pow(const Interval& x, long n) {
    if (n < 0) {
      Interval one = point_si(1, x.precision());
      return one / pow(x, -n);
    }
    Interval r(x.precision());
    const auto e = static_cast<unsigned long>(n);
    if (n == 0) {
      mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
      mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
      return r;
    }
    if (n % 2 == 1 || mpfr_sgn(x.lo_) >= 0) {
      mpfr_pow_ui(r.lo_, x.lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, x.hi_, e, MPFR_RNDU);
      return r;
    }
    if (mpfr_sgn(x.hi_) <= 0) {
      mpfr_pow_ui(r.lo_, x.hi_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, x.lo_, e, MPFR_RNDU);
      return r;
    }
    Interval m = abs(x);
    mpfr_set_zero(r.lo_, 1);
    mpfr_pow_ui(r.hi_, m.hi_, e, MPFR_RNDU);
    return r;
  }

  friend Interval cos(const Interval& x) { return trig(x, false); }
  friend Interval sin(const Interval& x) { return trig(x, true); }

  friend std::optional<Interval> intersect(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_max(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) return std::nullopt;
    return r;
  }

  friend Interval min(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval max(const Interval& x, const Interval& y) {
    Interval r(std::max(x.precision(), y.precision()));
    mpfr_max(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lower_decimal(17) << ", " << x.upper_decimal(17) << ']';
  }

 private:
  void init(Precision prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }

  // 0 * inf yields NaN in MPFR; an enclosure must stay total.
  static void mul_checked(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    if ((mpfr_zero_p(a) && mpfr_inf_p(b)) || (mpfr_inf_p(a) && mpfr_zero_p(b))) {
      mpfr_set_zero(out, 1);
      return;
    }
    mpfr_mul(out, a, b, rnd);
  }

  static std::string render(mpfr_srcptr v, int digits, char mode) {
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(mpfr_get_prec(v)) * 0.30103)) + 1;
    char* buffer = nullptr;
    int n = 0;
    switch (mode) {
      case 'D': n = mpfr_asprintf(&buffer, "%.*RDe", digits - 1, v); break;
      case 'U': n = mpfr_asprintf(&buffer, "%.*RUe", digits - 1, v); break;
      default: n = mpfr_asprintf(&buffer, "%.*RNe", digits - 1, v); break;
    }
    if (n < 0 || buffer == nullptr) return "nan";
    std::string s(buffer);
    mpfr_free_str(buffer);
    return s;
  }

  // Enclosure of cos or sin over an interval: endpoint values plus any interior
  // extremum. Extrema of cos sit at integer multiples of pi; sin is handled through
  // the shifted lattice x/pi - 1/2.
  static Interval trig(const Interval& x, bool sine) {
    const Precision prec = x.precision();
    Interval r(prec);
    if (!x.is_finite()) {
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      return r;
    }
    Interval t = x / pi(prec);
    if (sine) t = t - from_rational(Rational(1, 2), prec);
    mpfr_t span;
    mpfr_init2(span, prec);
    mpfr_sub(span, t.hi_, t.lo_, MPFR_RNDU);
    const bool full_period = mpfr_cmp_ui(span, 2) >= 0;
    mpfr_clear(span);
    if (full_period) {
      mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      return r;
    }
    mpfr_t a;
    mpfr_t b;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    auto eval = [&](mpfr_ptr out, mpfr_srcptr arg, mpfr_rnd_t rnd) {
      if (sine) {
        mpfr_sin(out, arg, rnd);
      } else {
        mpfr_cos(out, arg, rnd);
      }
    };
    eval(a, x.lo_, MPFR_RNDD);
    eval(b, x.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    eval(a, x.lo_, MPFR_RNDU);
    eval(b, x.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);

    const long first = mpfr_get_si(t.lo_, MPFR_RNDU);
    const long last = mpfr_get_si(t.hi_, MPFR_RNDD);
    for (long m = first; m <= last && m <= first + 2; ++m) {
      const bool even = (m % 2 + 2) % 2 == 0;
      // cos peaks (+1) at even multiples, troughs (-1) at odd; the sine lattice is
      // shifted so the same parity rule applies.
      if (even) {
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      } else {
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
      }
    }
    if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

inline SignVerdict sign_of(const Interval& x) {
  if (mpfr_sgn(x.lower()) > 0) return SignVerdict::StrictlyPositive;
  if (mpfr_sgn(x.upper()) < 0) return SignVerdict::StrictlyNegative;
  if (mpfr_sgn(x.lower()) == 0) return SignVerdict::NonNegative;
  if (mpfr_sgn(x.upper()) == 0) return SignVerdict::NonPositive;
  return SignVerdict::Indeterminate;
}

/// True when the verdict certifies x >= 0 (respectively x <= 0).
inline bool certifies_nonnegative(SignVerdict s) {
  return s == SignVerdict::StrictlyPositive || s == SignVerdict::NonNegative;
}
inline bool certifies_nonpositive(SignVerdict s) {
  return s == SignVerdict::StrictlyNegative || s == SignVerdict::NonPositive;
}

/// Enclosure of sqrt(q) for an exact rational.
inline Interval sqrt(const Rational& q, Precision prec) { return sqrt(Interval::from_rational(q, prec)); }

}  // namespace lpc
