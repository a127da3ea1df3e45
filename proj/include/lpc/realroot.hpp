#pragma once

// Polynomials over exact rationals or interval enclosures, Sturm real-root counting,
// square-free decomposition, and unit-disk root counting.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/rational.hpp"

namespace lpc {

inline bool is_exact_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_exact_zero(const Interval& x) {
  return mpfr_zero_p(x.lower()) != 0 && mpfr_zero_p(x.upper()) != 0;
}

/// Coefficients in ascending degree; trailing exact zeros are trimmed.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial monomial(T coefficient, std::size_t degree) {
    std::vector<T> c(degree + 1, zero_like(coefficient));
    c[degree] = std::move(coefficient);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; the zero polynomial reports -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t k) const { return c_[k]; }
  const T& leading() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }

  T evaluate(const T& x) const {
    if (c_.empty()) return zero_like(x);
    T acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(scale_by(c_[k], static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  /// Coefficient sequence reversed: w^n p(1/w).
  Polynomial reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const std::size_t n = std::max(p.c_.size(), q.c_.size());
    std::vector<T> r;
    r.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k < p.c_.size() && k < q.c_.size()) r.push_back(p.c_[k] + q.c_[k]);
      else r.push_back(k < p.c_.size() ? p.c_[k] : q.c_[k]);
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& p) {
    std::vector<T> r;
    for (const T& x : p.c_) r.push_back(T(-x));
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, zero_like(p.c_[0]));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> r;
    for (const T& x : p.c_) r.push_back(s * x);
    return Polynomial(std::move(r));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? ", " : "") << c_[k];
    os << "]";
    return os.str();
  }

 private:
  static T zero_like(const T& x) {
    if constexpr (std::is_same_v<T, Interval>) return Interval(x.precision());
    else return T(0);
  }
  static T scale_by(const T& x, long k) {
    if constexpr (std::is_same_v<T, Interval>) return scale(x, k);
    else return T(x * k);
  }
  void trim() {
    while (!c_.empty() && is_exact_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using IntervalPolynomial = Polynomial<Interval>;

inline RationalPolynomial polynomial_from_integers(const std::vector<long>& ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

inline IntervalPolynomial to_interval(const RationalPolynomial& p, Precision prec) {
  std::vector<Interval> c;
  for (const Rational& x : p.coefficients()) c.push_back(Interval::from_rational(x, prec));
  return IntervalPolynomial(std::move(c));
}

/// Polynomial whose roots are exactly the given (integer) roots, leading coefficient 1.
inline RationalPolynomial from_roots(const std::vector<Rational>& roots) {
  RationalPolynomial p(std::vector<Rational>{Rational(1)});
  for (const Rational& r : roots) p = p * RationalPolynomial(std::vector<Rational>{Rational(-r), Rational(1)});
  return p;
}

namespace detail {

using IntPoly = std::vector<BigInt>;  // ascending, trimmed

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Integer multiple of p with coprime coefficients and positive leading coefficient.
inline IntPoly primitive(const RationalPolynomial& p) {
  BigInt lcm_den = 1;
  for (const Rational& x : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  IntPoly r;
  for (const Rational& x : p.coefficients()) r.push_back(x.get_num() * (lcm_den / x.get_den()));
  trim(r);
  BigInt g = 0;
  for (const BigInt& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 0 && g != 1) for (BigInt& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

inline void make_primitive(IntPoly& p, bool keep_sign) {
  trim(p);
  if (p.empty()) return;
  BigInt g = 0;
  for (const BigInt& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) for (BigInt& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  if (!keep_sign && p.back() < 0) for (BigInt& x : p) x = -x;
}

/// Pseudo-remainder of a by b; returns the number of reduction steps taken, each of
/// which multiplied the dividend by lc(b).
inline std::size_t pseudo_remainder(IntPoly& a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  std::size_t steps = 0;
  while (!a.empty() && a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (BigInt& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    trim(a);
    ++steps;
  }
  return steps;
}

inline int sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  Rational acc(p.back());
  for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * x + Rational(p[k]);
  return sgn(acc);
}

inline int sign_at_infinity(const IntPoly& p, bool negative) {
  if (p.empty()) return 0;
  const int s = sgn(p.back());
  return (negative && (p.size() - 1) % 2 == 1) ? -s : s;
}

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  return d;
}

/// Remainder of a by b over Q, scaled to a primitive integer polynomial of the same sign.
inline IntPoly remainder_same_sign(IntPoly a, const IntPoly& b) {
  const std::size_t steps = pseudo_remainder(a, b);
  if (b.back() < 0 && steps % 2 == 1) for (BigInt& x : a) x = -x;
  make_primitive(a, true);
  return a;
}

inline IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = remainder_same_sign(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a, false);
  return a;
}

/// Exact quotient a / b when b divides a.
inline IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  // Work over Q and rescale; inputs are small-degree.
  std::vector<Rational> num(a.begin(), a.end());
  std::vector<Rational> q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational coef = num[i + b.size() - 1] / Rational(b.back());
    q[i] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) num[i + j] -= coef * Rational(b[j]);
  }
  return primitive(RationalPolynomial(std::move(q)));
}

inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, derivative(p)};
  make_primitive(chain[1], true);
  while (chain.back().size() > 1) {
    IntPoly r = remainder_same_sign(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (BigInt& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

struct Endpoint {
  std::optional<Rational> value;  // nullopt means infinity of the given sign
  bool negative_infinity = false;
};

inline int variations(const std::vector<IntPoly>& chain, const Endpoint& e) {
  int count = 0;
  int last = 0;
  for (const IntPoly& q : chain) {
    const int s = e.value ? sign_at(q, *e.value) : sign_at_infinity(q, e.negative_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Distinct real roots of the square-free integer polynomial p in (lo, hi].
inline int count_distinct(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.size() <= 1) return 0;
  const auto chain = sturm_chain(p);
  return variations(chain, lo) - variations(chain, hi);
}

/// Yun decomposition: factors[i] is the product of the irreducible factors of
/// multiplicity i+1.
inline std::vector<IntPoly> square_free_factors(const IntPoly& p) {
  std::vector<IntPoly> out;
  if (p.size() <= 1) return out;
  auto to_q = [](const IntPoly& x) { return RationalPolynomial(std::vector<Rational>(x.begin(), x.end())); };
  auto qdiv = [](const RationalPolynomial& n, const RationalPolynomial& d) {
    std::vector<Rational> num = n.coefficients();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    if (n.degree() < d.degree()) return RationalPolynomial();
    std::vector<Rational> q(num.size() - dd);
    for (std::size_t i = q.size(); i-- > 0;) {
      const Rational coef = num[i + dd] / d.leading();
      q[i] = coef;
      for (std::size_t j = 0; j <= dd; ++j) num[i + j] -= coef * d[j];
    }
    return RationalPolynomial(std::move(q));
  };
  const RationalPolynomial A = to_q(p);
  const RationalPolynomial G = to_q(gcd(p, derivative(p)));
  RationalPolynomial B = qdiv(A, G);
  RationalPolynomial C = qdiv(A.derivative(), G);
  RationalPolynomial D = C - B.derivative();
  while (B.degree() > 0) {
    IntPoly gb = gcd(primitive(B), primitive(D));
    RationalPolynomial Gq = to_q(gb);
    out.push_back(gb);
    B = qdiv(B, Gq);
    C = qdiv(D, Gq);
    D = C - B.derivative();
  }
  return out;
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi]; nullopt bounds mean -inf / +inf.
inline int sturm_count(const RationalPolynomial& p, const std::optional<Rational>& lo = std::nullopt,
                       const std::optional<Rational>& hi = std::nullopt) {
  if (p.degree() < 1) throw UsageError("Sturm count needs a nonconstant polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  const detail::IntPoly ip = detail::primitive(p);
  const detail::IntPoly sf = detail::exact_divide(ip, detail::gcd(ip, detail::derivative(ip)));
  return detail::count_distinct(sf, {lo, true}, {hi, false});
}

/// Real roots in (lo, hi] counted with multiplicity.
inline int real_root_count(const RationalPolynomial& p, const std::optional<Rational>& lo = std::nullopt,
                           const std::optional<Rational>& hi = std::nullopt) {
  if (p.degree() < 1) return 0;
  if (lo && hi && *lo >= *hi) return 0;
  const auto factors = detail::square_free_factors(detail::primitive(p));
  int total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() <= 1) continue;
    total += static_cast<int>(i + 1) * detail::count_distinct(factors[i], {lo, true}, {hi, false});
  }
  return total;
}

/// Square-free part (primitive, positive leading coefficient).
inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() < 1) return p;
  const detail::IntPoly ip = detail::primitive(p);
  const detail::IntPoly sf = detail::exact_divide(ip, detail::gcd(ip, detail::derivative(ip)));
  return RationalPolynomial(std::vector<Rational>(sf.begin(), sf.end()));
}

/// Multiplicity-aware decomposition p = c * prod f_i^i.
inline std::vector<RationalPolynomial> square_free_decomposition(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> out;
  for (const auto& f : detail::square_free_factors(detail::primitive(p)))
    out.emplace_back(std::vector<Rational>(f.begin(), f.end()));
  return out;
}

/// True iff every root of p is real (multiplicities counted). Constants are vacuously real-rooted.
inline bool all_real(const RationalPolynomial& p) {
  if (p.is_zero()) throw UsageError("zero polynomial has no root structure");
  if (p.degree() < 1) return true;
  return real_root_count(p) == p.degree();
}

/// Number of nonreal roots counted with multiplicity.
inline int nonreal_count(const RationalPolynomial& p) {
  if (p.degree() < 1) return 0;
  return static_cast<int>(p.degree()) - real_root_count(p);
}

struct RootSigns {
  int negative = 0;
  int zero = 0;
  int positive = 0;
};

/// Real roots split by sign, with multiplicity.
inline RootSigns real_root_signs(const RationalPolynomial& p) {
  RootSigns s;
  if (p.degree() < 1) return s;
  s.negative = real_root_count(p, std::nullopt, Rational(0)) ;
  std::size_t z = 0;
  while (z < p.size() && is_exact_zero(p[z])) ++z;
  s.zero = static_cast<int>(z);
  s.negative -= s.zero;
  s.positive = real_root_count(p, Rational(0), std::nullopt);
  return s;
}

/// p(x) >= 0 for every real x.
inline bool nonnegative_on_reals(const RationalPolynomial& p) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return sgn(p[0]) > 0;
  if (p.degree() % 2 == 1 || sgn(p.leading()) < 0) return false;
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) {
    if (factors[i].degree() >= 1 && sturm_count(factors[i]) > 0) return false;
  }
  return true;
}

// ---- interval fast path ----

namespace detail {

inline int certain_sign(const Interval& v) {
  if (v.certainly_positive()) return 1;
  if (v.certainly_negative()) return -1;
  if (is_exact_zero(v)) return 0;
  throw InconclusiveError("Sturm sequence value has indeterminate sign");
}

/// Classical Sturm chain in interval arithmetic. Every leading coefficient must
/// exclude zero; success therefore also certifies that p is square-free.
inline std::vector<IntervalPolynomial> interval_sturm_chain(const IntervalPolynomial& p) {
  auto rem = [](const IntervalPolynomial& a, const IntervalPolynomial& b) {
    if (b.leading().contains_zero()) throw InconclusiveError("Sturm remainder with indeterminate leading coefficient");
    std::vector<Interval> r = a.coefficients();
    const std::size_t db = b.size() - 1;
    while (r.size() > db) {
      const Interval coef = r.back() / b.leading();
      const std::size_t shift = r.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) r[i + shift] -= coef * b[i];
      r.pop_back();
    }
    return r;
  };
  std::vector<IntervalPolynomial> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    std::vector<Interval> r = rem(chain[chain.size() - 2], chain.back());
    // Degree of the remainder must be decided: strip top coefficients that are exactly 0,
    // and refuse when the top one merely contains 0.
    while (!r.empty() && is_exact_zero(r.back())) r.pop_back();
    if (r.empty()) throw InconclusiveError("polynomial is not square-free (or remainder vanished)");
    if (r.back().contains_zero()) throw InconclusiveError("remainder degree is indeterminate");
    for (Interval& x : r) x = -x;
    chain.emplace_back(std::move(r));
  }
  return chain;
}

inline int interval_variations(const std::vector<IntervalPolynomial>& chain, const std::optional<Interval>& x,
                               bool negative_infinity) {
  int count = 0;
  int last = 0;
  for (const IntervalPolynomial& q : chain) {
    int s = 0;
    if (x) {
      s = certain_sign(q.evaluate(*x));
    } else {
      s = certain_sign(q.leading());
      if (negative_infinity && q.degree() % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace detail

/// Distinct real roots in (lo, hi] for an enclosure polynomial. Throws InconclusiveError
/// when any sign in the chain cannot be certified.
inline int sturm_count(const IntervalPolynomial& p, const std::optional<Interval>& lo = std::nullopt,
                       const std::optional<Interval>& hi = std::nullopt) {
  if (p.degree() < 1) throw UsageError("Sturm count needs a nonconstant polynomial");
  if (p.leading().contains_zero()) throw InconclusiveError("leading coefficient contains zero");
  const auto chain = detail::interval_sturm_chain(p);
  return detail::interval_variations(chain, lo, true) - detail::interval_variations(chain, hi, false);
}

namespace detail {

/// Drops exact-zero low coefficients (the real root 0 with its multiplicity).
inline IntervalPolynomial strip_zero_roots(const IntervalPolynomial& p) {
  std::size_t z = 0;
  while (z < p.size() && is_exact_zero(p[z])) ++z;
  if (z == 0) return p;
  return IntervalPolynomial(std::vector<Interval>(p.coefficients().begin() + static_cast<long>(z), p.coefficients().end()));
}

}  // namespace detail

inline int nonreal_count(const IntervalPolynomial& p) {
  const IntervalPolynomial q = detail::strip_zero_roots(p);
  if (q.degree() < 1) return 0;
  return static_cast<int>(q.degree()) - sturm_count(q);
}

/// All roots real, decided on enclosures (the nonzero part must be certified square-free).
inline bool all_real(const IntervalPolynomial& p) { return nonreal_count(p) == 0; }

// ---- unit disk ----

namespace detail {

template <class T>
int certain_sign_of(const T& x) {
  if constexpr (std::is_same_v<T, Interval>) return certain_sign(x);
  else return sgn(x);
}

template <class T>
bool same_enclosure(const T& x, const T& y) {
  if constexpr (std::is_same_v<T, Interval>) {
    return mpfr_equal_p(x.lower(), y.lower()) && mpfr_equal_p(x.upper(), y.upper());
  } else {
    return x == y;
  }
}

/// w^m p(w) with p palindromic of degree 2m equals w^m Q(w + 1/w).
template <class T>
Polynomial<T> palindromic_reduction(const Polynomial<T>& p) {
  const std::size_t m = static_cast<std::size_t>(p.degree()) / 2;
  const T& unit = p[m];
  auto constant = [&](long v) {
    if constexpr (std::is_same_v<T, Interval>) return Interval::point_si(v, unit.precision());
    else return Rational(v);
  };
  const Polynomial<T> z(std::vector<T>{constant(0), constant(1)});
  Polynomial<T> v_prev(std::vector<T>{constant(2)});
  Polynomial<T> v_cur = z;
  Polynomial<T> q(std::vector<T>{p[m]});
  for (std::size_t k = 1; k <= m; ++k) {
    q = q + p[m - k] * v_cur;
    Polynomial<T> next = z * v_cur - v_prev;
    v_prev = std::move(v_cur);
    v_cur = std::move(next);
  }
  return q;
}

template <class T>
int unit_disk_count_impl(Polynomial<T> p, int depth) {
  if (depth > 200) throw InconclusiveError("Schur-Cohn recursion too deep");
  std::size_t zeros = 0;
  while (zeros < p.size() && is_exact_zero(p[zeros])) ++zeros;
  if (zeros > 0) {
    std::vector<T> rest(p.coefficients().begin() + static_cast<long>(zeros), p.coefficients().end());
    return static_cast<int>(zeros) + unit_disk_count_impl(Polynomial<T>(std::move(rest)), depth + 1);
  }
  const long n = p.degree();
  if (n <= 0) return 0;
  const T& c0 = p[0];
  const T& cn = p.leading();
  const T delta = c0 * c0 - cn * cn;
  int s = 0;
  bool degenerate = false;
  if constexpr (std::is_same_v<T, Interval>) {
    if (delta.certainly_positive()) s = 1;
    else if (delta.certainly_negative()) s = -1;
    else degenerate = true;
  } else {
    s = sgn(delta);
    degenerate = s == 0;
  }
  if (degenerate) {
    bool palindromic = true;
    bool anti = true;
    for (long k = 0; k <= n; ++k) {
      const T& x = p[static_cast<std::size_t>(k)];
      const T& y = p[static_cast<std::size_t>(n - k)];
      if (!same_enclosure(x, y)) palindromic = false;
      if (!same_enclosure(x, T(-y))) anti = false;
    }
    if (anti && !palindromic) throw InconsistencyError("anti-reciprocal polynomial has a root at w = 1");
    if (!palindromic) {
      // Adjoin the root 1/2: |c0 / 2| != |cn| makes the next step regular.
      auto constant = [&](long num, long den) {
        if constexpr (std::is_same_v<T, Interval>) return Interval::from_rational(Rational(num, den), cn.precision());
        else return Rational(num, den);
      };
      const Polynomial<T> shifted = p * Polynomial<T>(std::vector<T>{constant(-1, 2), constant(1, 1)});
      return unit_disk_count_impl(shifted, depth + 1) - 1;
    }
    if (n % 2 == 1) throw InconsistencyError("odd-degree self-reciprocal polynomial has a root at w = -1");
    // Roots pair as (w, 1/w); a root on the circle corresponds to a real root of Q in [-2, 2].
    const Polynomial<T> q = palindromic_reduction(p);
    if (q.degree() >= 1) {
      int on_circle = 0;
      if constexpr (std::is_same_v<T, Interval>) {
        const Precision prec = q.leading().precision();
        const Interval lo = Interval::point_si(-2, prec);
        const Interval hi = Interval::point_si(2, prec);
        on_circle = sturm_count(q, lo, hi) + (certain_sign(q.evaluate(lo)) == 0 ? 1 : 0);
      } else {
        on_circle = real_root_count(q, Rational(-2), Rational(2)) + (sgn(q.evaluate(Rational(-2))) == 0 ? 1 : 0);
      }
      if (on_circle > 0) throw InconsistencyError("polynomial has roots on the unit circle");
    }
    return static_cast<int>(n / 2);
  }
  // T p = c0 p - cn p*, degree < n.
  std::vector<T> t;
  const Polynomial<T> rev = p.reversed();
  for (long k = 0; k < n; ++k) {
    t.push_back(c0 * p[static_cast<std::size_t>(k)] - cn * rev[static_cast<std::size_t>(k)]);
  }
  const Polynomial<T> tp(std::move(t));
  if (tp.is_zero()) throw InconclusiveError("Schur-Cohn transform vanished");
  const int inner = unit_disk_count_impl(tp, depth + 1);
  return s > 0 ? inner : static_cast<int>(n) - inner;
}

}  // namespace detail

/// Roots in |w| < 1 with multiplicity. The caller guarantees no roots on |w| = 1;
/// self-reciprocal inputs are checked for circle roots explicitly.
template <class T>
int unit_disk_count(const Polynomial<T>& p) {
  if (p.is_zero()) throw UsageError("zero polynomial");
  return detail::unit_disk_count_impl(p, 0);
}

}  // namespace lpc
