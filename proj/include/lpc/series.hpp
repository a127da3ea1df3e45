#pragma once

// Certified evaluation of positive-coefficient power series sum u_k y^k whose
// consecutive ratio u_{k+1}/u_k is non-increasing in k. Once |y| u_{N+1}/u_N <= 1/2
// the tail beyond N is dominated geometrically by 2 |u_{N+1} y^{N+1}|; when y <= 0
// the tail alternates with decreasing terms and is bracketed by 0 and the first
// omitted term.

#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/quotient.hpp"

namespace lpc {

struct TailBound {
  std::size_t cutoff = 0;  // last summed index N
  Interval bound;          // enclosure of |sum_{k>N} term_k|
};

struct SeriesValue {
  Interval value;
  TailBound tail;
};

struct ComplexEnclosure {
  Interval re;
  Interval im;
  TailBound tail;

  bool excludes_zero() const { return !re.contains_zero() || !im.contains_zero(); }
};

namespace detail {

inline constexpr std::size_t kMaxTerms = 200000;

/// Coefficients of the order-m derivative, u_j = c_{j+m} (j+m)!/j!.
template <class Source>
class DerivedSource {
 public:
  DerivedSource(Source& base, unsigned order) : base_(base), order_(order) {}

  const Interval& operator[](std::size_t j) {
    while (cache_.size() <= j) {
      const std::size_t idx = cache_.size();
      Interval c = base_[idx + order_];
      long factor = 1;
      for (unsigned i = 1; i <= order_; ++i) factor *= static_cast<long>(idx + i);
      cache_.push_back(scale(c, factor));
    }
    return cache_[j];
  }

  double log_coefficient(std::size_t j) const {
    double extra = 0.0;
    for (unsigned i = 1; i <= order_; ++i) extra += std::log(static_cast<double>(j + i));
    return base_.log_coefficient(j + order_) + extra;
  }

  Precision precision() const { return base_.precision(); }

 private:
  Source& base_;
  unsigned order_;
  std::deque<Interval> cache_;
};

/// Smallest N at which the certified ratio bound holds and (unless `forced` is
/// given) the first omitted term is negligible at the working precision.
template <class Source>
std::size_t choose_cutoff(Source& u, const Interval& abs_y, std::optional<std::size_t> forced) {
  const Precision prec = u.precision();
  const double y_up = abs_y.upper_double();
  if (y_up == 0.0) return forced.value_or(0);
  const double log_y = std::log(y_up);
  const double log_half = std::log(0.5);
  const double negligible = (static_cast<double>(prec) + 8.0) * std::log(2.0);
  const Interval y_bound = abs_y.upper_point();
  const Interval half = Interval::from_rational(Rational(1, 2), prec);

  double max_log_term = 0.0;
  std::size_t n = 0;
  for (;; ++n) {
    if (n > kMaxTerms) throw InconclusiveError("series cutoff exceeds the term budget");
    const double log_term = u.log_coefficient(n) + static_cast<double>(n) * log_y;
    max_log_term = std::max(max_log_term, log_term);
    const double log_next = u.log_coefficient(n + 1) + static_cast<double>(n + 1) * log_y;
    const bool ratio_ok = log_next - log_term <= log_half - 1e-12;
    if (!ratio_ok) continue;
    if (forced && n < *forced) continue;
    if (!forced && log_next > max_log_term - negligible) continue;
    // Certify the ratio condition in interval arithmetic.
    const Interval ratio = (u[n + 1] / u[n]) * y_bound;
    if (!mpfr_lessequal_p(ratio.upper(), half.lower())) continue;
    return n;
  }
}

/// Sum of u_k y^k. `last` makes the series a polynomial of that degree (no tail).
template <class Source>
SeriesValue sum_series(Source& u, const Interval& y, std::optional<std::size_t> last,
                       std::optional<std::size_t> forced_cutoff = std::nullopt) {
  const Precision prec = std::max(u.precision(), y.precision());
  const Interval abs_y = abs(y);
  std::size_t n = 0;
  if (last) {
    n = *last;
  } else {
    n = choose_cutoff(u, abs_y, forced_cutoff);
  }
  Interval acc = u[n].with_precision(prec);
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * y + u[k];
  }
  TailBound tail{n, Interval(prec)};
  if (last || abs_y.upper_double() == 0.0) {
    return {std::move(acc), std::move(tail)};
  }
  const Interval first_omitted = u[n + 1] * pow(abs_y, static_cast<long>(n + 1));
  Interval tail_range(prec);
  if (y.certainly_nonnegative()) {
    tail_range = Interval::hull(Interval(prec), scale(first_omitted.upper_point(), 2));
    tail.bound = tail_range;
  } else if (y.certainly_nonpositive()) {
    // Alternating, decreasing from N+1 on: the tail has the sign of (-1)^{N+1}
    // and modulus at most the first omitted term.
    const Interval t = first_omitted.upper_point();
    tail_range = (n + 1) % 2 == 0 ? Interval::hull(Interval(prec), t) : Interval::hull(Interval(prec), -t);
    tail.bound = Interval::hull(Interval(prec), t);
  } else {
    const Interval t = scale(first_omitted.upper_point(), 2);
    tail_range = Interval::hull(-t, t);
    tail.bound = Interval::hull(Interval(prec), t);
  }
  return {acc + tail_range, std::move(tail)};
}

/// Rectangular enclosure of sum s^k u_k R^k e^{ik theta} over a radius interval R and
/// an angle interval theta, with s = -1 when `alternating`.
template <class Source>
ComplexEnclosure sum_series_polar(Source& u, const Interval& radius, const Interval& theta, bool alternating,
                                  std::optional<std::size_t> last) {
  const Precision prec = std::max(u.precision(), radius.precision());
  const Interval abs_r = abs(radius);
  const std::size_t n = last ? *last : choose_cutoff(u, abs_r, std::nullopt);
  Interval re(prec);
  Interval im(prec);
  Interval power = Interval::point_si(1, prec);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) power = power * abs_r;
    const Interval magnitude = u[k] * power;
    const Interval angle = scale(theta, static_cast<long>(k));
    Interval c = magnitude * cos(angle);
    Interval s = magnitude * sin(angle);
    if (alternating && k % 2 == 1) {
      c = -c;
      s = -s;
    }
    re += c;
    im += s;
  }
  TailBound tail{n, Interval(prec)};
  if (!last && abs_r.upper_double() > 0.0) {
    const Interval t = scale((u[n + 1] * pow(abs_r, static_cast<long>(n + 1))).upper_point(), 2);
    const Interval range = Interval::hull(-t, t);
    re += range;
    im += range;
    tail.bound = Interval::hull(Interval(prec), t);
  }
  return {std::move(re), std::move(im), std::move(tail)};
}

}  // namespace detail

/// Evaluator for phi(x) = f(-x) and f(x) of one spec at one precision. Optionally
/// truncated to a polynomial of degree `last_index` (Taylor sections).
class PhiSeries {
 public:
  PhiSeries(const QuotientSpec& spec, Precision prec, std::optional<std::size_t> last_index = std::nullopt)
      : coeffs_(spec, prec), d1_(coeffs_, 1), d2_(coeffs_, 2), last_(last_index) {}

  PhiSeries(const PhiSeries&) = delete;
  PhiSeries& operator=(const PhiSeries&) = delete;

  const QuotientSpec& spec() const { return coeffs_.spec(); }
  Precision precision() const { return coeffs_.precision(); }
  std::optional<std::size_t> last_index() const { return last_; }

  const Interval& coefficient(std::size_t k) { return coeffs_[k]; }

  /// phi(x) = sum (-1)^k a_k x^k.
  SeriesValue phi(const Interval& x, std::optional<std::size_t> cutoff = std::nullopt) {
    return detail::sum_series(coeffs_, -x, last_, cutoff);
  }

  /// f(x) = sum a_k x^k.
  SeriesValue f(const Interval& x, std::optional<std::size_t> cutoff = std::nullopt) {
    return detail::sum_series(coeffs_, x, last_, cutoff);
  }

  /// phi^{(order)}(x) for order 1 or 2: (-1)^order sum_j u_j (-x)^j.
  SeriesValue phi_derivative(const Interval& x, unsigned order = 1,
                             std::optional<std::size_t> cutoff = std::nullopt) {
    if (order == 0) return phi(x, cutoff);
    if (order > 2) throw UsageError("derivative order above 2 is not supported");
    std::optional<std::size_t> last;
    if (last_) {
      if (*last_ < order) return {Interval(precision()), TailBound{0, Interval(precision())}};
      last = *last_ - order;
    }
    SeriesValue v = order == 1 ? detail::sum_series(d1_, -x, last, cutoff) : detail::sum_series(d2_, -x, last, cutoff);
    if (order % 2 == 1) v.value = -v.value;
    return v;
  }

  /// Rectangular enclosure of phi(R e^{i theta}) over radius and angle intervals.
  ComplexEnclosure phi_polar(const Interval& radius, const Interval& theta) {
    return detail::sum_series_polar(coeffs_, radius, theta, true, last_);
  }

  /// phi at radius * (c + i s) for enclosures c, s of a cosine/sine pair (complex Horner).
  ComplexEnclosure phi_complex(const Interval& radius, const Interval& c, const Interval& s) {
    const Interval abs_r = abs(radius);
    const std::size_t n = last_ ? *last_ : detail::choose_cutoff(coeffs_, abs_r, std::nullopt);
    const Interval wr = -(radius * c);
    const Interval wi = -(radius * s);
    const Precision prec = std::max(precision(), radius.precision());
    Interval ar = coeffs_[n].with_precision(prec);
    Interval ai(prec);
    for (std::size_t k = n; k-- > 0;) {
      Interval nr = ar * wr - ai * wi + coeffs_[k];
      Interval ni = ar * wi + ai * wr;
      ar = std::move(nr);
      ai = std::move(ni);
    }
    TailBound tail{n, Interval(prec)};
    if (!last_) {
      const Interval t = scale((coeffs_[n + 1] * pow(abs_r, static_cast<long>(n + 1))).upper_point(), 2);
      const Interval range = Interval::hull(-t, t);
      ar += range;
      ai += range;
      tail.bound = Interval::hull(Interval(prec), t);
    }
    return {std::move(ar), std::move(ai), std::move(tail)};
  }

  /// Upper bound of sum k a_k R^k, a Lipschitz constant of theta -> phi(R e^{i theta}).
  Interval angular_lipschitz(const Interval& radius) {
    const Interval abs_r = abs(radius);
    std::optional<std::size_t> last;
    if (last_) {
      if (*last_ == 0) return Interval(precision());
      last = *last_ - 1;
    }
    const SeriesValue v = detail::sum_series(d1_, abs_r, last);
    return (v.value * abs_r).upper_point();
  }

  /// Fast non-rigorous phi in double precision (search heuristics only).
  double phi_double(double x) { return horner_double(x, 0); }
  double phi_derivative_double(double x, unsigned order) { return horner_double(x, order); }

 private:
  double horner_double(double x, unsigned order) {
    const double ax = std::abs(x);
    const double log_x = ax > 0 ? std::log(ax) : -std::numeric_limits<double>::infinity();
    const std::size_t limit = last_ ? *last_ : detail::kMaxTerms;
    std::size_t n = std::min<std::size_t>(order + 2, limit);
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= n; ++k)
      max_log = std::max(max_log, coeffs_.log_coefficient(k) + static_cast<double>(k) * log_x);
    while (ax > 0.0 && n < limit) {
      const double l = coeffs_.log_coefficient(n + 1) + static_cast<double>(n + 1) * log_x;
      if (l < max_log - 50.0) break;
      max_log = std::max(max_log, l);
      ++n;
    }
    while (double_coeffs_.size() <= n) {
      double_coeffs_.push_back(std::exp(coeffs_.log_coefficient(double_coeffs_.size())));
    }
    double acc = 0.0;
    for (std::size_t k = n + 1; k-- > order;) {
      double c = double_coeffs_[k];
      for (unsigned i = 0; i < order; ++i) c *= static_cast<double>(k - i);
      c = k % 2 == 0 ? c : -c;
      acc = acc * x + c;
    }
    return acc;
  }

  CoefficientStream coeffs_;
  detail::DerivedSource<CoefficientStream> d1_;
  detail::DerivedSource<CoefficientStream> d2_;
  std::optional<std::size_t> last_;
  std::vector<double> double_coeffs_;
};

inline SeriesValue eval_phi_series(const QuotientSpec& spec, const Interval& x, Precision prec,
                                   std::optional<std::size_t> cutoff = std::nullopt) {
  PhiSeries s(spec, prec);
  return s.phi(x.with_precision(std::max(prec, x.precision())), cutoff);
}

/// Enclosure of phi(x) = f(-x), truncation tail included.
inline Interval eval_phi(const QuotientSpec& spec, const Interval& x, Precision prec) {
  return eval_phi_series(spec, x, prec).value;
}

inline Interval eval_f(const QuotientSpec& spec, const Interval& x, Precision prec) {
  PhiSeries s(spec, prec);
  return s.f(x.with_precision(std::max(prec, x.precision()))).value;
}

inline Interval eval_phi_prime(const QuotientSpec& spec, const Interval& x, Precision prec) {
  PhiSeries s(spec, prec);
  return s.phi_derivative(x.with_precision(std::max(prec, x.precision())), 1).value;
}

/// Rectangular enclosure (re, im) of phi(radius e^{i theta}).
inline std::pair<Interval, Interval> eval_phi_complex(const QuotientSpec& spec, const Interval& radius, double theta,
                                                      Precision prec) {
  if (!radius.certainly_positive()) throw UsageError("radius must be positive");
  PhiSeries s(spec, prec);
  ComplexEnclosure e = s.phi_polar(radius.with_precision(std::max(prec, radius.precision())),
                                   Interval::point(theta, std::max<Precision>(prec, 64)));
  return {std::move(e.re), std::move(e.im)};
}

}  // namespace lpc
