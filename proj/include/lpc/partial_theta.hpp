#pragma once

// Partial theta function g_a(z) = sum z^k a^{-k^2}. With A = a^2 and z = -a y,
// g_a(-a y) = sum (-y)^k A^{-k(k-1)/2}, which is phi for the constant-quotient
// family (A, A); the witness interval (-a^3, -a) becomes y in [1, A].

#include <cmath>
#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/quotient.hpp"
#include "lpc/rational.hpp"
#include "lpc/realroot.hpp"
#include "lpc/search.hpp"
#include "lpc/series.hpp"
#include "lpc/verdict.hpp"

namespace lpc {

/// Coefficients a^{-k^2} for an enclosure of a > 1.
class ThetaCoefficients {
 public:
  ThetaCoefficients(Interval a, Precision prec) : a_(a.with_precision(prec)), prec_(prec) {
    require_precision(prec);
    if (!a_.certainly_positive() || mpfr_cmp_ui(a_.lower(), 1) <= 0) throw ParameterError("theta parameter must exceed 1");
    log_a_ = std::log(a_.lower_double());
    inv_ = Interval::point_si(1, prec) / a_;
  }

  const Interval& operator[](std::size_t k) {
    while (cache_.size() <= k) {
      const long i = static_cast<long>(cache_.size());
      cache_.push_back(pow(inv_, i * i));
    }
    return cache_[k];
  }

  double log_coefficient(std::size_t k) const {
    const double kk = static_cast<double>(k);
    return -kk * kk * log_a_;
  }

  Precision precision() const { return prec_; }

 private:
  Interval a_;
  Precision prec_;
  double log_a_ = 0.0;
  Interval inv_;
  std::deque<Interval> cache_;
};

/// Enclosure of g_a(z) including the truncation tail.
inline Interval eval_g(const Interval& a, const Interval& z, Precision prec) {
  ThetaCoefficients u(a, prec);
  return detail::sum_series(u, z.with_precision(std::max(prec, z.precision())), std::nullopt).value;
}

inline Interval eval_g(const Rational& a, const Interval& z, Precision prec) {
  return eval_g(Interval::from_rational(a, prec), z, prec);
}

/// Degree-n Taylor section in the scaled variable y: sum_{k<=n} (-y)^k A^{-k(k-1)/2}.
inline RationalPolynomial theta_section_scaled(std::size_t n, const Rational& a_squared) {
  const QuotientSpec spec(a_squared, a_squared);
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational v = coefficient_exact(spec, k);
    if (k % 2 == 1) v = -v;
    c.push_back(std::move(v));
  }
  return RationalPolynomial(std::move(c));
}

/// Degree-n Taylor section of g_a in z for rational a: sum_{k<=n} z^k a^{-k^2}.
inline RationalPolynomial theta_section(std::size_t n, const Rational& a) {
  std::vector<Rational> c;
  Rational inv = 1 / a;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational v = 1;
    for (std::size_t i = 0; i < k * k; ++i) v *= inv;
    c.push_back(v);
  }
  return RationalPolynomial(std::move(c));
}

namespace detail {

/// Witness test in scaled coordinates for A = a^2 (sections when `degree` is set).
inline MembershipVerdict theta_search(const Rational& a_squared, Precision prec, std::size_t grid_density,
                                      std::optional<std::size_t> degree) {
  if (a_squared <= 1) throw ParameterError("theta parameter must exceed 1");
  PhiSeries series(QuotientSpec(a_squared, a_squared), prec, degree);
  SearchOptions opt;
  opt.grid_density = grid_density;
  const SearchResult r = search_witness(series, Rational(1), a_squared, opt);
  MembershipVerdict v;
  v.status = r.status;
  v.reason = r.status == Status::Member ? Reason::Witness
             : r.status == Status::NotMember ? Reason::PositiveCover
                                             : Reason::Exhausted;
  if (r.witness) {
    // z0 = -a y with a = sqrt(A).
    v.witness = -(sqrt(Interval::from_rational(a_squared, prec)) * *r.witness);
  }
  v.witness_value = r.witness_value;
  v.floor = r.floor;
  v.precision_used = prec;
  v.cover_pieces = r.pieces;
  return v;
}

}  // namespace detail

/// Membership of g_a with A = a^2 given exactly. The witness is reported as z0 in (-a^3, -a).
inline MembershipVerdict theta_member_squared(const Rational& a_squared, Precision prec = kDefaultPrecision,
                                              std::size_t grid_density = 256) {
  return detail::theta_search(a_squared, prec, grid_density, std::nullopt);
}

inline MembershipVerdict theta_member(const Rational& a, Precision prec = kDefaultPrecision,
                                      std::size_t grid_density = 256) {
  if (a <= 1) throw ParameterError("theta parameter must exceed 1");
  return theta_member_squared(Rational(a * a), prec, grid_density);
}

struct BisectionResult {
  Rational lo;  // predicate false (not real-rooted / not a member)
  Rational hi;  // predicate true
  Interval enclosure;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

inline Interval rational_hull(const Rational& lo, const Rational& hi, Precision prec) {
  return Interval::hull(Interval::from_rational(lo, prec), Interval::from_rational(hi, prec));
}

/// Decides theta membership at A, escalating precision on Indeterminate.
inline Status theta_status(const Rational& a_squared, Precision prec, int escalations) {
  Precision p = prec;
  for (int i = 0; i <= escalations; ++i, p *= 2) {
    const Status s = theta_member_squared(a_squared, p).status;
    if (s != Status::Indeterminate) return s;
  }
  return Status::Indeterminate;
}

}  // namespace detail

/// Enclosure of q_inf by bisection on A over [3, 4]; stops early (converged = false)
/// if the predicate stays Indeterminate after two precision doublings.
inline BisectionResult compute_qinf_bisection(Precision prec, const Rational& tol) {
  require_precision(prec);
  if (tol <= 0) throw UsageError("tolerance must be positive");
  BisectionResult r;
  r.lo = 3;
  r.hi = 4;
  if (detail::theta_status(r.lo, prec, 2) != Status::NotMember || detail::theta_status(r.hi, prec, 2) != Status::Member)
    throw BracketError("q_inf bracket endpoints do not separate");
  r.converged = true;
  while (r.hi - r.lo > tol) {
    const Rational mid = midpoint(r.lo, r.hi);
    const Status s = detail::theta_status(mid, prec, 2);
    if (s == Status::Indeterminate) {
      r.converged = false;
      break;
    }
    (s == Status::Member ? r.hi : r.lo) = mid;
    ++r.iterations;
  }
  r.enclosure = detail::rational_hull(r.lo, r.hi, prec);
  return r;
}

inline Interval compute_qinf(Precision prec, double tol) {
  return compute_qinf_bisection(prec, Rational(tol)).enclosure;
}

/// q_inf to about 1e-12, computed once per process.
inline const Interval& default_qinf() {
  static const Interval value = compute_qinf_bisection(kDefaultPrecision, Rational(1, 1L << 40)).enclosure;
  return value;
}

struct SectionDecision {
  bool real_rooted = false;         // exact Sturm verdict
  Status witness_status = Status::Indeterminate;
};

/// Real-rootedness of the degree-n section of g_a at A = a^2, by exact Sturm and by
/// the witness test; a decided disagreement throws InconsistencyError.
inline SectionDecision section_decision(std::size_t n, const Rational& a_squared, Precision prec) {
  if (n < 2) throw UsageError("section degree must be at least 2");
  if (a_squared <= 1) throw ParameterError("theta parameter must exceed 1");
  SectionDecision d;
  d.real_rooted = all_real(theta_section_scaled(n, a_squared));
  d.witness_status = detail::theta_search(a_squared, prec, 256, n).status;
  if (d.witness_status != Status::Indeterminate && (d.witness_status == Status::Member) != d.real_rooted)
    throw InconsistencyError("section witness test disagrees with Sturm count");
  return d;
}

inline bool section_member_squared(std::size_t n, const Rational& a_squared, Precision prec = kDefaultPrecision) {
  return section_decision(n, a_squared, prec).real_rooted;
}

inline bool section_member(std::size_t n, const Rational& a, Precision prec = kDefaultPrecision) {
  return section_member_squared(n, Rational(a * a), prec);
}

/// Enclosure of c_n = inf{A : S_n real-rooted} by exact-Sturm bisection on [5/2, 4],
/// with the witness test cross-checked at the final bracket.
inline BisectionResult compute_cn_bisection(std::size_t n, Precision prec, const Rational& tol) {
  if (n < 2) throw UsageError("section degree must be at least 2");
  if (tol <= 0) throw UsageError("tolerance must be positive");
  require_precision(prec);
  BisectionResult r;
  r.lo = Rational(5, 2);
  r.hi = 4;
  auto real_rooted = [&](const Rational& a2) { return all_real(theta_section_scaled(n, a2)); };
  if (real_rooted(r.lo) || !real_rooted(r.hi)) throw BracketError("section bracket endpoints do not separate");
  while (r.hi - r.lo > tol) {
    const Rational mid = midpoint(r.lo, r.hi);
    (real_rooted(mid) ? r.hi : r.lo) = mid;
    ++r.iterations;
  }
  section_decision(n, r.lo, prec);
  section_decision(n, r.hi, prec);
  r.converged = true;
  r.enclosure = detail::rational_hull(r.lo, r.hi, prec);
  return r;
}

inline Interval compute_cn(std::size_t n, Precision prec, double tol) {
  return compute_cn_bisection(n, prec, Rational(tol)).enclosure;
}

}  // namespace lpc
