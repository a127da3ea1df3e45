#pragma once

// Witness search for phi(z) <= 0 on a closed interval [lo, hi]: double-precision grid,
// golden-section and high-precision Newton refinement of local minima, then either a
// certified non-positive point value or a finite cover of [lo, hi] by pieces on which
// phi is certified positive.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lpc/interval.hpp"
#include "lpc/rational.hpp"
#include "lpc/series.hpp"
#include "lpc/verdict.hpp"

namespace lpc {

struct SearchOptions {
  std::size_t grid_density = 256;
  std::size_t max_pieces = 60000;
  std::size_t refine_candidates = 3;
};

struct SearchResult {
  Status status = Status::Indeterminate;
  std::optional<Interval> witness;
  std::optional<Interval> witness_value;
  std::optional<Interval> floor;
  std::size_t pieces = 0;
  Precision precision = 0;
};

namespace detail {

inline int compare(mpfr_srcptr x, const Rational& q) { return mpfr_cmp_q(x, q.get_mpq_t()); }

inline bool point_within(const Interval& x, const Rational& lo, const Rational& hi) {
  return compare(x.lower(), lo) >= 0 && compare(x.upper(), hi) <= 0;
}

inline double golden_section(PhiSeries& s, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = s.phi_double(c);
  double fd = s.phi_double(d);
  for (int it = 0; it < 100 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = s.phi_double(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = s.phi_double(d);
    }
  }
  return (a + b) / 2.0;
}

/// Newton iteration on phi' from a double start, carried out on midpoints at the
/// working precision. Returns a point enclosure inside [lo, hi].
inline Interval newton_minimum(PhiSeries& s, double start, const Interval& lo, const Interval& hi) {
  const Precision prec = s.precision();
  Interval x = Interval::point(start, prec);
  const Interval tiny = ldexp(Interval::point_si(1, prec), -static_cast<long>(prec) + 6);
  for (int it = 0; it < 200; ++it) {
    const Interval d1 = s.phi_derivative(x, 1).value.mid();
    const Interval d2 = s.phi_derivative(x, 2).value.mid();
    if (!d2.certainly_positive()) break;
    const Interval step = (d1 / d2).mid();
    Interval next = (x - step).mid();
    if (mpfr_less_p(next.lower(), lo.upper())) next = lo.upper_point();
    if (mpfr_greater_p(next.upper(), hi.lower())) next = hi.lower_point();
    const bool done = abs(step).certainly_less(tiny * max(abs(x), Interval::point_si(1, prec)));
    x = std::move(next);
    if (done) break;
  }
  return x;
}

}  // namespace detail

/// Searches [lo, hi] for a point with phi <= 0 at the evaluator's precision.
inline SearchResult search_witness(PhiSeries& s, const Rational& lo, const Rational& hi,
                                   const SearchOptions& opt = {}) {
  const Precision prec = s.precision();
  SearchResult out;
  out.precision = prec;
  const Interval lo_i = Interval::from_rational(lo, prec);
  const Interval hi_i = Interval::from_rational(hi, prec);

  std::optional<Interval> best_value;
  auto try_point = [&](const Interval& x) -> bool {
    if (!detail::point_within(x, lo, hi)) return false;
    Interval v = s.phi(x).value;
    if (!best_value || mpfr_less_p(v.upper(), best_value->upper())) best_value = v;
    if (v.certainly_nonpositive()) {
      out.status = Status::Member;
      out.witness = x;
      out.witness_value = std::move(v);
      return true;
    }
    return false;
  };

  // Exact endpoints first (boundary-inclusive witnesses such as triple roots at hi).
  if (lo_i.is_point() && try_point(lo_i)) return out;
  if (hi_i.is_point() && try_point(hi_i)) return out;

  const std::size_t n = std::max<std::size_t>(opt.grid_density, 3);
  const double lo_d = lo.get_d();
  const double hi_d = hi.get_d();
  std::vector<double> xs(n);
  std::vector<double> fs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo_d + (hi_d - lo_d) * static_cast<double>(i) / static_cast<double>(n - 1);
    fs[i] = s.phi_double(xs[i]);
  }
  std::vector<std::size_t> minima;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i == 0 || fs[i] <= fs[i - 1];
    const bool right = i + 1 == n || fs[i] <= fs[i + 1];
    if (left && right) minima.push_back(i);
  }
  std::stable_sort(minima.begin(), minima.end(), [&](std::size_t p, std::size_t q) { return fs[p] < fs[q]; });
  if (minima.size() > opt.refine_candidates) minima.resize(opt.refine_candidates);

  for (std::size_t i : minima) {
    const double a = xs[i == 0 ? 0 : i - 1];
    const double b = xs[i + 1 == n ? n - 1 : i + 1];
    const double x_star = detail::golden_section(s, a, b);
    const Interval refined = detail::newton_minimum(s, x_star, lo_i, hi_i);
    if (try_point(refined)) return out;
    if (try_point(Interval::point(x_star, prec))) return out;
  }

  // Positive cover by depth-first bisection.
  const Interval whole = Interval::hull(lo_i, hi_i);
  const double min_width = (hi_d - lo_d) * std::ldexp(1.0, -static_cast<int>(prec / 2));
  std::optional<Interval> floor_lo;
  std::vector<Interval> stack{whole};
  while (!stack.empty()) {
    Interval piece = std::move(stack.back());
    stack.pop_back();
    ++out.pieces;
    const Interval c = piece.mid();
    const Interval naive = s.phi(piece).value;
    const Interval vc = s.phi(c).value;
    const Interval centered = vc + s.phi_derivative(piece, 1).value * (piece - c);
    const Interval e = intersect(naive, centered).value_or(centered);
    if (e.certainly_positive()) {
      if (!floor_lo || mpfr_less_p(e.lower(), floor_lo->lower())) floor_lo = e.lower_point();
      continue;
    }
    if (detail::point_within(c, lo, hi)) {
      if (!best_value || mpfr_less_p(vc.upper(), best_value->upper())) best_value = vc;
      if (vc.certainly_nonpositive()) {
        out.status = Status::Member;
        out.witness = c;
        out.witness_value = vc;
        return out;
      }
    }
    if (piece.width_double() < min_width || out.pieces >= opt.max_pieces) {
      out.status = Status::Indeterminate;
      if (best_value) out.floor = Interval::hull(e.lower_point(), best_value->upper_point());
      return out;
    }
    Interval left = Interval::hull(piece.lower_point(), c.lower_point());
    Interval right = Interval::hull(c.lower_point(), piece.upper_point());
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  out.status = Status::NotMember;
  Interval upper = best_value ? best_value->upper_point() : floor_lo->upper_point();
  if (mpfr_less_p(upper.upper(), floor_lo->lower())) upper = floor_lo->upper_point();
  out.floor = Interval::hull(*floor_lo, upper);
  return out;
}

}  // namespace lpc
