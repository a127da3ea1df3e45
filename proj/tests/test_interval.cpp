#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"

using namespace lpc;

namespace {

Interval bounds(double lo, double hi) { return Interval::from_bounds(lo, hi, 128); }

Interval expression(const Rational& x, const Rational& y, Precision p) {
  const Interval X = Interval::from_rational(x, p);
  const Interval Y = Interval::from_rational(y, p);
  return X * Y + X / Y - sqrt(abs(X)) + pow(Y, 3) - scale(X, 3);
}

}  // namespace

TEST(IntervalOps, Examples) {
  const Interval s = Interval::point_si(1) + Interval::point_si(2);
  EXPECT_TRUE(s.is_point());
  EXPECT_TRUE(s.contains(3.0));

  const Interval r = sqrt(Interval::point_si(4));
  EXPECT_TRUE(r.contains(2.0));
  // width <= 2 ulp of 2 at 128 bits
  EXPECT_LE(r.width_double(), std::ldexp(2.0, 1 - 128 + 1));

  const Interval p = bounds(1, 2) * bounds(-1, 1);
  EXPECT_EQ(p.lower_double(), -2.0);
  EXPECT_EQ(p.upper_double(), 2.0);
}

TEST(IntervalOps, Errors) {
  EXPECT_THROW(Interval::point_si(1) / bounds(-1, 1), DomainError);
  EXPECT_THROW(Interval::point_si(1) / bounds(0, 1), DomainError);
  EXPECT_THROW(sqrt(bounds(-1e-30, 1)), DomainError);
  EXPECT_THROW(require_precision(31), ConfigError);
  EXPECT_NO_THROW(require_precision(kMinPrecision));
}

TEST(IntervalOps, NegAbsPow) {
  const Interval x = bounds(-3, 2);
  const Interval n = -x;
  EXPECT_EQ(n.lower_double(), -2.0);
  EXPECT_EQ(n.upper_double(), 3.0);
  const Interval a = abs(x);
  EXPECT_EQ(a.lower_double(), 0.0);
  EXPECT_EQ(a.upper_double(), 3.0);
  const Interval sq = pow(x, 2);
  EXPECT_EQ(sq.lower_double(), 0.0);
  EXPECT_EQ(sq.upper_double(), 9.0);
  const Interval cube = pow(x, 3);
  EXPECT_EQ(cube.lower_double(), -27.0);
  EXPECT_EQ(cube.upper_double(), 8.0);
}

TEST(SignOf, Examples) {
  EXPECT_EQ(sign_of(bounds(-2, -1)), SignVerdict::StrictlyNegative);
  EXPECT_EQ(sign_of(bounds(-1e-30, 1e-30)), SignVerdict::Indeterminate);
  EXPECT_EQ(sign_of(bounds(0, 3)), SignVerdict::NonNegative);
  EXPECT_EQ(sign_of(bounds(-3, 0)), SignVerdict::NonPositive);
  EXPECT_EQ(sign_of(bounds(1, 3)), SignVerdict::StrictlyPositive);
}

TEST(IntervalProperty, ContainmentUnderPrecisionDoubling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = make_rational(num(rng), den(rng));
    Rational y = make_rational(num(rng), den(rng));
    if (y == 0) y = 1;
    for (Precision p : {32L, 64L, 128L, 256L}) {
      const Interval coarse = expression(x, y, p);
      const Interval fine = expression(x, y, 2 * p);
      EXPECT_TRUE(coarse.widened(1).contains(fine)) << "p=" << p << " trial " << trial;
      EXPECT_LE(fine.width_double(), coarse.width_double());
    }
    // Exact rational part: x*y + x/y is contained.
    const Rational exact = x * y + x / y;
    const Interval X = Interval::from_rational(x, 64), Y = Interval::from_rational(y, 64);
    EXPECT_TRUE((X * Y + X / Y).contains(exact));
  }
}

TEST(IntervalProperty, DyadicExactness) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-4096, 4096);
  std::uniform_int_distribution<int> exp(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    const Interval x = ldexp(Interval::point_si(num(rng), 128), exp(rng));
    const Interval y = ldexp(Interval::point_si(num(rng), 128), exp(rng));
    EXPECT_TRUE((x + y).is_point());
    EXPECT_TRUE((x - y).is_point());
    EXPECT_TRUE((x * y).is_point());
    EXPECT_TRUE(pow(x, 3).is_point());
    EXPECT_TRUE(abs(x).is_point());
    EXPECT_TRUE(scale(y, 12).is_point());
  }
  EXPECT_TRUE(sqrt(Interval::point(0.25)).is_point());
  EXPECT_TRUE((Interval::point(3.0) / Interval::point(0.5)).is_point());
}

TEST(IntervalProperty, TrigEnclosesDoubleValues) {
  for (double t = -7.0; t <= 7.0; t += 0.173) {
    const Interval x = Interval::point(t, 128);
    const Interval c = cos(x), s = sin(x);
    EXPECT_LE(c.lower_double(), std::cos(t) + 1e-15);
    EXPECT_GE(c.upper_double(), std::cos(t) - 1e-15);
    EXPECT_LE(s.lower_double(), std::sin(t) + 1e-15);
    EXPECT_GE(s.upper_double(), std::sin(t) - 1e-15);
    EXPECT_LT(c.width_double(), 1e-30);
  }
  const Interval pi = Interval::pi(128);
  EXPECT_TRUE(pi.contains(3.141592653589793) || std::abs(pi.mid_double() - M_PI) < 1e-15);
}

TEST(IntervalProperty, HullIntersectMinMax) {
  const Interval a = bounds(1, 3), b = bounds(2, 5);
  const Interval h = Interval::hull(a, b);
  EXPECT_EQ(h.lower_double(), 1.0);
  EXPECT_EQ(h.upper_double(), 5.0);
  const auto i = intersect(a, b);
  ASSERT_TRUE(i.has_value());
  EXPECT_EQ(i->lower_double(), 2.0);
  EXPECT_EQ(i->upper_double(), 3.0);
  EXPECT_FALSE(intersect(bounds(0, 1), bounds(2, 3)).has_value());
  EXPECT_EQ(min(a, b).upper_double(), 3.0);
  EXPECT_EQ(max(a, b).lower_double(), 2.0);
}
