#include <gtest/gtest.h>

#include "lpc/partial_theta.hpp"

using namespace lpc;

namespace {

Interval pt(const Rational& q, Precision p = 128) { return Interval::from_rational(q, p); }

}  // namespace

TEST(EvalG, Examples) {
  EXPECT_TRUE(eval_g(Rational(2), pt(0), 128).contains(Rational(1)));
  // sum_{k<=8} 2^{-k^2}; the remainder is below 2^{-80}.
  mpq_class s = 0;
  for (unsigned k = 0; k <= 8; ++k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k * k);
    s += mpq_class(1, 1) / mpq_class(d);
  }
  const Interval v = eval_g(Rational(2), pt(1), 128);
  EXPECT_LT(std::abs(v.mid_double() - s.get_d()), 1e-15);
  // The four displayed terms give 1.564453125; the rest is 2^{-16} + 2^{-25} + ...
  EXPECT_GT(v.mid_double(), 1.564453125);
  EXPECT_NEAR(v.mid_double() - 1.564453125, 1.0 / 65536 + 1.0 / 33554432, 1e-10);
}

TEST(EvalG, SectionQuotientsAreConstant) {
  const Rational a(9, 5);
  const RationalPolynomial s = theta_section(8, a);
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(s[n - 1] * s[n - 1] / (s[n - 2] * s[n]), a * a);
}

TEST(ThetaMember, Examples) {
  const MembershipVerdict m2 = theta_member(Rational(2));
  EXPECT_EQ(m2.status, Status::Member);
  ASSERT_TRUE(m2.witness.has_value());
  // witness in [-a^3, -a]
  EXPECT_GE(m2.witness->lower_double(), -8.0);
  EXPECT_LE(m2.witness->upper_double(), -2.0);
  EXPECT_EQ(theta_member(Rational(17, 10)).status, Status::NotMember);
  EXPECT_EQ(theta_member(Rational(9, 5)).status, Status::Member);
  EXPECT_THROW(theta_member(Rational(1)), ParameterError);
}

TEST(Qinf, Examples) {
  const BisectionResult fine = compute_qinf_bisection(128, Rational(1, 1000000));
  EXPECT_TRUE(fine.converged);
  EXPECT_TRUE(fine.enclosure.contains(parse_decimal("3.23363666")));
  EXPECT_LE(Rational(fine.hi - fine.lo), Rational(1, 1000000));

  const Interval coarse = compute_qinf(128, 1e-2);
  EXPECT_GE(coarse.lower_double(), 3.22);
  EXPECT_LE(coarse.upper_double(), 3.25);
  EXPECT_TRUE(coarse.contains(fine.enclosure));

  // The 8-digit constant is truncated; the tight enclosure sits within 1e-8 above it.
  const Interval& tight = default_qinf();
  EXPECT_TRUE(fine.enclosure.contains(tight));
  EXPECT_LT(tight.upper_double() - tight.lower_double(), 1e-11);
  EXPECT_GT(tight.lower_double(), 3.23363666);
  EXPECT_LT(tight.upper_double(), 3.23363667);
  EXPECT_THROW(compute_qinf(128, 0.0), UsageError);
}

TEST(Sections, Examples) {
  EXPECT_TRUE(section_member(2, Rational(2)));
  EXPECT_FALSE(section_member(2, Rational(19, 10)));
  EXPECT_TRUE(section_member_squared(3, Rational(3)));  // double root at the boundary
  EXPECT_TRUE(section_member_squared(3, Rational(3) + Rational(1, 1000000)));
  EXPECT_FALSE(section_member_squared(3, Rational(3) - Rational(1, 1000000)));
  EXPECT_THROW(section_member(1, Rational(2)), UsageError);
}

TEST(Cn, Examples) {
  const BisectionResult c2 = compute_cn_bisection(2, 128, Rational(1, 100000000));
  EXPECT_TRUE(c2.enclosure.contains(Rational(4)));
  EXPECT_LE(Rational(c2.hi - c2.lo), Rational(1, 100000000));
  const BisectionResult c3 = compute_cn_bisection(3, 128, Rational(1, 100000000));
  EXPECT_TRUE(c3.enclosure.contains(Rational(3)));
  const Interval c4 = compute_cn(4, 128, 1e-8);
  EXPECT_GT(c4.lower_double(), 3.2336);
  EXPECT_LT(c4.upper_double(), 4.0);
}

TEST(ThetaProperty, CriterionEquivalence) {
  // Witness test on the section agrees with the exact Sturm decision (disagreement throws).
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int i = 0; i <= 25; ++i) {
      const Rational a2 = Rational(5, 2) + make_rational(i, 10);
      SectionDecision d;
      ASSERT_NO_THROW(d = section_decision(n, a2, 128)) << "n=" << n << " A=" << a2;
      if (d.witness_status != Status::Indeterminate) {
        EXPECT_EQ(d.witness_status == Status::Member, d.real_rooted) << "n=" << n << " A=" << a2;
      }
    }
  }
}

TEST(ThetaProperty, ReductionIdentity) {
  for (const Rational& c : {Rational(3), Rational(7, 2), Rational(5)}) {
    const QuotientSpec spec(c, c);
    const Interval root = sqrt(pt(c));
    for (const Rational& x : {Rational(1, 2), Rational(2), Rational(3), Rational(9, 2)}) {
      const Interval lhs = eval_phi(spec, pt(x), 128);
      const Interval rhs = eval_g(root, -(root * pt(x)), 128);
      EXPECT_TRUE(intersect(lhs, rhs).has_value()) << "c=" << c << " x=" << x;
      EXPECT_LT(std::abs(lhs.mid_double() - rhs.mid_double()), 1e-25);
    }
  }
}

TEST(ThetaProperty, OrderingsAndConvergenceUpTo12) {
  // Gaps shrink fast; c_12 - q_inf is around 1e-35, so this runs at 256 bits.
  const Rational tol(1, mpz_class("1" + std::string(40, '0')));
  const BisectionResult q = compute_qinf_bisection(256, tol);
  ASSERT_TRUE(q.converged);
  std::vector<BisectionResult> c(13);
  for (std::size_t n = 2; n <= 12; ++n) c[n] = compute_cn_bisection(n, 256, tol);
  for (std::size_t n = 2; n + 2 <= 12; n += 2) EXPECT_TRUE(c[n + 2].enclosure.certainly_less(c[n].enclosure)) << n;
  for (std::size_t n = 3; n + 2 <= 11; n += 2) EXPECT_TRUE(c[n].enclosure.certainly_less(c[n + 2].enclosure)) << n;
  EXPECT_TRUE(q.enclosure.certainly_less(c[12].enclosure));
  EXPECT_TRUE(c[11].enclosure.certainly_less(q.enclosure));
  for (std::size_t n = 2; n + 2 <= 12; ++n) {
    const Rational gap_n = abs(midpoint(c[n].lo, c[n].hi) - midpoint(q.lo, q.hi));
    const Rational gap_next = abs(midpoint(c[n + 2].lo, c[n + 2].hi) - midpoint(q.lo, q.hi));
    EXPECT_LT(gap_next, gap_n) << n;
  }
}
