#include <gtest/gtest.h>

#include "lpc/errors.hpp"
#include "lpc/quotient.hpp"
#include "oracles.hpp"

using namespace lpc;

namespace {

QuotientSpec spec(const char* a, const char* b) { return QuotientSpec::parse(a, b); }

}  // namespace

TEST(Exponents, Examples) {
  EXPECT_EQ(exponents(0), (Exponents{0, 0}));
  EXPECT_EQ(exponents(4), (Exponents{4, 2}));
  EXPECT_EQ(exponents(5), (Exponents{6, 4}));
  EXPECT_EQ(exponents(7), (Exponents{12, 9}));
}

TEST(Exponents, MatchBruteForceProductUpTo50) {
  for (std::size_t k = 0; k <= 50; ++k) {
    const auto [ea, eb] = oracle::product_exponents(k);
    const Exponents e = exponents(k);
    EXPECT_EQ(e.a, ea) << "k=" << k;
    EXPECT_EQ(e.b, eb) << "k=" << k;
  }
}

TEST(Exponents, TelescopingIdentity) {
  // log a_k - 2 log a_{k-1} + log a_{k-2} = -log q_k, on exponents.
  for (std::uint64_t k = 2; k <= 200; ++k) {
    const Exponents e0 = exponents(k - 2), e1 = exponents(k - 1), e2 = exponents(k);
    const long da = static_cast<long>(e2.a) - 2 * static_cast<long>(e1.a) + static_cast<long>(e0.a);
    const long db = static_cast<long>(e2.b) - 2 * static_cast<long>(e1.b) + static_cast<long>(e0.b);
    EXPECT_EQ(da, k % 2 == 0 ? 1 : 0) << k;
    EXPECT_EQ(db, k % 2 == 1 ? 1 : 0) << k;
  }
}

TEST(Exponents, ConstantCaseSum) {
  for (std::uint64_t k = 0; k <= 100; ++k) {
    const Exponents e = exponents(k);
    EXPECT_EQ(e.a + e.b, k == 0 ? 0 : k * (k - 1) / 2) << k;
  }
  const QuotientSpec c(Rational(3), Rational(3));
  for (std::size_t k = 0; k < 20; ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, k == 0 ? 0 : k * (k - 1) / 2);
    EXPECT_EQ(coefficient_exact(c, k), Rational(1, 1) / Rational(p)) << k;
  }
}

TEST(Coefficient, Examples) {
  EXPECT_TRUE(coefficient(spec("4", "5"), 0, 128).contains(Rational(1)));
  EXPECT_TRUE(coefficient(spec("4", "5"), 0, 128).is_point());
  EXPECT_TRUE(coefficient(spec("4", "5"), 2, 128).contains(Rational(1, 4)));
  const Interval c = coefficient(spec("3", "4"), 4, 128);
  EXPECT_TRUE(c.contains(Rational(1, 1296)));
  EXPECT_LT(c.width_double(), 1e-35);
}

TEST(Coefficient, MatchesRecurrenceOracle) {
  const mpq_class a(7, 2), b(21, 5);
  const auto ref = oracle::coefficients_by_recurrence(a, b, 40);
  const QuotientSpec s(a, b);
  for (std::size_t k = 0; k < ref.size(); ++k) {
    EXPECT_EQ(coefficient_exact(s, k), ref[k]) << k;
    EXPECT_TRUE(coefficient(s, k, 96).contains(ref[k])) << k;
  }
}

TEST(Coefficient, WidthShrinksWithPrecision) {
  const QuotientSpec s = spec("3.3", "4.7");
  for (std::size_t k : {3u, 10u, 25u}) {
    const Interval lo = coefficient(s, k, 64);
    const Interval hi = coefficient(s, k, 256);
    EXPECT_LE(hi.width_double(), lo.width_double());
    EXPECT_TRUE(lo.widened(1).contains(hi));
  }
}

TEST(Coefficient, PrecisionBelowMinimumIsConfigError) {
  EXPECT_THROW(coefficient(spec("4", "5"), 3, 31), ConfigError);
}

TEST(Roundtrip, Examples) {
  EXPECT_TRUE(quotient_roundtrip(spec("4", "5"), 6, 128).contains(Rational(4)));
  EXPECT_TRUE(quotient_roundtrip(spec("4", "5"), 7, 128).contains(Rational(5)));
  EXPECT_TRUE(quotient_roundtrip(spec("3.5", "4.2"), 9, 128).contains(Rational(21, 5)));
  EXPECT_THROW(quotient_roundtrip(spec("4", "5"), 1, 128), UsageError);
}

TEST(Spec, Validation) {
  EXPECT_THROW(spec("1", "5"), ParameterError);
  EXPECT_THROW(spec("4", "0.5"), ParameterError);
  EXPECT_NO_THROW(spec("3", "3"));
  EXPECT_EQ(spec("3.25", "4").a(), Rational(13, 4));
}

TEST(Decimal, ParseAndRender) {
  EXPECT_EQ(parse_decimal("3.5"), Rational(7, 2));
  EXPECT_EQ(parse_decimal("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_decimal("1e-6"), Rational(1, 1000000));
  EXPECT_EQ(parse_decimal("2.5E2"), Rational(250));
  EXPECT_THROW(parse_decimal("abc"), std::exception);
  EXPECT_THROW(parse_decimal(""), std::exception);
  EXPECT_EQ(to_decimal_string(Rational(7, 2)), "3.5");
  EXPECT_EQ(midpoint(Rational(1), Rational(2)), Rational(3, 2));
}
