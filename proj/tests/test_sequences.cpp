#include <gtest/gtest.h>

#include <set>

#include "lpc/sequences.hpp"

using namespace lpc;

namespace {

const QuotientSpec k45(Rational(4), Rational(5));

RationalPolynomial ints(std::vector<long> c) { return polynomial_from_integers(c); }

GammaSequence ones(std::size_t n) { return GammaSequence::from_exact(std::vector<Rational>(n, Rational(1))); }

}  // namespace

TEST(MultiplierSequence, Values) {
  const GammaSequence g = multiplier_sequence(k45, 6, true);
  EXPECT_EQ(g.provenance, Provenance::MultiplierFromSpec);
  ASSERT_EQ(g.size(), 6u);
  // k! a_k: 1, 1, 2/4, 6/80, 24/6400
  EXPECT_EQ(g.exact[0], Rational(1));
  EXPECT_EQ(g.exact[1], Rational(1));
  EXPECT_EQ(g.exact[2], Rational(1, 2));
  EXPECT_EQ(g.exact[3], Rational(3, 40));
  EXPECT_EQ(g.exact[4], Rational(3, 800));
  for (const Rational& x : g.exact) EXPECT_GT(x, 0);
  EXPECT_TRUE(multiplier_sequence(k45, 3).certified);
}

TEST(Jensen, Examples) {
  const GammaSequence one = GammaSequence::from_exact({Rational(1), Rational(1)});
  const RationalPolynomial p1 = jensen_polynomial(one, 1);
  EXPECT_EQ(p1.degree(), 1);
  EXPECT_EQ(real_root_count(p1), 1);

  const GammaSequence g = multiplier_sequence(k45, 16, true);
  const RationalPolynomial p2 = jensen_polynomial(g, 2);
  EXPECT_EQ(p2[0], Rational(1));
  EXPECT_EQ(p2[1], Rational(2));
  EXPECT_EQ(p2[2], Rational(1, 2));
  EXPECT_EQ(p2[1] * p2[1] - 4 * p2[0] * p2[2], Rational(2));
  EXPECT_EQ(real_root_count(p2), 2);

  const RationalPolynomial p6 = jensen_polynomial(g, 6);
  EXPECT_TRUE(all_real(p6));
  EXPECT_EQ(real_root_signs(p6).negative, 6);
  EXPECT_THROW(jensen_polynomial(g, 16), UsageError);
}

TEST(Jensen, AllDegreesUpTo15OneSigned) {
  const GammaSequence g = multiplier_sequence(k45, 16, true);
  for (std::size_t n = 1; n <= 15; ++n) {
    const RationalPolynomial p = jensen_polynomial(g, n);
    EXPECT_TRUE(all_real(p)) << n;
    const RootSigns s = real_root_signs(p);
    EXPECT_EQ(s.negative, static_cast<int>(n)) << n;
  }
}

TEST(VerifyMs, Examples) {
  const RationalPolynomial p = from_roots({Rational(-1), Rational(2), Rational(3)});
  EXPECT_TRUE(verify_ms(ones(4), p));
  const GammaSequence g = multiplier_sequence(k45, 16, true);
  EXPECT_TRUE(verify_ms(g, ints({1, 8, 28, 56, 70, 56, 28, 8, 1})));
  EXPECT_THROW(verify_ms(g, ints({1, 0, 1})), UsageError);
}

TEST(VerifyMs, SeededCorpus) {
  const GammaSequence g = multiplier_sequence(k45, 11, true);
  const auto corpus = real_rooted_corpus();
  ASSERT_EQ(corpus.size(), 100u);
  const CorpusReport r = run_corpus(g, corpus, false);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.inconclusive, 0u);
}

TEST(VerifyCzds, Examples) {
  const GammaSequence cz = czds_sequence(k45, 11, 128, true);
  EXPECT_EQ(cz.provenance, Provenance::CZDSFromSpec);
  const RationalPolynomial real = from_roots({Rational(-2), Rational(1), Rational(5)});
  EXPECT_TRUE(verify_czds(cz, real));
  const RationalPolynomial mixed = ints({1, 0, 1}) * ints({1, 2, 1});
  EXPECT_EQ(nonreal_count(mixed), 2);
  EXPECT_TRUE(verify_czds(cz, mixed));

  std::vector<Rational> inv;
  for (std::size_t k = 0; k < 3; ++k) inv.push_back(1 / factorial(k));
  const GammaSequence fact = GammaSequence::from_exact(inv);
  const RationalPolynomial t = apply_exact(fact, ints({1, 0, 1}));
  EXPECT_EQ(t[2], Rational(1, 2));
  EXPECT_EQ(nonreal_count(t), 2);
  EXPECT_TRUE(verify_czds(fact, ints({1, 0, 1})));
}

TEST(VerifyCzds, MixedCorpus) {
  const GammaSequence cz = czds_sequence(k45, 11, 128, true);
  const auto corpus = mixed_corpus();
  std::set<int> counts;
  for (const auto& p : corpus) counts.insert(nonreal_count(p));
  EXPECT_TRUE(counts.count(0) && counts.count(2) && counts.count(4));
  const CorpusReport r = run_corpus(cz, corpus, true);
  EXPECT_TRUE(r.all_passed()) << r.records.dump();
  EXPECT_EQ(r.inconclusive, 0u);
}

TEST(VerifyCzds, ThetaSequence) {
  // (a^{-k^2}) for a = 3/2
  std::vector<Rational> g;
  for (std::size_t k = 0; k < 11; ++k) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, k * k);
    mpz_ui_pow_ui(den.get_mpz_t(), 3, k * k);
    g.push_back(Rational(num, den));
    g.back().canonicalize();
  }
  const CorpusReport r = run_corpus(GammaSequence::from_exact(g), mixed_corpus(), true);
  EXPECT_TRUE(r.all_passed());
}

TEST(Corpus, DeterministicAndExportable) {
  CorpusOptions o;
  o.count = 20;
  const auto a = real_rooted_corpus(o);
  const auto b = real_rooted_corpus(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].coefficients(), b[i].coefficients());
    EXPECT_GE(a[i].degree(), 2);
    EXPECT_LE(a[i].degree(), 10);
    EXPECT_TRUE(all_real(a[i]));
  }
  o.seed = 1;
  EXPECT_NE(real_rooted_corpus(o)[0].coefficients(), a[0].coefficients());
  const nlohmann::json j = polynomial_json(ints({1, -2, 3}));
  EXPECT_EQ(j.dump(), R"(["1","-2","3"])");
  const CorpusReport r = run_corpus(ones(11), a, false);
  EXPECT_EQ(r.records.size(), 20u);
  EXPECT_EQ(r.records[0]["outcome"], "pass");
}
