#pragma once

// Multiplier sequences (k! a_k), complex-zero-decreasing sequences (f(k)), Jensen
// polynomials, and seeded polynomial corpora for checking both properties.

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/membership.hpp"
#include "lpc/quotient.hpp"
#include "lpc/rational.hpp"
#include "lpc/realroot.hpp"
#include "lpc/series.hpp"

namespace lpc {

enum class Provenance { MultiplierFromSpec, CZDSFromSpec, UserSupplied };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::MultiplierFromSpec: return "MultiplierFromSpec";
    case Provenance::CZDSFromSpec: return "CZDSFromSpec";
    case Provenance::UserSupplied: return "UserSupplied";
  }
  return "?";
}

/// Either exact values (rational specs) or enclosures. `certified` records whether the
/// generating spec was classified Member.
struct GammaSequence {
  Provenance provenance = Provenance::UserSupplied;
  std::vector<Rational> exact;
  std::vector<Interval> enclosed;
  std::optional<QuotientSpec> spec;  // for regeneration at higher precision
  bool certified = true;

  bool is_exact() const { return enclosed.empty(); }
  std::size_t size() const { return is_exact() ? exact.size() : enclosed.size(); }

  static GammaSequence from_exact(std::vector<Rational> values) {
    GammaSequence g;
    g.exact = std::move(values);
    return g;
  }
};

inline Rational factorial(std::size_t k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

/// gamma_k = k! a_k for k < n_terms, exact.
inline GammaSequence multiplier_sequence(const QuotientSpec& spec, std::size_t n_terms,
                                         std::optional<bool> member = std::nullopt) {
  GammaSequence g;
  g.provenance = Provenance::MultiplierFromSpec;
  g.spec = spec;
  for (std::size_t k = 0; k < n_terms; ++k) g.exact.push_back(Rational(factorial(k) * coefficient_exact(spec, k)));
  g.certified = member ? *member : classify(spec).member();
  return g;
}

/// gamma_k = f(k) as enclosures.
inline GammaSequence czds_sequence(const QuotientSpec& spec, std::size_t n_terms, Precision prec = kDefaultPrecision,
                                   std::optional<bool> member = std::nullopt) {
  GammaSequence g;
  g.provenance = Provenance::CZDSFromSpec;
  g.spec = spec;
  PhiSeries s(spec, prec);
  for (std::size_t k = 0; k < n_terms; ++k)
    g.enclosed.push_back(s.f(Interval::point_si(static_cast<long>(k), prec)).value);
  g.certified = member ? *member : classify(spec).member();
  return g;
}

inline Rational binomial(std::size_t n, std::size_t k) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return Rational(c);
}

/// sum_{k<=n} C(n,k) gamma_k z^k from exact values.
inline RationalPolynomial jensen_polynomial(const GammaSequence& gamma, std::size_t n) {
  if (!gamma.is_exact()) throw UsageError("exact Jensen polynomial needs exact sequence values");
  if (n >= gamma.size()) throw UsageError("Jensen degree exceeds the sequence length");
  std::vector<Rational> c;
  for (std::size_t k = 0; k <= n; ++k) c.push_back(Rational(binomial(n, k) * gamma.exact[k]));
  return RationalPolynomial(std::move(c));
}

/// Coefficient-wise product sum gamma_k p_k z^k.
inline RationalPolynomial apply_exact(const GammaSequence& gamma, const RationalPolynomial& p) {
  if (p.degree() >= static_cast<long>(gamma.size())) throw UsageError("polynomial degree exceeds the sequence length");
  std::vector<Rational> c;
  for (std::size_t k = 0; k < p.size(); ++k) c.push_back(Rational(gamma.exact[k] * p[k]));
  return RationalPolynomial(std::move(c));
}

inline IntervalPolynomial apply_enclosed(const GammaSequence& gamma, const RationalPolynomial& p) {
  if (p.degree() >= static_cast<long>(gamma.size())) throw UsageError("polynomial degree exceeds the sequence length");
  std::vector<Interval> c;
  for (std::size_t k = 0; k < p.size(); ++k)
    c.push_back(gamma.enclosed[k] * Interval::from_rational(p[k], gamma.enclosed[k].precision()));
  return IntervalPolynomial(std::move(c));
}

namespace detail {

/// Nonreal-zero count of gamma applied to p; enclosure sequences regenerated from their
/// spec at doubled precision when the interval Sturm chain is inconclusive.
inline int transformed_nonreal_count(const GammaSequence& gamma, const RationalPolynomial& p) {
  if (gamma.is_exact()) return nonreal_count(apply_exact(gamma, p));
  GammaSequence g = gamma;
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      return nonreal_count(apply_enclosed(g, p));
    } catch (const InconclusiveError&) {
      if (!g.spec || g.provenance != Provenance::CZDSFromSpec) throw;
      const Precision next = 2 * g.enclosed.front().precision();
      g = czds_sequence(*g.spec, g.size(), next, g.certified);
    }
  }
  throw InconclusiveError("enclosure Sturm count stayed inconclusive");
}

}  // namespace detail

/// Real-rootedness preserved: requires p real-rooted.
inline bool verify_ms(const GammaSequence& gamma, const RationalPolynomial& p) {
  if (!all_real(p)) throw UsageError("multiplier check needs a real-rooted input polynomial");
  return detail::transformed_nonreal_count(gamma, p) == 0;
}

/// Nonreal-zero count does not increase.
inline bool verify_czds(const GammaSequence& gamma, const RationalPolynomial& p) {
  return detail::transformed_nonreal_count(gamma, p) <= nonreal_count(p);
}

// ---- corpora ----

struct CorpusOptions {
  std::uint64_t seed = 20240601;
  std::size_t count = 100;
  std::size_t min_degree = 2;
  std::size_t max_degree = 10;
  long root_bound = 5;
};

/// Products of linear factors with integer roots in [-root_bound, root_bound].
inline std::vector<RationalPolynomial> real_rooted_corpus(const CorpusOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> degree(opt.min_degree, opt.max_degree);
  std::uniform_int_distribution<long> root(-opt.root_bound, opt.root_bound);
  std::vector<RationalPolynomial> out;
  for (std::size_t i = 0; i < opt.count; ++i) {
    std::vector<Rational> roots;
    const std::size_t d = degree(rng);
    for (std::size_t k = 0; k < d; ++k) roots.emplace_back(root(rng));
    out.push_back(from_roots(roots));
  }
  return out;
}

/// Real-rooted products times 0-2 irreducible quadratics z^2 + pz + q (p^2 < 4q), so the
/// nonreal-zero count is 0, 2 or 4.
inline std::vector<RationalPolynomial> mixed_corpus(const CorpusOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> degree(opt.min_degree, opt.max_degree);
  std::uniform_int_distribution<long> root(-opt.root_bound, opt.root_bound);
  std::uniform_int_distribution<int> quadratics(0, 2);
  std::uniform_int_distribution<long> linear(-4, 4);
  std::vector<RationalPolynomial> out;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const int nq = static_cast<int>(i % 3 == 0 ? 1 : static_cast<std::size_t>(quadratics(rng)));
    const std::size_t real_degree = std::max<std::size_t>(degree(rng), 2 * static_cast<std::size_t>(nq) + 1) -
                                    2 * static_cast<std::size_t>(nq);
    std::vector<Rational> roots;
    for (std::size_t k = 0; k < real_degree; ++k) roots.emplace_back(root(rng));
    RationalPolynomial p = from_roots(roots);
    for (int q = 0; q < nq; ++q) {
      const long b = linear(rng);
      std::uniform_int_distribution<long> constant(b * b / 4 + 1, b * b / 4 + 6);
      p = p * polynomial_from_integers({constant(rng), b, 1});
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline nlohmann::json polynomial_json(const RationalPolynomial& p) {
  nlohmann::json c = nlohmann::json::array();
  for (const Rational& x : p.coefficients()) c.push_back(x.get_str());
  return c;
}

struct CorpusReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t inconclusive = 0;
  std::vector<std::size_t> failures;
  nlohmann::json records = nlohmann::json::array();

  bool all_passed() const { return passed == trials; }
};

/// Runs verify_ms (czds = false) or verify_czds over a corpus.
inline CorpusReport run_corpus(const GammaSequence& gamma, const std::vector<RationalPolynomial>& corpus, bool czds) {
  CorpusReport r;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const RationalPolynomial& p = corpus[i];
    ++r.trials;
    std::string outcome;
    try {
      const bool ok = czds ? verify_czds(gamma, p) : verify_ms(gamma, p);
      outcome = ok ? "pass" : "fail";
      if (ok) ++r.passed;
      else r.failures.push_back(i);
    } catch (const InconclusiveError&) {
      outcome = "inconclusive";
      ++r.inconclusive;
    }
    r.records.push_back({{"index", i}, {"coefficients", polynomial_json(p)}, {"nonreal", nonreal_count(p)},
                         {"outcome", outcome}});
  }
  return r;
}

}  // namespace lpc
