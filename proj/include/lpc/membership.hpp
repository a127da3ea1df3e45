#pragma once

// Membership decision for the 2-periodic family: closed-form necessary/sufficient
// gates, then a witness search for phi(z0) <= 0 on [1, a] over a precision ladder.

#include <cstddef>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/partial_theta.hpp"
#include "lpc/quotient.hpp"
#include "lpc/search.hpp"
#include "lpc/series.hpp"
#include "lpc/verdict.hpp"

namespace lpc {

inline const std::vector<Precision>& default_ladder() {
  static const std::vector<Precision> ladder{64, 128, 256, 512};
  return ladder;
}

/// b(a - 4) + 3 >= 0, exact.
inline bool lemma_f_check(const QuotientSpec& spec) { return spec.b() * (spec.a() - 4) + 3 >= 0; }

inline void require_bound_domain(const Rational& a) {
  if (a < 3 || a >= 4) throw DomainError("bound formula requires 3 <= a < 4 (a=" + to_decimal_string(a) + ")");
}

/// 8 / (a (4 - a)).
inline Interval sufficient_bound_H(const Rational& a, Precision prec = kDefaultPrecision) {
  require_bound_domain(a);
  return Interval::from_rational(Rational(8 / (a * (4 - a))), prec);
}

/// (-a(2a - 9) + 2(a - 3) sqrt(a(a - 3))) / (a(4 - a)).
inline Interval necessary_bound_I(const Rational& a, Precision prec = kDefaultPrecision) {
  require_bound_domain(a);
  const Interval root = sqrt(Interval::from_rational(Rational(a * (a - 3)), prec));
  const Interval numerator =
      Interval::from_rational(Rational(-a * (2 * a - 9)), prec) + Interval::from_rational(Rational(2 * (a - 3)), prec) * root;
  return numerator / Interval::from_rational(Rational(a * (4 - a)), prec);
}

/// False only when a lies certainly below the q_inf enclosure.
inline bool qinf_gate(const QuotientSpec& spec, const Interval& qinf) {
  return mpfr_cmp_q(qinf.lower(), spec.a().get_mpq_t()) <= 0;
}

/// Gate flags for (a, b); bound flags are false outside 3 <= a < 4.
inline GateFlags gate_flags(const QuotientSpec& spec, const Interval& qinf) {
  GateFlags g;
  g.lemmaF = lemma_f_check(spec);
  g.qinfGate = qinf_gate(spec, qinf);
  const Rational& a = spec.a();
  const Rational& b = spec.b();
  if (a >= 3 && a < 4) {
    const Interval h = sufficient_bound_H(a);
    const Interval i = necessary_bound_I(a);
    g.underH = b >= 2 && mpfr_cmp_q(h.lower(), b.get_mpq_t()) >= 0;
    g.overI = mpfr_cmp_q(i.upper(), b.get_mpq_t()) < 0;
  }
  return g;
}

struct ClassifyOptions {
  std::vector<Precision> ladder = default_ladder();
  std::size_t grid_density = 256;
  std::size_t max_pieces = 60000;
};

/// Decides membership for 1 < a < b.
inline MembershipVerdict classify(const QuotientSpec& spec, const ClassifyOptions& opt = {}) {
  if (!(spec.a() > 1 && spec.a() < spec.b()))
    throw ParameterError("classification requires 1 < a < b (a=" + to_decimal_string(spec.a()) +
                         ", b=" + to_decimal_string(spec.b()) + ")");
  if (opt.ladder.empty()) throw ConfigError("empty precision ladder");
  for (Precision p : opt.ladder) require_precision(p);

  MembershipVerdict v;
  v.flags = gate_flags(spec, default_qinf());
  if (!v.flags.lemmaF || v.flags.overI || !v.flags.qinfGate) {
    v.status = Status::NotMember;
    v.reason = !v.flags.lemmaF ? Reason::LemmaF : v.flags.overI ? Reason::BoundI : Reason::QinfGate;
    return v;
  }

  SearchOptions so;
  so.grid_density = opt.grid_density;
  so.max_pieces = opt.max_pieces;
  for (Precision p : opt.ladder) {
    PhiSeries series(spec, p);
    SearchResult r = search_witness(series, Rational(1), spec.a(), so);
    v.precision_used = p;
    v.cover_pieces = r.pieces;
    v.floor = std::move(r.floor);
    if (r.status == Status::Indeterminate) continue;
    v.status = r.status;
    v.reason = r.status == Status::Member ? Reason::Witness : Reason::PositiveCover;
    v.witness = std::move(r.witness);
    v.witness_value = std::move(r.witness_value);
    return v;
  }
  v.status = Status::Indeterminate;
  v.reason = Reason::Exhausted;
  return v;
}

inline MembershipVerdict classify(const QuotientSpec& spec, const std::vector<Precision>& ladder,
                                  std::size_t grid_density = 256) {
  ClassifyOptions opt;
  opt.ladder = ladder;
  opt.grid_density = grid_density;
  return classify(spec, opt);
}

}  // namespace lpc
