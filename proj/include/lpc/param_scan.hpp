#pragma once

// Parameter-plane scans over exact rational grids, the critical b*(a) by bisection,
// and monotonicity audits of the membership region.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/membership.hpp"
#include "lpc/rational.hpp"

namespace lpc {

struct Range {
  Rational min;
  Rational max;
  Rational step;

  /// min, min + step, ... up to and including max.
  std::vector<Rational> values() const {
    if (step <= 0) throw UsageError("range step must be positive");
    if (max < min) throw UsageError("range maximum below minimum");
    std::vector<Rational> out;
    for (Rational v = min; v <= max; v += step) out.push_back(v);
    return out;
  }

  /// Parses "min:max:step".
  static Range parse(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) throw UsageError("range must be min:max:step, got '" + text + "'");
    return {parse_decimal(text.substr(0, first)), parse_decimal(text.substr(first + 1, second - first - 1)),
            parse_decimal(text.substr(second + 1))};
  }
};

struct ScanRecord {
  Rational a;
  Rational b;
  MembershipVerdict verdict;
};

struct ScanOptions {
  ClassifyOptions classify;
  unsigned threads = 1;
};

/// Classifies every grid point with 1 < a < b, row-major by a then b. Points are
/// distributed over worker threads and written back in grid order.
inline std::vector<ScanRecord> scan_grid(const Range& a_range, const Range& b_range, const ScanOptions& opt = {}) {
  std::vector<ScanRecord> records;
  for (const Rational& a : a_range.values()) {
    if (a <= 1) continue;
    for (const Rational& b : b_range.values())
      if (a < b) records.push_back({a, b, {}});
  }
  (void)default_qinf();  // initialize the shared constant before fanning out
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++)
      records[i].verdict = classify(QuotientSpec(records[i].a, records[i].b), opt.classify);
  };
  const unsigned n = std::max(1u, opt.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return records;
}

inline std::vector<ScanRecord> scan_grid(const Range& a_range, const Range& b_range, const Rational& step,
                                         Precision prec) {
  ScanOptions opt;
  opt.classify.ladder = {prec, 2 * prec, 4 * prec};
  return scan_grid({a_range.min, a_range.max, step}, {b_range.min, b_range.max, step}, opt);
}

// ---- boundary ----

enum class BoundaryRegime { Bounded, Hutchinson, NoMember };

inline const char* to_string(BoundaryRegime r) {
  switch (r) {
    case BoundaryRegime::Bounded: return "bounded";
    case BoundaryRegime::Hutchinson: return "hutchinson";
    case BoundaryRegime::NoMember: return "no-member";
  }
  return "?";
}

struct BoundaryPoint {
  Rational a;
  BoundaryRegime regime = BoundaryRegime::Bounded;
  Rational lo;  // classify(a, lo) = Member
  Rational hi;  // classify(a, hi) = NotMember
  std::optional<Interval> b_star;
  int iterations = 0;
  bool converged = false;
};

/// Bisection for the largest member b above a; Indeterminate midpoints stop the
/// refinement and the current bracket is reported.
inline BoundaryPoint critical_b(const Rational& a, Precision prec = kDefaultPrecision, const Rational& tol = Rational(1, 100000000),
                                const ClassifyOptions& base = {}) {
  if (tol <= 0) throw UsageError("tolerance must be positive");
  BoundaryPoint p;
  p.a = a;
  if (a >= 4) {
    p.regime = BoundaryRegime::Hutchinson;
    return p;
  }
  if (mpfr_cmp_q(default_qinf().upper(), a.get_mpq_t()) > 0) {
    p.regime = BoundaryRegime::NoMember;
    return p;
  }
  ClassifyOptions opt = base;
  opt.ladder = {prec, 2 * prec, 4 * prec};
  auto status = [&](const Rational& b) { return classify(QuotientSpec(a, b), opt).status; };
  p.lo = a + tol;
  const Interval bound = necessary_bound_I(a, prec);
  p.hi = Rational(bound.upper_double()) + 1;
  if (status(p.lo) != Status::Member || status(p.hi) != Status::NotMember)
    throw BracketError("critical-b bracket endpoints do not separate at a=" + to_decimal_string(a));
  p.converged = true;
  while (p.hi - p.lo > tol) {
    const Rational mid = midpoint(p.lo, p.hi);
    const Status s = status(mid);
    if (s == Status::Indeterminate) {
      p.converged = false;
      break;
    }
    (s == Status::Member ? p.lo : p.hi) = mid;
    ++p.iterations;
  }
  p.b_star = Interval::hull(Interval::from_rational(p.lo, prec), Interval::from_rational(p.hi, prec));
  return p;
}

// ---- audit ----

struct AuditViolation {
  std::string kind;  // "column" (fixed a) or "row" (fixed b)
  Rational a;
  Rational b;        // the Member cell
  Rational between;  // the grid value strictly between that is not Member
};

struct AuditReport {
  std::size_t columns_checked = 0;
  std::size_t rows_checked = 0;
  std::size_t indeterminate_cells = 0;
  std::vector<AuditViolation> violations;
};

/// (i) fixed a: Member at b implies Member at every grid c in (a, b);
/// (ii) fixed b: Member at a implies Member at every grid d in (a, b).
inline AuditReport monotonicity_audit(const std::vector<ScanRecord>& records) {
  AuditReport report;
  std::map<Rational, std::map<Rational, Status>> by_a;
  std::map<Rational, std::map<Rational, Status>> by_b;
  for (const ScanRecord& r : records) {
    by_a[r.a][r.b] = r.verdict.status;
    by_b[r.b][r.a] = r.verdict.status;
    if (r.verdict.status == Status::Indeterminate) ++report.indeterminate_cells;
  }
  for (const auto& [a, column] : by_a) {
    ++report.columns_checked;
    for (const auto& [b, s] : column) {
      if (s != Status::Member) continue;
      for (const auto& [c, t] : column) {
        if (c >= b) break;
        if (t == Status::NotMember) report.violations.push_back({"column", a, b, c});
      }
    }
  }
  for (const auto& [b, row] : by_b) {
    ++report.rows_checked;
    for (const auto& [a, s] : row) {
      if (s != Status::Member) continue;
      for (const auto& [d, t] : row) {
        if (d <= a) continue;
        if (t == Status::NotMember) report.violations.push_back({"row", a, b, d});
      }
    }
  }
  return report;
}

// ---- output ----

inline nlohmann::json interval_json(const Interval& x, int digits = 20) {
  return {{"lo", x.lower_decimal(digits)}, {"hi", x.upper_decimal(digits)}};
}

/// Decimal bounds on min phi over the search interval: the certified floor for a
/// positive cover, only an upper bound (the witness value) for a member.
struct MinPhiBounds {
  std::optional<std::string> lo;
  std::optional<std::string> hi;
};

inline MinPhiBounds min_phi(const MembershipVerdict& v, int digits = 20) {
  MinPhiBounds m;
  if (v.status == Status::Member && v.witness_value) {
    m.hi = v.witness_value->upper_decimal(digits);
  } else if (v.floor) {
    m.lo = v.floor->lower_decimal(digits);
    m.hi = v.floor->upper_decimal(digits);
  }
  return m;
}

inline nlohmann::json flags_json(const GateFlags& f) {
  return {{"lemmaF", f.lemmaF}, {"underH", f.underH}, {"overI", f.overI}, {"qinfGate", f.qinfGate}};
}

inline nlohmann::json verdict_json(const MembershipVerdict& v) {
  nlohmann::json j = {{"status", to_string(v.status)},
                      {"reason", to_string(v.reason)},
                      {"flags", flags_json(v.flags)},
                      {"precision", static_cast<long>(v.precision_used)},
                      {"cover_pieces", v.cover_pieces}};
  j["witness"] = v.witness ? interval_json(*v.witness) : nlohmann::json(nullptr);
  j["witness_value"] = v.witness_value ? interval_json(*v.witness_value) : nlohmann::json(nullptr);
  const MinPhiBounds m = min_phi(v);
  j["min_phi"] = {{"lo", m.lo ? nlohmann::json(*m.lo) : nlohmann::json(nullptr)},
                  {"hi", m.hi ? nlohmann::json(*m.hi) : nlohmann::json(nullptr)}};
  return j;
}

inline nlohmann::json scan_json(const std::vector<ScanRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScanRecord& r : records) {
    nlohmann::json j = verdict_json(r.verdict);
    j["a"] = to_decimal_string(r.a);
    j["b"] = to_decimal_string(r.b);
    out.push_back(std::move(j));
  }
  return out;
}

inline std::string scan_csv(const std::vector<ScanRecord>& records) {
  std::ostringstream os;
  os << "a,b,status,witness,min_phi_lo,min_phi_hi,lemmaF,underH,overI,qinfGate,precision\n";
  for (const ScanRecord& r : records) {
    const MembershipVerdict& v = r.verdict;
    const MinPhiBounds m = min_phi(v);
    os << to_decimal_string(r.a) << ',' << to_decimal_string(r.b) << ',' << to_string(v.status) << ','
       << (v.witness ? v.witness->mid_decimal(20) : "") << ',' << m.lo.value_or("") << ',' << m.hi.value_or("") << ',' << v.flags.lemmaF << ',' << v.flags.underH << ','
       << v.flags.overI << ',' << v.flags.qinfGate << ',' << v.precision_used << '\n';
  }
  return os.str();
}

}  // namespace lpc
