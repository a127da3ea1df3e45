#pragma once

// Sign-chain real-rootedness certificates: radii rho_j (even j) and r_j (odd j), certified
// signs of phi along the chain, zero counts inside |x| < rho_j by winding number, and the
// scalar inequalities that make the chain argument work.

#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/interval.hpp"
#include "lpc/quotient.hpp"
#include "lpc/rational.hpp"
#include "lpc/realroot.hpp"
#include "lpc/series.hpp"

namespace lpc {

/// a^s b^{s-1} sqrt(b) for j = 2s.
inline Interval rho(const QuotientSpec& spec, std::size_t j, Precision prec = kDefaultPrecision) {
  if (j < 2 || j % 2 == 1) throw UsageError("rho needs an even index j >= 2");
  const long s = static_cast<long>(j / 2);
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  return pow(a, s) * pow(b, s - 1) * sqrt(b);
}

/// (ab)^m z0 for j = 2m + 1.
inline Interval r_radius(const QuotientSpec& spec, std::size_t j, const Interval& z0, Precision prec = kDefaultPrecision) {
  if (j < 3 || j % 2 == 0) throw UsageError("r_j needs an odd index j >= 3");
  if (mpfr_cmp_ui(z0.lower(), 1) <= 0) throw UsageError("witness must lie in (1, a]");
  if (mpfr_cmp_q(z0.lower(), spec.a().get_mpq_t()) > 0) throw UsageError("witness must lie in (1, a]");
  const long m = static_cast<long>(j / 2);
  return pow(Interval::from_rational(Rational(spec.a() * spec.b()), prec), m) * z0.with_precision(std::max(prec, z0.precision()));
}

// ---- scalar inequalities ----

/// 2 - 2 a sqrt(b) + a b.
inline Interval min_modulus_gblock(const QuotientSpec& spec, std::size_t j, Precision prec = kDefaultPrecision) {
  if (j < 2 || j % 2 == 1) throw UsageError("min-modulus block needs an even index");
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  return Interval::point_si(2, prec) - scale(a * sqrt(b), 2) + a * b;
}

/// b sqrt(b) a (2 - 2 sqrt(b) a + ab) > 2 / (1 - 1/(b sqrt(b) a^2)), certified.
inline bool dominance_inequality(const QuotientSpec& spec, Precision prec = kDefaultPrecision) {
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  const Interval bsb = b * sqrt(b);
  const Interval lhs = bsb * a * min_modulus_gblock(spec, 2, prec);
  const Interval one = Interval::point_si(1, prec);
  const Interval denom = one - one / (bsb * a * a);
  if (!denom.certainly_positive()) return false;
  const Interval rhs = Interval::point_si(2, prec) / denom;
  return rhs.certainly_less(lhs);
}

/// -2 + 2ab sqrt(b) - 2a^2b^2 + a^2b^2 sqrt(b) >= 0, certified.
inline bool nu_inequality(const QuotientSpec& spec, Precision prec = kDefaultPrecision) {
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  const Interval sb = sqrt(b);
  const Interval ab = a * b;
  const Interval ab2 = ab * ab;
  const Interval v = Interval::point_si(-2, prec) + scale(ab * sb, 2) - scale(ab2, 2) + ab2 * sb;
  return v.certainly_nonnegative();
}

/// 1 - a sqrt(b) w + ab w^2 - a sqrt(b) w^3 + w^4 (palindromic by construction).
inline IntervalPolynomial quartic_polynomial(const QuotientSpec& spec, Precision prec = kDefaultPrecision) {
  const Interval a = Interval::from_rational(spec.a(), prec);
  const Interval b = Interval::from_rational(spec.b(), prec);
  const Interval s = -(a * sqrt(b));
  const Interval one = Interval::point_si(1, prec);
  return IntervalPolynomial(std::vector<Interval>{one, s, a * b, s, one});
}

inline int quartic_unit_disk_count(const QuotientSpec& spec, Precision prec = kDefaultPrecision) {
  return unit_disk_count(quartic_polynomial(spec, prec));
}

struct GBlockMinimum {
  Rational value;            // g(3/2)
  bool global_minimum;       // g(y) - g(3/2) >= 0 on the reals
  int distinct_real_roots;   // of g - g(3/2)
};

/// g(y) = y^4 - 2y^3 + 2 at y = 3/2, with its global minimality certified exactly.
inline GBlockMinimum gblock_minimum() {
  const RationalPolynomial g = polynomial_from_integers({2, 0, 0, -2, 1});
  GBlockMinimum out;
  out.value = g.evaluate(Rational(3, 2));
  const RationalPolynomial shifted = g - RationalPolynomial(std::vector<Rational>{out.value});
  out.global_minimum = nonnegative_on_reals(shifted);
  out.distinct_real_roots = sturm_count(shifted);
  return out;
}

// ---- winding number ----

struct WindingResult {
  bool conclusive = false;
  int count = 0;
  std::size_t arcs = 0;
};

namespace detail {

struct CirclePoint {
  double t = 0.0;  // angle / (2 pi), an exact dyadic
  ComplexEnclosure value;
};

inline Interval modulus_squared_lower(const ComplexEnclosure& v) {
  return (v.re * v.re + v.im * v.im).lower_point();
}

}  // namespace detail

/// Number of zeros of phi in |x| < radius from the phase change along the circle. Each
/// arc is accepted when phi stays in zero-free disks around both endpoint values (via an
/// angular Lipschitz bound) and the endpoint values differ in phase by less than pi/2.
inline WindingResult winding_zero_count(const QuotientSpec& spec, const Interval& radius,
                                        Precision prec = kDefaultPrecision, std::size_t max_samples = 1u << 16) {
  if (!radius.certainly_positive()) throw UsageError("radius must be positive");
  PhiSeries s(spec, prec);
  const Interval r = radius.with_precision(std::max(prec, radius.precision()));
  const Interval lipschitz = s.angular_lipschitz(r);
  const Interval two_pi = scale(Interval::pi(prec), 2);
  auto at = [&](double t) {
    const Interval theta = two_pi * Interval::point(t, prec);
    return detail::CirclePoint{t, s.phi_complex(r, cos(theta), sin(theta))};
  };

  WindingResult out;
  double total = 0.0;
  const std::size_t initial = 64;
  std::vector<detail::CirclePoint> stack;
  const detail::CirclePoint start = at(0.0);
  // Process arcs left to right with an explicit stack of right endpoints.
  detail::CirclePoint left = start;
  for (std::size_t i = initial; i-- > 0;) {
    detail::CirclePoint p = i == initial - 1 ? start : at(static_cast<double>(i + 1) / initial);
    p.t = static_cast<double>(i + 1) / initial;
    stack.push_back(std::move(p));
  }
  out.arcs = initial;
  while (!stack.empty()) {
    const detail::CirclePoint& right = stack.back();
    const Interval dtheta = two_pi.upper_point() * Interval::point(right.t - left.t, prec);
    const Interval reach = lipschitz * dtheta;
    const Interval reach2 = (reach * reach).upper_point();
    // Disk radius reach/2 around each endpoint covers the half-arc next to it.
    const Interval half2 = ldexp(reach2, -2);
    const bool disks = half2.certainly_less(detail::modulus_squared_lower(left.value)) &&
                       half2.certainly_less(detail::modulus_squared_lower(right.value));
    const Interval dot = left.value.re * right.value.re + left.value.im * right.value.im;
    if (disks && dot.certainly_positive()) {
      const double a0 = std::atan2(left.value.im.mid_double(), left.value.re.mid_double());
      const double a1 = std::atan2(right.value.im.mid_double(), right.value.re.mid_double());
      double d = a1 - a0;
      while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
      while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
      total += d;
      left = right;
      stack.pop_back();
      continue;
    }
    if (out.arcs >= max_samples) return out;
    stack.push_back(at((left.t + right.t) / 2));
    ++out.arcs;
  }
  const double turns = total / (2 * std::numbers::pi);
  const double nearest = std::round(turns);
  if (std::abs(turns - nearest) > 0.1) return out;
  out.conclusive = true;
  out.count = static_cast<int>(nearest);
  return out;
}

// ---- sign chain ----

enum class RadiusKind { Rho, R };

inline const char* to_string(RadiusKind k) { return k == RadiusKind::Rho ? "rho" : "r"; }

struct ChainEntry {
  std::size_t j = 0;
  RadiusKind kind = RadiusKind::Rho;
  Interval radius;
  Interval value;  // enclosure of phi(radius)
  SignVerdict sign = SignVerdict::Indeterminate;
  bool certified = false;  // Rho: value >= 0, R: value <= 0
  Precision precision = 0;
};

struct ZeroCount {
  std::size_t j = 0;
  int count = 0;
  bool conclusive = false;
  std::size_t arcs = 0;
};

struct CertificateChecks {
  bool esta = false;
  bool nu = false;
  bool quartic = false;
  bool estg = false;
};

struct SignChainCertificate {
  QuotientSpec spec{Rational(2), Rational(3)};
  Interval z0;
  std::size_t depth = 0;
  std::vector<ChainEntry> entries;
  std::vector<ZeroCount> zero_counts;
  CertificateChecks checks;
  bool ordered = false;
  std::optional<std::size_t> first_failure;  // first index j whose sign or count was not certified
  Precision precision = 0;

  bool complete() const { return !first_failure && ordered; }
};

inline CertificateChecks proof_checks(const QuotientSpec& spec, Precision prec = kDefaultPrecision) {
  CertificateChecks c;
  c.esta = dominance_inequality(spec, prec);
  c.nu = nu_inequality(spec, prec);
  c.estg = min_modulus_gblock(spec, 2, prec).certainly_positive();
  try {
    c.quartic = quartic_unit_disk_count(spec, prec) == 2;
  } catch (const InconclusiveError&) {
    c.quartic = false;
  } catch (const InconsistencyError&) {
    c.quartic = false;
  }
  return c;
}

/// Certified signs of phi along z0 < rho_2 < r_3 < ... < rho_J. Signs that stay
/// undecided after two precision doublings make the certificate incomplete.
inline SignChainCertificate sign_chain(const QuotientSpec& spec, const Interval& z0, std::size_t depth,
                                       Precision prec = kDefaultPrecision) {
  if (depth < 4 || depth % 2 == 1) throw UsageError("certificate depth must be even and at least 4");
  require_precision(prec);
  SignChainCertificate cert;
  cert.spec = spec;
  cert.z0 = z0;
  cert.depth = depth;
  cert.precision = prec;
  for (std::size_t j = 2; j <= depth; ++j) {
    ChainEntry e;
    e.j = j;
    e.kind = j % 2 == 0 ? RadiusKind::Rho : RadiusKind::R;
    for (Precision p = prec; p <= 4 * prec; p *= 2) {
      e.radius = e.kind == RadiusKind::Rho ? rho(spec, j, p) : r_radius(spec, j, z0, p);
      PhiSeries s(spec, p);
      e.value = s.phi(e.radius).value;
      e.sign = sign_of(e.value);
      e.precision = p;
      e.certified = e.kind == RadiusKind::Rho ? e.value.certainly_nonnegative() : e.value.certainly_nonpositive();
      if (e.certified) break;
    }
    if (!e.certified && !cert.first_failure) cert.first_failure = j;
    cert.entries.push_back(std::move(e));
  }
  cert.ordered = z0.certainly_less(cert.entries.front().radius);
  for (std::size_t i = 1; i < cert.entries.size(); ++i)
    cert.ordered = cert.ordered && cert.entries[i - 1].radius.certainly_less(cert.entries[i].radius);
  cert.checks = proof_checks(spec, prec);
  return cert;
}

/// Sign chain plus winding zero counts at every rho_j.
inline SignChainCertificate build_certificate(const QuotientSpec& spec, const Interval& z0, std::size_t depth,
                                              Precision prec = kDefaultPrecision, std::size_t max_samples = 1u << 16) {
  SignChainCertificate cert = sign_chain(spec, z0, depth, prec);
  for (std::size_t j = 2; j <= depth; j += 2) {
    const WindingResult w = winding_zero_count(spec, rho(spec, j, prec), prec, max_samples);
    cert.zero_counts.push_back({j, w.count, w.conclusive, w.arcs});
    if ((!w.conclusive || w.count != static_cast<int>(j)) && (!cert.first_failure || *cert.first_failure > j))
      cert.first_failure = j;
  }
  return cert;
}

// ---- JSON ----

inline nlohmann::json enclosure_json(const Interval& x, int digits = 25) {
  return {{"dec", x.mid_decimal(digits)}, {"lo", x.lower_decimal(digits)}, {"hi", x.upper_decimal(digits)},
          {"prec", static_cast<long>(x.precision())}};
}

inline nlohmann::json certificate_json(const SignChainCertificate& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const ChainEntry& e : c.entries) {
    entries.push_back({{"j", e.j},
                       {"kind", to_string(e.kind)},
                       {"radius", enclosure_json(e.radius)},
                       {"value", enclosure_json(e.value)},
                       {"sign", to_string(e.sign)},
                       {"certified", e.certified}});
  }
  nlohmann::json counts = nlohmann::json::array();
  for (const ZeroCount& z : c.zero_counts)
    counts.push_back({{"j", z.j}, {"count", z.count}, {"conclusive", z.conclusive}, {"arcs", z.arcs}});
  nlohmann::json out = {
      {"spec", {{"a", to_decimal_string(c.spec.a())}, {"b", to_decimal_string(c.spec.b())}}},
      {"z0", enclosure_json(c.z0)},
      {"depth", c.depth},
      {"entries", entries},
      {"zero_counts", counts},
      {"checks", {{"esta", c.checks.esta}, {"nu", c.checks.nu}, {"quartic", c.checks.quartic}, {"estg", c.checks.estg}}},
      {"ordered", c.ordered},
      {"complete", c.complete()},
  };
  if (c.first_failure) out["first_failure"] = *c.first_failure;
  return out;
}

/// Canonical serialization: sorted keys, two-space indentation.
inline std::string certificate_to_string(const SignChainCertificate& c) { return certificate_json(c).dump(2) + "\n"; }

/// Structural validation of a certificate document; returns the list of problems.
inline std::vector<std::string> check_certificate_json(const nlohmann::json& doc) {
  std::vector<std::string> problems;
  auto need = [&](const nlohmann::json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(std::string("missing key '") + key + "'");
      return false;
    }
    return true;
  };
  for (const char* k : {"spec", "z0", "depth", "entries", "zero_counts", "checks"})
    if (!need(doc, k)) return problems;
  const std::size_t depth = doc["depth"].get<std::size_t>();
  const auto& entries = doc["entries"];
  if (!entries.is_array() || entries.size() + 1 != depth) {
    problems.push_back("entry count does not match depth");
    return problems;
  }
  std::optional<Rational> prev_hi;
  try {
    prev_hi = parse_decimal(doc["z0"]["hi"].get<std::string>());
  } catch (const std::exception&) {
    problems.push_back("z0 enclosure unreadable");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::size_t j = i + 2;
    if (!need(e, "j") || !need(e, "kind") || !need(e, "radius") || !need(e, "sign")) continue;
    if (e["j"].get<std::size_t>() != j) problems.push_back("entry " + std::to_string(i) + " has wrong index");
    const std::string kind = e["kind"].get<std::string>();
    const std::string sign = e["sign"].get<std::string>();
    if (kind != (j % 2 == 0 ? "rho" : "r")) problems.push_back("entry j=" + std::to_string(j) + " has wrong kind");
    const bool ok = kind == "rho" ? (sign == "StrictlyPositive" || sign == "NonNegative")
                                  : (sign == "StrictlyNegative" || sign == "NonPositive");
    if (!ok) problems.push_back("entry j=" + std::to_string(j) + " sign " + sign + " does not match kind");
    try {
      const Rational lo = parse_decimal(e["radius"]["lo"].get<std::string>());
      const Rational hi = parse_decimal(e["radius"]["hi"].get<std::string>());
      if (lo > hi) problems.push_back("entry j=" + std::to_string(j) + " has an inverted enclosure");
      if (prev_hi && !(*prev_hi < lo)) problems.push_back("radii not strictly increasing at j=" + std::to_string(j));
      prev_hi = hi;
    } catch (const std::exception&) {
      problems.push_back("entry j=" + std::to_string(j) + " radius unreadable");
    }
  }
  for (const auto& z : doc["zero_counts"]) {
    if (!need(z, "j") || !need(z, "count")) continue;
    if (z["count"].get<long>() != z["j"].get<long>())
      problems.push_back("zero count at j=" + std::to_string(z["j"].get<long>()) + " differs from j");
  }
  return problems;
}

}  // namespace lpc
