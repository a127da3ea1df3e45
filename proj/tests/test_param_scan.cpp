#include <gtest/gtest.h>

#include "lpc/param_scan.hpp"

using namespace lpc;

namespace {

Range range(const char* text) { return Range::parse(text); }

bool gate_blocks(const GateFlags& f) { return !f.lemmaF || f.overI || !f.qinfGate; }

}  // namespace

TEST(Range, ParseAndValues) {
  const Range r = range("3:3.2:0.05");
  EXPECT_EQ(r.min, Rational(3));
  EXPECT_EQ(r.step, Rational(1, 20));
  const auto v = r.values();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.back(), Rational(16, 5));
  EXPECT_THROW(range("3:4"), UsageError);
  EXPECT_THROW(range("3:4:0").values(), UsageError);
  EXPECT_THROW(range("4:3:0.1").values(), UsageError);
}

TEST(ScanGrid, Examples) {
  const auto hut = scan_grid(range("4:5:0.5"), range("4:6:0.5"), Rational(1, 2), 128);
  ASSERT_FALSE(hut.empty());
  for (const ScanRecord& r : hut) EXPECT_EQ(r.verdict.status, Status::Member) << r.a << " " << r.b;

  const auto low = scan_grid(range("2:2.9:0.3"), range("2:4:0.5"), ScanOptions{});
  for (const ScanRecord& r : low) {
    EXPECT_EQ(r.verdict.status, Status::NotMember);
    EXPECT_FALSE(r.verdict.flags.lemmaF);
  }

  const auto mid = scan_grid(range("3:3.2:0.1"), range("3:6:0.5"), ScanOptions{});
  for (const ScanRecord& r : mid) {
    EXPECT_EQ(r.verdict.status, Status::NotMember);
    EXPECT_FALSE(r.verdict.flags.qinfGate);
  }
}

TEST(ScanGrid, SkipsCellsWithoutAbelowB) {
  const auto recs = scan_grid(range("4:5:1"), range("3:5:1"), ScanOptions{});
  ASSERT_EQ(recs.size(), 1u);  // only (4, 5)
  EXPECT_EQ(recs[0].a, Rational(4));
  EXPECT_EQ(recs[0].b, Rational(5));
}

TEST(ScanGrid, RowMajorOrderAndThreadDeterminism) {
  ScanOptions one;
  ScanOptions four;
  four.threads = 4;
  const auto r1 = scan_grid(range("3.4:3.8:0.2"), range("3.6:5:0.35"), one);
  const auto r4 = scan_grid(range("3.4:3.8:0.2"), range("3.6:5:0.35"), four);
  EXPECT_EQ(scan_csv(r1), scan_csv(r4));
  EXPECT_EQ(scan_json(r1).dump(), scan_json(r4).dump());
  for (std::size_t i = 1; i < r1.size(); ++i)
    EXPECT_TRUE(r1[i - 1].a < r1[i].a || (r1[i - 1].a == r1[i].a && r1[i - 1].b < r1[i].b));
}

TEST(ScanGrid, GateConsistency) {
  const auto recs = scan_grid(range("3:4:0.25"), range("3.25:6:0.25"), ScanOptions{});
  for (const ScanRecord& r : recs) {
    if (r.verdict.status == Status::Member) { EXPECT_FALSE(gate_blocks(r.verdict.flags)) << r.a << " " << r.b; }
    if (gate_blocks(r.verdict.flags)) { EXPECT_EQ(r.verdict.status, Status::NotMember); }
    if (r.verdict.flags.underH) { EXPECT_EQ(r.verdict.status, Status::Member) << r.a << " " << r.b; }
  }
}

TEST(CriticalB, Regimes) {
  const BoundaryPoint h = critical_b(Rational(4));
  EXPECT_EQ(h.regime, BoundaryRegime::Hutchinson);
  EXPECT_FALSE(h.b_star.has_value());
  const BoundaryPoint n = critical_b(parse_decimal("3.1"));
  EXPECT_EQ(n.regime, BoundaryRegime::NoMember);
  EXPECT_THROW(critical_b(Rational(7, 2), 128, Rational(0)), UsageError);
}

TEST(CriticalB, Sandwich) {
  for (const char* text : {"3.5", "3.9"}) {
    const Rational a = parse_decimal(text);
    const BoundaryPoint p = critical_b(a, 128, Rational(1, 1000000));
    ASSERT_TRUE(p.b_star.has_value());
    EXPECT_TRUE(p.converged);
    EXPECT_LE(mpfr_cmp(sufficient_bound_H(a).lower(), p.b_star->lower()), 0) << text;
    EXPECT_LE(mpfr_cmp(p.b_star->upper(), necessary_bound_I(a).upper()), 0) << text;
    // Bracket invariant.
    EXPECT_EQ(classify(QuotientSpec(a, p.lo)).status, Status::Member);
    EXPECT_EQ(classify(QuotientSpec(a, p.hi)).status, Status::NotMember);
  }
}

TEST(Audit, Examples) {
  const auto hut = scan_grid(range("4:6:0.5"), range("4:6:0.5"), ScanOptions{});
  const AuditReport a = monotonicity_audit(hut);
  EXPECT_TRUE(a.violations.empty());

  // Column a = 3.5 and row b = 4.5: contiguous member runs.
  const auto col = scan_grid(range("3.5:3.5:1"), range("3.55:5:0.05"), ScanOptions{});
  bool seen_non = false;
  for (const ScanRecord& r : col) {
    if (r.verdict.status == Status::NotMember) seen_non = true;
    if (r.verdict.status == Status::Member) { EXPECT_FALSE(seen_non) << r.b; }
  }
  EXPECT_EQ(col.front().verdict.status, Status::Member);
  const auto row = scan_grid(range("3.2:4.45:0.05"), range("4.5:4.5:1"), ScanOptions{});
  bool seen_member = false;
  for (const ScanRecord& r : row) {
    if (r.verdict.status == Status::Member) seen_member = true;
    if (seen_member) { EXPECT_EQ(r.verdict.status, Status::Member) << r.a; }
  }
  std::vector<ScanRecord> all = col;
  all.insert(all.end(), row.begin(), row.end());
  EXPECT_TRUE(monotonicity_audit(all).violations.empty());
}

TEST(Audit, DetectsPlantedViolation) {
  std::vector<ScanRecord> recs;
  MembershipVerdict m, n;
  m.status = Status::Member;
  n.status = Status::NotMember;
  recs.push_back({Rational(7, 2), Rational(4), n});
  recs.push_back({Rational(7, 2), Rational(9, 2), m});
  const AuditReport a = monotonicity_audit(recs);
  ASSERT_EQ(a.violations.size(), 1u);
  EXPECT_EQ(a.violations[0].kind, "column");
}

TEST(Output, CsvColumnsAndEnclosures) {
  const auto recs = scan_grid(range("3.5:3.5:1"), range("4:5:1"), ScanOptions{});
  const std::string csv = scan_csv(recs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "a,b,status,witness,min_phi_lo,min_phi_hi,lemmaF,underH,overI,qinfGate,precision");
  const nlohmann::json j = scan_json(recs);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& r : j) {
    if (!r["witness"].is_null()) {
      EXPECT_TRUE(r["witness"].contains("lo"));
      EXPECT_TRUE(r["witness"].contains("hi"));
    }
  }
}
