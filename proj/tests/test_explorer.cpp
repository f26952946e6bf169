#include <gtest/gtest.h>

#include <random>
#include <set>

#include "canonical_bounds/explorer.hpp"

using namespace cbounds;

namespace {

ScanConfig homogeneous(std::int64_t n, Rational beta0, std::int64_t m_max, std::int64_t d_max) {
  ScanConfig cfg;
  cfg.n = n;
  cfg.beta0 = std::move(beta0);
  cfg.m_max = m_max;
  cfg.d_max = d_max;
  return cfg;
}

std::set<std::pair<long, long>> in_region_pairs(const std::vector<RegionReport>& rows) {
  std::set<std::pair<long, long>> out;
  for (const auto& r : rows)
    if (r.in_region) out.emplace(static_cast<long>(r.m.front()), static_cast<long>(r.d));
  return out;
}

}  // namespace

TEST(ScanHomogeneous, SingleRow) {
  const auto rows = scan_homogeneous(homogeneous(10, 4, 1, 3));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(in_region_pairs(rows), (std::set<std::pair<long, long>>{{1, 1}, {1, 2}}));
  EXPECT_EQ(hyperbola_value(1, 3, 10, 4), 22);
}

TEST(ScanHomogeneous, SecondRowMatchesRoot) {
  const auto rows = scan_homogeneous(homogeneous(10, 4, 2, 10));
  std::set<long> row2;
  for (const auto& r : rows)
    if (r.in_region && r.m.front() == 2) row2.insert(static_cast<long>(r.d));
  EXPECT_EQ(row2, (std::set<long>{1, 2, 3, 4, 5}));
}

TEST(ScanHomogeneous, OrderedByMThenD) {
  const auto rows = scan_homogeneous(homogeneous(11, Rational(7, 2), 9, 13));
  ASSERT_EQ(rows.size(), 9u * 13u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].m.front(), static_cast<long>(i / 13) + 1);
    EXPECT_EQ(rows[i].d, static_cast<long>(i % 13) + 1);
  }
}

TEST(ScanConfig, RejectsDegenerateRanges) {
  auto cfg = homogeneous(10, 4, 0, 0);
  EXPECT_THROW(scan(cfg), bounds_error);
  cfg = homogeneous(10, 3, 1, 1);
  EXPECT_THROW(scan(cfg), bounds_error);
  cfg = homogeneous(10, 4, 1, 1);
  cfg.eps_n = Rational(0);
  EXPECT_THROW(scan(cfg), bounds_error);
}

TEST(OracleCheckRow, Examples) {
  EXPECT_TRUE(oracle_check_row(1, homogeneous(10, 4, 1, 50)));
  EXPECT_EQ(scan_row(1, homogeneous(10, 4, 1, 50)), (std::vector<std::int64_t>{1, 2}));
  EXPECT_TRUE(oracle_check_row(2, homogeneous(10, 4, 2, 50)));
  EXPECT_EQ(scan_row(2, homogeneous(10, 4, 2, 50)).size(), 5u);
  EXPECT_TRUE(oracle_check_row(1, homogeneous(1, 4, 1, 50)));
  EXPECT_TRUE(scan_row(1, homogeneous(1, 4, 1, 50)).empty());
}

TEST(OracleCheckRow, HoldsAcrossParameterGrid) {
  for (std::int64_t n : {10, 11, 13, 20})
    for (const Rational& beta0 : {Rational(7, 2), Rational(4), Rational(5)}) {
      const auto cfg = homogeneous(n, beta0, 60, 400);
      for (std::int64_t m = 1; m <= 60; ++m) EXPECT_TRUE(oracle_check_row(m, cfg)) << n << " " << beta0 << " " << m;
    }
}

TEST(ScanHomogeneous, RegionRowsAgreeWithOracleRows) {
  // the scan decides through the general region test, the row oracle through the hyperbola
  const auto cfg = homogeneous(13, Rational(9, 2), 25, 150);
  const auto rows = scan_homogeneous(cfg);
  for (std::int64_t m = 1; m <= cfg.m_max; ++m) {
    std::vector<std::int64_t> scanned;
    for (const auto& r : rows)
      if (r.m.front() == m && r.in_region) scanned.push_back(static_cast<std::int64_t>(r.d));
    EXPECT_EQ(scanned, scan_row(m, cfg)) << m;
  }
}

TEST(ScanDeterminism, WorkerCountDoesNotChangeOutput) {
  auto cfg = homogeneous(10, 4, 37, 91);
  cfg.eps_n = Rational(228, 721);
  cfg.workers = 1;
  const auto one = scan(cfg);
  cfg.workers = 8;
  const auto eight = scan(cfg);
  ASSERT_EQ(one.size(), eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].d, eight[i].d);
    EXPECT_EQ(one[i].m, eight[i].m);
    EXPECT_EQ(one[i].lhs, eight[i].lhs);
    EXPECT_EQ(one[i].vs_roe, eight[i].vs_roe);
  }

  ScanConfig general = cfg;
  general.mode = ScanMode::GENERAL_SORTED;
  general.n = 5;
  general.m_max = 4;
  general.d_max = 12;
  general.workers = 1;
  const auto g1 = scan(general);
  general.workers = 3;
  const auto g3 = scan(general);
  ASSERT_EQ(g1.size(), g3.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    EXPECT_EQ(g1[i].d, g3[i].d);
    EXPECT_EQ(g1[i].m, g3[i].m);
  }
}

TEST(RegionReport, RecomputesThroughBlowupPrimitives) {
  auto cfg = homogeneous(10, Rational(13, 3), 40, 120);
  cfg.eps_n = Rational(228, 721);
  const auto rows = scan(cfg);
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& r = rows[pick(rng)];
    const DivisorClass D = r.divisor_class();
    EXPECT_EQ(r.D2, self_intersection(D));
    EXPECT_EQ(r.KD, canonical_degree(D));
    EXPECT_EQ(r.pa, arithmetic_genus(D));
    EXPECT_EQ(r.M, D.multiplicity_sum());
    EXPECT_EQ(r.lhs, Rational(r.D2, r.d));
    EXPECT_EQ(r.rhs, nagata_rhs(r.d, r.M, cfg.beta0));
    EXPECT_EQ(r.in_region, nagata_region_member(D, cfg.beta0));
    const int line = (QuadSurd(Rational(r.d)) - nagata_line(r.m.front(), cfg.n)).sign();
    EXPECT_EQ(r.vs_nagata_line, line < 0 ? LinePosition::BELOW : line == 0 ? LinePosition::ON : LinePosition::ABOVE);
    ASSERT_TRUE(r.vs_roe.has_value());
    EXPECT_EQ(*r.vs_roe == RoeVerdict::EXCLUDED, roe_excluded(D, *cfg.eps_n));
  }
}

TEST(RegionReport, RoeVerdictIsDefinitional) {
  auto cfg = homogeneous(10, 4, 30, 100);
  cfg.eps_n = Rational(228, 721);
  const Rational bound = roe_bound(10, *cfg.eps_n);
  int excluded = 0;
  for (const auto& r : scan(cfg)) {
    EXPECT_EQ(*r.vs_roe == RoeVerdict::EXCLUDED, r.lhs < bound);
    excluded += *r.vs_roe == RoeVerdict::EXCLUDED;
  }
  EXPECT_GT(excluded, 0);
  cfg.eps_n.reset();
  for (const auto& r : scan(cfg)) EXPECT_FALSE(r.vs_roe.has_value());
}

TEST(ScanGeneral, SmallTenPointScan) {
  ScanConfig cfg = homogeneous(10, 4, 1, 2);
  cfg.mode = ScanMode::GENERAL_SORTED;
  const auto rows = scan(cfg);
  std::vector<std::string> found;
  for (const auto& r : rows) found.push_back(r.divisor_class().to_string());
  // (2,1^10) sits on the boundary; (2,1^9,0) and (1,1^2,0^8) are outside
  EXPECT_NE(std::find(found.begin(), found.end(), "(2, 1^10)"), found.end());
  EXPECT_EQ(std::find(found.begin(), found.end(), "(2, 1^9, 0)"), found.end());
  EXPECT_EQ(std::find(found.begin(), found.end(), "(1, 1^2, 0^8)"), found.end());
  for (const auto& r : rows) {
    EXPECT_TRUE(r.in_region);
    EXPECT_GT(r.M, 0);  // (d, 0^n) is never inside
  }
  EXPECT_EQ(Rational(-5, 2) > nagata_rhs(2, 9, 4), true);
}

TEST(ScanGeneral, MatchesExhaustiveFilter) {
  ScanConfig cfg = homogeneous(4, Rational(7, 2), 3, 9);
  cfg.mode = ScanMode::GENERAL_SORTED;
  const auto rows = scan(cfg);
  // independent enumeration over all vectors, keeping the sorted ones
  std::vector<std::pair<long, std::vector<Integer>>> expected;
  for (long d = 1; d <= 9; ++d)
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= a; ++b)
        for (long c = 0; c <= b; ++c)
          for (long e = 0; e <= c; ++e) {
            const DivisorClass D(d, {a, b, c, e});
            if (nagata_region_member(D, cfg.beta0)) expected.emplace_back(d, D.m());
          }
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(rows.size(), expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].d, expected[i].first);
    EXPECT_EQ(rows[i].m, expected[i].second);
  }
}

TEST(ScanGeneral, BudgetExceededCarriesPartialResult) {
  ScanConfig cfg = homogeneous(10, 4, 3, 20);
  cfg.mode = ScanMode::GENERAL_SORTED;
  cfg.budget = 5000;
  EXPECT_EQ(general_candidate_count(cfg), Integer(286) * 20);
  try {
    scan(cfg);
    FAIL() << "expected budget error";
  } catch (const scan_budget_error& e) {
    EXPECT_EQ(e.code(), errc::budget_exceeded);
    EXPECT_TRUE(e.partial_result());
    for (const auto& r : e.partial()) {
      EXPECT_TRUE(r.in_region);
      EXPECT_LE(r.d, 20);
    }
    EXPECT_FALSE(e.partial().empty());
  }
}
