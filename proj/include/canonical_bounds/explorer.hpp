#pragma once

/**
 * @file explorer.hpp
 * @brief Brute-force enumeration of divisor classes on Y_n against the
 * finiteness region, the Nagata line and the Roe exclusion bound.
 *
 * Scans run on disjoint index ranges (m for homogeneous classes, the leading
 * multiplicity for general ones) and are merged into one canonical order, so
 * the output does not depend on the worker count.
 *
 * The classification here is computed directly from the lattice data and is
 * independent of the closed-form hyperbola root in blowup.hpp; the tests use
 * one to check the other.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "blowup.hpp"
#include "errors.hpp"
#include "exactmath.hpp"

namespace cbounds {

enum class ScanMode { HOMOGENEOUS, GENERAL_SORTED };
enum class LinePosition { BELOW, ON, ABOVE };
enum class RoeVerdict { ALLOWED, EXCLUDED };

constexpr std::string_view to_string(LinePosition p) noexcept {
  switch (p) {
    case LinePosition::BELOW: return "BELOW";
    case LinePosition::ON: return "ON";
    case LinePosition::ABOVE: return "ABOVE";
  }
  return "?";
}

constexpr std::string_view to_string(RoeVerdict v) noexcept {
  return v == RoeVerdict::EXCLUDED ? "EXCLUDED" : "ALLOWED";
}

inline constexpr std::uint64_t default_scan_budget = 100'000'000;

struct ScanConfig {
  std::int64_t n = 10;
  Rational beta0 = 4;
  std::int64_t m_max = 1;
  std::int64_t d_max = 1;
  ScanMode mode = ScanMode::HOMOGENEOUS;
  std::optional<Rational> eps_n;
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t budget = default_scan_budget;

  void validate() const {
    detail::require(n >= 1, errc::domain, "n must be at least 1");
    detail::require(m_max >= 1, errc::domain, "m_max must be at least 1");
    detail::require(d_max >= 1, errc::domain, "d_max must be at least 1");
    detail::require(beta0 > 3, errc::domain, "beta0 must exceed 3");
    if (eps_n) detail::require(*eps_n > 0, errc::domain, "eps_n must be positive");
  }

  unsigned worker_count() const {
    if (workers > 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

struct RegionReport {
  std::int64_t n = 0;
  Integer d;
  std::vector<Integer> m;  // a single entry for homogeneous classes (d, m^n)
  bool homogeneous = true;
  Integer D2;
  Integer KD;
  Integer pa;
  Integer M;
  Rational lhs;  // D^2 / d
  Rational rhs;  // ((2 - beta0)/beta0)(1 + M/d)
  bool in_region = false;
  LinePosition vs_nagata_line = LinePosition::ON;
  std::optional<RoeVerdict> vs_roe;

  DivisorClass divisor_class() const {
    if (homogeneous) return DivisorClass::homogeneous(d, m.front(), static_cast<std::size_t>(n));
    return DivisorClass(d, m);
  }
};

/// Enumeration stopped at the candidate budget; carries what was found so far.
class scan_budget_error : public bounds_error {
 public:
  scan_budget_error(std::vector<RegionReport> partial, const std::string& what)
      : bounds_error(errc::budget_exceeded, what), partial_(std::move(partial)) {}

  const std::vector<RegionReport>& partial() const noexcept { return partial_; }
  bool partial_result() const noexcept { return true; }

 private:
  std::vector<RegionReport> partial_;
};

namespace detail {

// d against the Nagata line, generalised as d/M against 1/sqrt(n): sign of n d^2 - M^2.
inline LinePosition line_position(std::int64_t n, const Integer& d, const Integer& M) {
  const int s = (Integer(n) * d * d - M * M).sign();
  if (s < 0) return LinePosition::BELOW;
  return s == 0 ? LinePosition::ON : LinePosition::ABOVE;
}

inline RegionReport build_report(const ScanConfig& cfg, const Integer& d, std::vector<Integer> m, bool homogeneous,
                                 const Integer& M, const Integer& sum_sq) {
  RegionReport r;
  r.n = cfg.n;
  r.d = d;
  r.m = std::move(m);
  r.homogeneous = homogeneous;
  r.M = M;
  r.D2 = d * d - sum_sq;
  r.KD = -3 * d + M;
  r.pa = (r.D2 + r.KD) / 2 + 1;
  r.lhs = Rational(r.D2, d);
  r.rhs = (2 - cfg.beta0) / cfg.beta0 * (1 + Rational(M, d));
  r.in_region = r.lhs <= r.rhs;
  r.vs_nagata_line = line_position(cfg.n, d, M);
  if (cfg.eps_n) {
    const Rational roe = -1 / (Rational(cfg.n) * *cfg.eps_n);
    r.vs_roe = r.lhs < roe ? RoeVerdict::EXCLUDED : RoeVerdict::ALLOWED;
  }
  return r;
}

// Runs body(lo, hi) over [first, last] split into contiguous chunks, one per worker.
template <typename Result, typename Body>
std::vector<Result> run_chunks(std::int64_t first, std::int64_t last, unsigned workers, Body body) {
  const std::int64_t count = last - first + 1;
  if (count <= 0) return {};
  const std::int64_t chunks = std::min<std::int64_t>(workers, count);
  std::vector<std::vector<Result>> parts(static_cast<std::size_t>(chunks));
  {
    std::vector<std::jthread> threads;
    threads.reserve(parts.size());
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::int64_t lo = first + count * c / chunks;
      const std::int64_t hi = first + count * (c + 1) / chunks - 1;
      threads.emplace_back([&, c, lo, hi] { parts[static_cast<std::size_t>(c)] = body(lo, hi); });
    }
  }
  std::vector<Result> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

inline bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Every (m, d) in [1, m_max] x [1, d_max], ordered by m then d.
inline std::vector<RegionReport> scan_homogeneous(const ScanConfig& cfg) {
  cfg.validate();
  detail::require(cfg.mode == ScanMode::HOMOGENEOUS, errc::domain, "scan_homogeneous needs HOMOGENEOUS mode");
  auto rows = detail::run_chunks<RegionReport>(1, cfg.m_max, cfg.worker_count(), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<RegionReport> out;
    out.reserve(static_cast<std::size_t>((hi - lo + 1) * cfg.d_max));
    for (std::int64_t m = lo; m <= hi; ++m) {
      const Integer mm(m);
      const Integer M = cfg.n * mm;
      const Integer sum_sq = cfg.n * mm * mm;
      for (std::int64_t d = 1; d <= cfg.d_max; ++d) out.push_back(detail::build_report(cfg, Integer(d), {mm}, true, M, sum_sq));
    }
    return out;
  });
  std::stable_sort(rows.begin(), rows.end(), [](const RegionReport& a, const RegionReport& b) {
    if (a.m.front() != b.m.front()) return a.m.front() < b.m.front();
    return a.d < b.d;
  });
  return rows;
}

/// C(n + m_max, n) weakly decreasing vectors times d_max degrees.
inline Integer general_candidate_count(const ScanConfig& cfg) {
  Integer binom = 1;
  for (std::int64_t i = 1; i <= cfg.n; ++i) binom = binom * (cfg.m_max + i) / i;
  return binom * cfg.d_max;
}

/// Classes (d, m_1 >= ... >= m_n >= 0) with d <= d_max, m_i <= m_max inside
/// the finiteness region, ordered by d then lexicographically by m.
/// Throws scan_budget_error (with the partial list) past cfg.budget candidates.
inline std::vector<RegionReport> scan_general(const ScanConfig& cfg) {
  cfg.validate();
  detail::require(cfg.mode == ScanMode::GENERAL_SORTED, errc::domain, "scan_general needs GENERAL_SORTED mode");
  const Integer& p = numerator(cfg.beta0);
  const Integer& q = denominator(cfg.beta0);
  const Integer slope = 2 * q - p;
  const auto n = static_cast<std::size_t>(cfg.n);

  // Enumerates vectors with m_1 in [lo, hi]; stops after `limit` candidates.
  auto enumerate = [&](std::int64_t d, std::int64_t lo, std::int64_t hi, std::uint64_t limit, std::uint64_t& used,
                       std::vector<RegionReport>& out) {
    std::vector<Integer> m(n);
    const Integer dd(d);
    std::function<bool(std::size_t, std::int64_t, const Integer&, const Integer&)> rec =
        [&](std::size_t i, std::int64_t cap, const Integer& M, const Integer& sq) -> bool {
      if (i == n) {
        if (used >= limit) return false;
        ++used;
        if (p * (dd * dd - sq) <= slope * (dd + M)) out.push_back(detail::build_report(cfg, dd, m, false, M, sq));
        return true;
      }
      const std::int64_t top = (i == 0) ? hi : cap;
      const std::int64_t bottom = (i == 0) ? lo : 0;
      for (std::int64_t v = bottom; v <= top; ++v) {
        m[i] = v;
        if (!rec(i + 1, v, M + v, sq + Integer(v) * v)) return false;
      }
      return true;
    };
    return rec(0, hi, Integer(0), Integer(0));
  };

  const Integer candidates = general_candidate_count(cfg);
  if (candidates > cfg.budget) {
    std::vector<RegionReport> partial;
    std::uint64_t used = 0;
    for (std::int64_t d = 1; d <= cfg.d_max; ++d)
      if (!enumerate(d, 0, cfg.m_max, cfg.budget, used, partial)) break;
    throw scan_budget_error(std::move(partial), candidates.str() + " candidates exceed the budget of " +
                                                    std::to_string(cfg.budget));
  }

  auto rows = detail::run_chunks<RegionReport>(0, cfg.m_max, cfg.worker_count(), [&](std::int64_t lo, std::int64_t hi) {
    std::vector<RegionReport> out;
    std::uint64_t used = 0;
    for (std::int64_t d = 1; d <= cfg.d_max; ++d) enumerate(d, lo, hi, UINT64_MAX, used, out);
    return out;
  });
  std::stable_sort(rows.begin(), rows.end(), [](const RegionReport& a, const RegionReport& b) {
    if (a.d != b.d) return a.d < b.d;
    return detail::lex_less(a.m, b.m);
  });
  return rows;
}

inline std::vector<RegionReport> scan(const ScanConfig& cfg) {
  return cfg.mode == ScanMode::HOMOGENEOUS ? scan_homogeneous(cfg) : scan_general(cfg);
}

/// {d in [1, d_max] : (d, m^n) inside the region}, found by direct evaluation.
inline std::vector<std::int64_t> scan_row(std::int64_t m, const ScanConfig& cfg) {
  std::vector<std::int64_t> out;
  const Integer mm(m), n(cfg.n);
  for (std::int64_t d = 1; d <= cfg.d_max; ++d)
    if (hyperbola_sign(mm, Integer(d), n, cfg.beta0) <= 0) out.push_back(d);
  return out;
}

/// The scanned row equals {1, ..., floor(hyperbola root)} (capped at d_max).
inline bool oracle_check_row(std::int64_t m, const ScanConfig& cfg) {
  cfg.validate();
  detail::require(cfg.mode == ScanMode::HOMOGENEOUS, errc::domain, "oracle_check_row needs HOMOGENEOUS mode");
  const auto found = scan_row(m, cfg);
  const Integer root_floor = floor(hyperbola_d_of_m(Integer(m), Integer(cfg.n), cfg.beta0));
  const Integer top = std::min(root_floor, Integer(cfg.d_max));
  if (top < 1) return found.empty();
  if (Integer(found.size()) != top) return false;
  for (std::size_t i = 0; i < found.size(); ++i)
    if (found[i] != static_cast<std::int64_t>(i) + 1) return false;
  return true;
}

}  // namespace cbounds
