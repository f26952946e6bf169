#pragma once

/**
 * @file blowup.hpp
 * @brief Intersection theory on the plane blown up at n points, and the
 * region geometry of negative-curve finiteness there.
 *
 * Pic(Y_n) has basis L, E_1..E_n; a class is written (d, m_1, ..., m_n)
 * and pairs as d d' - sum m_i m'_i. The anticanonical class is (3, 1^n).
 *
 * A class D with d > 0 lies in the finiteness region for a threshold
 * beta0 > 3 when
 *
 *     D^2 / d <= ((2 - beta0) / beta0) (1 + M / d),    M = sum m_i.
 *
 * For homogeneous classes (d, m^n) this is the inside of the hyperbola
 *
 *     beta0 d^2 + (beta0 - 2) d - n beta0 m^2 + (beta0 - 2) n m = 0,
 *
 * whose upper branch is asymptotic to d = sqrt(n) m + c with
 * c = -(beta0 - 2)(1 + sqrt(n)) / (2 beta0).
 */

#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvedata.hpp"
#include "errors.hpp"
#include "exactmath.hpp"

namespace cbounds {

class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(Integer d, std::vector<Integer> m) : d_(std::move(d)), m_(std::move(m)) {}

  /// (d, m^n).
  static DivisorClass homogeneous(const Integer& d, const Integer& m, std::size_t n) {
    return DivisorClass(d, std::vector<Integer>(n, m));
  }
  static DivisorClass line(std::size_t n) { return homogeneous(1, 0, n); }
  static DivisorClass anticanonical(std::size_t n) { return homogeneous(3, 1, n); }

  /// E_i as a class: (0, 0, .., -1, .., 0), i counted from 0.
  static DivisorClass exceptional(std::size_t n, std::size_t i) {
    detail::require(i < n, errc::domain, "exceptional index out of range");
    std::vector<Integer> m(n, Integer(0));
    m[i] = -1;
    return DivisorClass(0, std::move(m));
  }

  /// Parses "d,m1,...,mn" with optional exponent shorthand "2,1^10" or "5,2^3,1^7".
  static DivisorClass parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    static const std::regex item(R"(^\s*([+-]?\d+)(?:\^(\d+))?\s*$)");
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.empty()) detail::fail(errc::domain, "empty divisor class");
    std::smatch match;
    if (!std::regex_match(parts.front(), match, item) || match[2].matched)
      detail::fail(errc::domain, "bad degree in class '" + s + "'");
    DivisorClass out;
    out.d_ = Integer(match[1].str());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (!std::regex_match(parts[i], match, item)) detail::fail(errc::domain, "bad multiplicity '" + parts[i] + "'");
      const Integer value(match[1].str());
      const std::size_t reps = match[2].matched ? std::stoul(match[2].str()) : 1;
      out.m_.insert(out.m_.end(), reps, value);
    }
    return out;
  }

  std::size_t n() const noexcept { return m_.size(); }
  const Integer& d() const noexcept { return d_; }
  const std::vector<Integer>& m() const noexcept { return m_; }

  Integer multiplicity_sum() const {
    Integer M = 0;
    for (const auto& mi : m_) M += mi;
    return M;
  }

  /// "(d, m1, ..., mn)" with runs folded as value^count.
  std::string to_string() const {
    std::string out = "(" + d_.str();
    for (std::size_t i = 0; i < m_.size();) {
      std::size_t j = i;
      while (j < m_.size() && m_[j] == m_[i]) ++j;
      out += ", " + m_[i].str();
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out + ")";
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  Integer d_{0};
  std::vector<Integer> m_;
};

inline Integer pair(const DivisorClass& x, const DivisorClass& y) {
  if (x.n() != y.n()) detail::fail(errc::domain, "classes live on different blow-ups");
  Integer out = x.d() * y.d();
  for (std::size_t i = 0; i < x.n(); ++i) out -= x.m()[i] * y.m()[i];
  return out;
}

inline Integer self_intersection(const DivisorClass& D) { return pair(D, D); }

/// K.D = -3d + sum m_i.
inline Integer canonical_degree(const DivisorClass& D) { return -3 * D.d() + D.multiplicity_sum(); }

inline Integer arithmetic_genus(const DivisorClass& D) {
  return pa_from_adjunction(self_intersection(D), canonical_degree(D));
}

namespace detail {
inline void require_threshold(const Rational& beta0) {
  require(beta0 > 3, errc::domain, "beta0 must exceed 3");
}
}  // namespace detail

/// ((2 - beta0)/beta0)(1 + M/d), the right-hand side of the region test.
inline Rational nagata_rhs(const Integer& d, const Integer& M, const Rational& beta0) {
  detail::require(d > 0, errc::domain, "degree must be positive");
  return (2 - beta0) / beta0 * (1 + Rational(M, d));
}

/// Boundary counts as inside.
inline bool nagata_region_member(const DivisorClass& D, const Rational& beta0) {
  detail::require(D.d() > 0, errc::domain, "degree must be positive");
  detail::require_threshold(beta0);
  // D^2/d <= (2-b)/b (1 + M/d)  <=>  p D^2 <= (2q - p)(d + M) for b = p/q
  const Integer& p = numerator(beta0);
  const Integer& q = denominator(beta0);
  return p * self_intersection(D) <= (2 * q - p) * (D.d() + D.multiplicity_sum());
}

/// beta0 d^2 + d(beta0 - 2) - n beta0 m^2 + (beta0 - 2) n m.
inline Rational hyperbola_value(const Integer& m, const Integer& d, const Integer& n, const Rational& beta0) {
  const Rational b2 = beta0 - 2;
  return beta0 * Rational(d * d) + b2 * Rational(d) - beta0 * Rational(n * m * m) + b2 * Rational(n * m);
}

/// Sign of hyperbola_value in integer arithmetic (scaled by the denominator of beta0).
inline int hyperbola_sign(const Integer& m, const Integer& d, const Integer& n, const Rational& beta0) {
  const Integer& p = numerator(beta0);
  const Integer& q = denominator(beta0);
  const Integer pm = p - 2 * q;
  const Integer v = p * d * d + pm * d - n * p * m * m + pm * n * m;
  return v.sign();
}

/// Largest real d on the hyperbola for a given m >= 1.
inline QuadSurd hyperbola_d_of_m(const Integer& m, const Integer& n, const Rational& beta0) {
  detail::require(m >= 1, errc::domain, "m must be at least 1");
  const Rational b2 = beta0 - 2;
  const Rational disc = b2 * b2 + 4 * beta0 * (Rational(n) * beta0 * Rational(m * m) - b2 * Rational(n * m));
  if (disc < 0) detail::fail(errc::domain, "hyperbola has no real point at this m");
  return (QuadSurd(-b2) + QuadSurd::sqrt_of(disc)) / (2 * beta0);
}

/// d = sqrt(n) m.
inline QuadSurd nagata_line(const Integer& m, const Integer& n) {
  detail::require(n >= 0, errc::domain, "n must be non-negative");
  return QuadSurd(Rational(0), Rational(m), n);
}

/// Intercept c of the asymptote d = sqrt(n) m + c parallel to the Nagata line.
inline QuadSurd asymptote_offset(const Integer& n, const Rational& beta0) {
  detail::require(n >= 1, errc::domain, "n must be at least 1");
  detail::require_threshold(beta0);
  const Rational factor = -(beta0 - 2) / (2 * beta0);
  return QuadSurd(factor, factor, n);
}

// ---------------------------------------------------------------------------
// Seshadri constants
// ---------------------------------------------------------------------------

enum class SeshadriSource { NAGATA_CONJECTURAL, HARBOURNE_ROE, PETRA_N10, USER };

constexpr std::string_view to_string(SeshadriSource s) noexcept {
  switch (s) {
    case SeshadriSource::NAGATA_CONJECTURAL: return "NAGATA_CONJECTURAL";
    case SeshadriSource::HARBOURNE_ROE: return "HARBOURNE_ROE";
    case SeshadriSource::PETRA_N10: return "PETRA_N10";
    case SeshadriSource::USER: return "USER";
  }
  return "?";
}

/// Lower estimate e_n <= eps_n. Holds 0 < value <= 1/sqrt(n).
class SeshadriEstimate {
 public:
  SeshadriEstimate(Integer n, QuadSurd value, SeshadriSource source)
      : n_(std::move(n)), value_(std::move(value)), source_(source) {
    detail::require(n_ >= 1, errc::domain, "n must be at least 1");
    detail::require(value_.sign() > 0, errc::domain, "Seshadri estimate must be positive");
    // value <= 1/sqrt(n)  <=>  value^2 <= 1/n, both sides positive
    if (value_.square_of_pure() > Rational(1, n_))
      detail::fail(errc::domain, "estimate exceeds the conjectural value 1/sqrt(n)");
  }

  const Integer& n() const noexcept { return n_; }
  const QuadSurd& value() const noexcept { return value_; }
  SeshadriSource source() const noexcept { return source_; }
  bool conjectural() const noexcept { return source_ == SeshadriSource::NAGATA_CONJECTURAL; }

 private:
  Integer n_;
  QuadSurd value_;
  SeshadriSource source_;
};

/// The best known homogeneous bound for ten points.
inline const Rational& petra_e10() {
  static const Rational value(228, 721);
  return value;
}

/// 1/sqrt(n).
inline SeshadriEstimate seshadri_conjectural(const Integer& n) {
  return SeshadriEstimate(n, QuadSurd::sqrt_of(Rational(1, n)), SeshadriSource::NAGATA_CONJECTURAL);
}

/// e_n = sqrt((1 - 1/f(n))/n) when f(n) is given; 228/721 for n = 10;
/// otherwise the conjectural 1/sqrt(n).
inline SeshadriEstimate seshadri_lower(const Integer& n, const std::optional<Rational>& f_of_n = std::nullopt) {
  detail::require(n >= 1, errc::domain, "n must be at least 1");
  if (f_of_n) {
    detail::require(*f_of_n > 1, errc::domain, "f(n) must exceed 1");
    return SeshadriEstimate(n, QuadSurd::sqrt_of((1 - 1 / *f_of_n) / Rational(n)), SeshadriSource::HARBOURNE_ROE);
  }
  if (n == 10) return SeshadriEstimate(n, petra_e10(), SeshadriSource::PETRA_N10);
  return seshadri_conjectural(n);
}

inline SeshadriEstimate seshadri_user(const Integer& n, const Rational& value) {
  return SeshadriEstimate(n, value, SeshadriSource::USER);
}

/// -1/(n eps_n). No irreducible class has D^2/d strictly below it.
inline Rational roe_bound(const Integer& n, const Rational& eps_n) {
  detail::require(eps_n > 0, errc::domain, "eps_n must be positive");
  detail::require(n >= 1, errc::domain, "n must be at least 1");
  return -1 / (Rational(n) * eps_n);
}

/// Strict: excluded iff D^2/d < -1/(n eps_n).
inline bool roe_excluded(const DivisorClass& D, const Rational& eps_n) {
  detail::require(D.d() > 0, errc::domain, "degree must be positive");
  return Rational(self_intersection(D), D.d()) < roe_bound(Integer(D.n()), eps_n);
}

/// ((beta0-2)/beta0)(1 + 1/eps_n) - 1/(n eps_n): distance between the two thresholds.
inline Rational roe_gap(const Integer& n, const Rational& beta0, const Rational& eps_n) {
  detail::require(eps_n > 0, errc::domain, "eps_n must be positive");
  return (beta0 - 2) / beta0 * (1 + 1 / eps_n) + roe_bound(n, eps_n);
}

/// Same region with M/d replaced by 1/eps_n. Boundary counts as inside.
inline bool sesh_region_member(const DivisorClass& D, const Rational& beta0, const Rational& eps_n) {
  detail::require(D.d() > 0, errc::domain, "degree must be positive");
  detail::require_threshold(beta0);
  detail::require(eps_n > 0, errc::domain, "eps_n must be positive");
  return Rational(self_intersection(D), D.d()) <= (2 - beta0) / beta0 * (1 + 1 / eps_n);
}

// ---------------------------------------------------------------------------
// Double covers
// ---------------------------------------------------------------------------

/// Genus of f^*D for a double cover branched along B = 2 eta: 2 g(D) - 1 + eta.D.
inline Integer double_cover_genus(const Integer& g_D, const Integer& eta_dot_D) {
  detail::require(g_D >= 0, errc::domain, "genus must be non-negative");
  const Integer g = 2 * g_D - 1 + eta_dot_D;
  if (g < 0) detail::fail(errc::inconsistent_input, "pulled-back genus would be " + g.str());
  return g;
}

/// k_D >= beta0 (g - 1) + ((beta0 - 2)/2) D.eta.
inline bool nongen_threshold_met(const Integer& k_D, const Integer& g, const Integer& eta_dot_D,
                                 const Rational& beta0) {
  detail::require_threshold(beta0);
  return Rational(k_D) >= beta0 * Rational(g - 1) + (beta0 - 2) / 2 * Rational(eta_dot_D);
}

/// eta = 4L, the twist used for Y_n.
inline DivisorClass plane_blowup_eta(std::size_t n) { return DivisorClass::homogeneous(4, 0, n); }

}  // namespace cbounds
