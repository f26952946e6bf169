#pragma once

/**
 * @file inequalities.hpp
 * @brief Miyaoka-type inequalities and the canonical-degree bounds built on them.
 *
 * Negative curves: the canonical degree of a negative curve that is not a
 * smooth rational curve, on a surface with kappa >= 0, is at most the largest
 * root of P(k) = 2(k - 3G)^2 - a(3k - 6G) with G = g - 1. The remaining
 * bounds (on beta, on g given beta = 3 + eps, and the additive constant
 * B(eps)) are consequences of that root formula.
 *
 * Positive curves (C^2 > 0, beta > 3, x = delta/C^2 > x0 > 1/2): the bounds
 * on g and k come from minimising the first Miyaoka quadratic in alpha.
 *
 * All predicates are decided in exact arithmetic. "For all alpha in [0,1]"
 * is decided by endpoint and vertex analysis, never by sampling.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvedata.hpp"
#include "errors.hpp"
#include "exactmath.hpp"

namespace cbounds {

/// Raw (g, C^2, k) data fed to the Miyaoka inequalities. Unlike
/// CurveNumerics it is not checked against adjunction.
struct CurveDegrees {
  Integer g;
  Integer C2;
  Integer k;

  CurveDegrees(Integer g_, Integer C2_, Integer k_) : g(std::move(g_)), C2(std::move(C2_)), k(std::move(k_)) {}
  CurveDegrees(const CurveNumerics& c) : g(c.g()), C2(c.C2()), k(c.kC()) {}  // NOLINT(implicit)
};

// ---------------------------------------------------------------------------
// Miyaoka inequalities
// ---------------------------------------------------------------------------

/// Coefficients of m1(alpha) = quad*alpha^2 - lin*alpha + 2a.
struct MiyaokaQuadratic {
  Integer quad;  // C^2 + 3k - 6g + 6
  Integer lin;   // 4(k - 3g + 3)
  Integer constant;

  Rational operator()(const Rational& alpha) const { return alpha * alpha * quad - alpha * lin + constant; }
};

inline MiyaokaQuadratic miyaoka_quadratic(const CurveDegrees& c, const Integer& a) {
  return {c.C2 + 3 * c.k - 6 * c.g + 6, 4 * (c.k - 3 * c.g + 3), 2 * a};
}

inline Rational m1_value(const CurveDegrees& c, const Integer& a, const Rational& alpha) {
  detail::require(alpha >= 0 && alpha <= 1, errc::domain, "alpha must lie in [0, 1]");
  return miyaoka_quadratic(c, a)(alpha);
}

/// Minimum of the first Miyaoka quadratic over [0, 1].
inline Rational m1_minimum(const CurveDegrees& c, const Integer& a) {
  const auto q = miyaoka_quadratic(c, a);
  Rational best = q(Rational(0));
  const Rational at_one = q(Rational(1));
  if (at_one < best) best = at_one;
  if (q.quad > 0) {
    const Rational vertex(q.lin, 2 * q.quad);
    if (vertex > 0 && vertex < 1) {
      const Rational at_vertex = q(vertex);
      if (at_vertex < best) best = at_vertex;
    }
  }
  return best;
}

inline bool m1_holds_for_all_alpha(const CurveDegrees& c, const Integer& a) { return m1_minimum(c, a) >= 0; }

/// 2(k - 3g + 3)^2 - a(C^2 + 3k - 6g + 6). Requires k > 3(g - 1).
inline Integer m1bis_value(const CurveDegrees& c, const Integer& a) {
  if (c.k <= 3 * (c.g - 1))
    detail::fail(errc::precondition, "second Miyaoka inequality needs k > 3(g - 1)");
  const Integer excess = c.k - 3 * c.g + 3;
  return 2 * excess * excess - a * (c.C2 + 3 * c.k - 6 * c.g + 6);
}

inline bool m1bis_holds(const CurveDegrees& c, const Integer& a) { return m1bis_value(c, a) <= 0; }

/// Both sides of the third Miyaoka inequality, multiplied by K^2 > 0.
struct Miyaoka2Sides {
  Rational left;   // (c2 - K^2) k^2 + ((4G + a) k - 2G(3G + a)) K^2
  Rational right;  // (c2 - K^2/3)(k^2 - C^2 K^2)

  bool holds() const { return left >= right && right >= 0; }
};

inline Miyaoka2Sides m2_sides(const CurveDegrees& c, const SurfaceInvariants& s) {
  if (s.K2() <= 0) detail::fail(errc::precondition, "third Miyaoka inequality needs K^2 > 0");
  const Integer G = c.g - 1;
  const Integer a = s.a();
  const Integer k2 = c.k * c.k;
  Miyaoka2Sides out;
  out.left = Rational((s.c2() - s.K2()) * k2 + ((4 * G + a) * c.k - 2 * G * (3 * G + a)) * s.K2());
  out.right = (Rational(s.c2()) - Rational(s.K2(), 3)) * Rational(k2 - c.C2 * s.K2());
  return out;
}

inline bool m2_holds(const CurveDegrees& c, const SurfaceInvariants& s) { return m2_sides(c, s).holds(); }

// ---------------------------------------------------------------------------
// Negative curves
// ---------------------------------------------------------------------------

/// P(k) = 2(k - 3G)^2 - a(3k - 6G), G = g - 1.
inline Integer p_of_k(const Integer& k, const Integer& g, const Integer& a) {
  const Integer G = g - 1;
  const Integer u = k - 3 * G;
  return 2 * u * u - a * (3 * k - 6 * G);
}

// Plain integer literals would otherwise be ambiguous between the overloads.
inline Integer p_of_k(long long k, const Integer& g, const Integer& a) { return p_of_k(Integer(k), g, a); }

/// P evaluated at a surd argument; used to check the root symbolically.
inline QuadSurd p_of_k(const QuadSurd& k, const Integer& g, const Integer& a) {
  const Integer G = g - 1;
  const QuadSurd u = k - QuadSurd(3 * G);
  return QuadSurd(2) * u * u - QuadSurd(a) * (QuadSurd(3) * k - QuadSurd(6 * G));
}

/// Largest root of P: 3(g-1) + 3a/4 + sqrt(9a^2 + 24a(g-1))/4.
inline QuadSurd max_k_negative(const Integer& g, const Integer& a) {
  detail::require(g >= 0, errc::domain, "genus must be non-negative");
  detail::require(a >= 0, errc::domain, "a must be non-negative");
  if (a == 0) {
    if (g == 0)
      detail::fail(errc::impossible_configuration, "a = 0 and g = 0: P(k) > 0, no such negative curve exists");
    return QuadSurd(3 * (g - 1));
  }
  const Integer disc = 9 * a * a + 24 * a * (g - 1);
  if (disc < 0)
    detail::fail(errc::impossible_configuration,
                 "9a^2 + 24a(g - 1) < 0: P(k) has no real root, no such negative curve exists");
  return QuadSurd(Rational(3 * (g - 1)) + Rational(3 * a, 4), Rational(1, 4), disc);
}

struct BetaBound {
  QuadSurd exact;  // 3 + 3a/4 + sqrt(9a^2 + 24a)/4
  Rational linear;  // 4 + 3a/2
};

inline BetaBound beta_bound(const Integer& a) {
  detail::require(a >= 0, errc::domain, "a must be non-negative");
  return {QuadSurd(Rational(3) + Rational(3 * a, 4), Rational(1, 4), 9 * a * a + 24 * a),
          Rational(4) + Rational(3 * a, 2)};
}

/// g <= 1 + 3a(eps + 1) / (2 eps^2) for curves with beta = 3 + eps.
inline Rational genus_bound_from_epsilon(const Rational& eps, const Integer& a) {
  detail::require(eps > 0, errc::domain, "epsilon must be positive");
  detail::require(a >= 0, errc::domain, "a must be non-negative");
  return 1 + Rational(3 * a) * (eps + 1) / (2 * eps * eps);
}

/// Additive constant with k <= (3 + eps)(g - 1) + B(eps) for every negative
/// curve covered by max_k_negative. It is 3a/4 plus the maximum over t >= 0
/// of sqrt(9a^2 + 24at)/4 - eps t; the maximiser is t = 3a(1 - eps^2)/(8 eps^2)
/// for eps <= 1 and t = 0 otherwise.
inline Rational b_epsilon(const Rational& eps, const Integer& a) {
  detail::require(eps > 0, errc::domain, "epsilon must be positive");
  detail::require(a >= 0, errc::domain, "a must be non-negative");
  const Rational base(3 * a, 4);
  if (eps > 1) return Rational(3 * a, 2);
  return base + Rational(3 * a) * (1 + eps * eps) / (8 * eps);
}

/// Maximiser t* of sqrt(9a^2 + 24at)/4 - eps t over t >= 0.
inline Rational b_epsilon_argmax(const Rational& eps, const Integer& a) {
  detail::require(eps > 0, errc::domain, "epsilon must be positive");
  if (eps >= 1) return Rational(0);
  return Rational(3 * a) * (1 - eps * eps) / (8 * eps * eps);
}

// ---------------------------------------------------------------------------
// Positive curves
// ---------------------------------------------------------------------------

/// Minimiser in alpha of the first Miyaoka quadratic rewritten for C^2 > 0.
inline Rational alpha0(const Rational& beta, const Integer& delta, const Integer& C2) {
  detail::require(beta >= 3, errc::domain, "alpha0 needs beta >= 3");
  detail::require(C2 > 0, errc::domain, "alpha0 needs C^2 > 0");
  detail::require(2 * delta - C2 > 0, errc::domain, "alpha0 needs 2 delta - C^2 > 0");
  return (beta - 3) * Rational(2 * delta - C2) / ((beta - 2) * Rational(3 * delta - C2));
}

struct PositiveCurveBounds {
  Rational g_bound;              // a (beta-2)/(beta-3)^2 R + 1
  Rational k_bound_printed;      // a (beta-2)/(beta (beta-3)^2) R, as published
  Rational k_bound_derived;      // beta (g_bound - 1)
  Rational k_bound_pos3_offset;  // a (beta-2)^2/(beta-3)^2 R, so k <= 2(g-1) + offset
};

/// R = (3 x0 - 1)/(2 x0 - 1).
inline Rational x0_ratio(const Rational& x0) {
  detail::require(x0 > Rational(1, 2), errc::domain, "x0 must exceed 1/2");
  return (3 * x0 - 1) / (2 * x0 - 1);
}

/// The published k-bound differs from beta*(g_bound - 1) by a factor beta^2;
/// both are reported, see README.
inline PositiveCurveBounds thm41_bounds(const Rational& beta, const Rational& x0, const Integer& a) {
  detail::require(beta > 3, errc::domain, "beta must exceed 3");
  detail::require(a >= 0, errc::domain, "a must be non-negative");
  const Rational R = x0_ratio(x0);
  const Rational gap2 = (beta - 3) * (beta - 3);
  PositiveCurveBounds out;
  out.g_bound = Rational(a) * (beta - 2) / gap2 * R + 1;
  out.k_bound_printed = Rational(a) * (beta - 2) / (beta * gap2) * R;
  out.k_bound_derived = beta * (out.g_bound - 1);
  out.k_bound_pos3_offset = Rational(a) * (beta - 2) * (beta - 2) / gap2 * R;
  return out;
}

/// delta/C^2 - 1/2; equals (1 + eps)(g - 1)/(2 C^2) by adjunction.
inline Rational delta_ratio_gap(const CurveNumerics& c) {
  detail::require(c.C2() > 0, errc::domain, "delta ratio gap needs C^2 > 0");
  detail::require(c.g() > 1, errc::domain, "delta ratio gap needs g > 1");
  return Rational(c.delta(), c.C2()) - Rational(1, 2);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class FormulaId { EQ1, EQ3, EQ4, POS1, POS2_PRINTED, POS2_DERIVED, POS3, B_EPS };

constexpr std::string_view to_string(FormulaId f) noexcept {
  switch (f) {
    case FormulaId::EQ1: return "EQ1";
    case FormulaId::EQ3: return "EQ3";
    case FormulaId::EQ4: return "EQ4";
    case FormulaId::POS1: return "POS1";
    case FormulaId::POS2_PRINTED: return "POS2_PRINTED";
    case FormulaId::POS2_DERIVED: return "POS2_DERIVED";
    case FormulaId::POS3: return "POS3";
    case FormulaId::B_EPS: return "B_EPS";
  }
  return "?";
}

/// What each bound constrains, for display.
constexpr std::string_view bound_subject(FormulaId f) noexcept {
  switch (f) {
    case FormulaId::EQ1: return "k_C <=";
    case FormulaId::EQ3: return "beta_C <=";
    case FormulaId::EQ4: return "g <=";
    case FormulaId::POS1: return "g <=";
    case FormulaId::POS2_PRINTED: return "k_C <= (printed)";
    case FormulaId::POS2_DERIVED: return "k_C <= (derived)";
    case FormulaId::POS3: return "k_C - 2(g-1) <=";
    case FormulaId::B_EPS: return "B(eps) =";
  }
  return "";
}

struct BoundReport {
  FormulaId formula;
  std::optional<Integer> g;
  Integer a;
  std::optional<Rational> eps;
  std::optional<Rational> beta;
  std::optional<Rational> x0;
  QuadSurd bound;
  Integer bound_floor;
};

namespace detail {
inline BoundReport make_report(FormulaId id, QuadSurd bound, const Integer& a) {
  BoundReport r{id, std::nullopt, a, std::nullopt, std::nullopt, std::nullopt, std::move(bound), Integer(0)};
  r.bound_floor = r.bound.floor();
  return r;
}
}  // namespace detail

/// Negative-curve bounds for (g, a): root bound, beta bound (when g > 1),
/// and, when eps is given, the genus bound and B(eps).
inline std::vector<BoundReport> negative_curve_reports(const Integer& g, const Integer& a,
                                                       const std::optional<Rational>& eps = std::nullopt) {
  std::vector<BoundReport> out;
  auto eq1 = detail::make_report(FormulaId::EQ1, max_k_negative(g, a), a);
  eq1.g = g;
  out.push_back(std::move(eq1));
  auto eq3 = detail::make_report(FormulaId::EQ3, beta_bound(a).exact, a);
  out.push_back(std::move(eq3));
  if (eps) {
    auto eq4 = detail::make_report(FormulaId::EQ4, genus_bound_from_epsilon(*eps, a), a);
    eq4.eps = eps;
    out.push_back(std::move(eq4));
    auto b = detail::make_report(FormulaId::B_EPS, b_epsilon(*eps, a), a);
    b.eps = eps;
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<BoundReport> positive_curve_reports(const Rational& beta, const Rational& x0, const Integer& a) {
  const auto b = thm41_bounds(beta, x0, a);
  std::vector<BoundReport> out;
  const std::pair<FormulaId, const Rational*> rows[] = {
      {FormulaId::POS1, &b.g_bound},
      {FormulaId::POS2_PRINTED, &b.k_bound_printed},
      {FormulaId::POS2_DERIVED, &b.k_bound_derived},
      {FormulaId::POS3, &b.k_bound_pos3_offset},
  };
  for (const auto& [id, value] : rows) {
    auto r = detail::make_report(id, *value, a);
    r.beta = beta;
    r.x0 = x0;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cbounds
