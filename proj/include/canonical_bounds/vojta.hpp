#pragma once

// Lower bound for Lambda_X = sup over curve sequences of limsup K.C_n/(g_n - 1),
// realised by pulling back degree-n rational plane curves along a general
// projection of X embedded by a very ample L. Only the bound is computable;
// Lambda_X itself is not.

#include "errors.hpp"
#include "exactmath.hpp"

namespace cbounds {

/// K.L, L^2 and the arithmetic genus gamma of curves in |L|, with 2 gamma - 2 = L^2 + K.L.
class PolarizedSurface {
 public:
  PolarizedSurface(Integer KL, Integer L2, Integer gamma) : KL_(std::move(KL)), L2_(std::move(L2)), gamma_(std::move(gamma)) {
    detail::require(L2_ > 0, errc::domain, "L^2 must be positive");
    if (2 * gamma_ - 2 != L2_ + KL_)
      detail::fail(errc::invalid_class, "2 gamma - 2 = " + Integer(2 * gamma_ - 2).str() +
                                            " but L^2 + K.L = " + Integer(L2_ + KL_).str());
  }

  /// K = mL: K.L = m L^2 and gamma = 1 + (1 + m) L^2 / 2.
  static PolarizedSurface canonical_multiple(const Integer& m, const Integer& L2) {
    const Integer twice = (1 + m) * L2;
    if (twice % 2 != 0) detail::fail(errc::invalid_class, "(1 + m) L^2 must be even");
    return PolarizedSurface(m * L2, L2, 1 + twice / 2);
  }

  const Integer& KL() const noexcept { return KL_; }
  const Integer& L2() const noexcept { return L2_; }
  const Integer& gamma() const noexcept { return gamma_; }

 private:
  Integer KL_;
  Integer L2_;
  Integer gamma_;
};

/// K.L / (L^2 + gamma - 1).
inline Rational lambda_lower(const PolarizedSurface& ps) {
  if (ps.KL() <= 0) detail::fail(errc::precondition, "K.L must be positive for a surface of general type");
  return Rational(ps.KL(), ps.L2() + ps.gamma() - 1);
}

/// Geometric genus of C_n in |nL|: 2 g_n - 2 = n K.L + (3n - 2) L^2.
inline Rational projection_genus(const PolarizedSurface& ps, const Integer& n) {
  detail::require(n >= 1, errc::domain, "n must be at least 1");
  return Rational(n * ps.KL() + (3 * n - 2) * ps.L2(), 2) + 1;
}

/// K.C_n/(g_n - 1), cross-checked against K.L/(L^2 + gamma - 1 - L^2/n).
inline Rational projection_ratio(const PolarizedSurface& ps, const Integer& n) {
  detail::require(n >= 1, errc::domain, "n must be at least 1");
  const Rational g_minus_1 = projection_genus(ps, n) - 1;
  if (g_minus_1 <= 0) detail::fail(errc::precondition, "projected curves must have genus > 1");
  const Rational from_genus = Rational(n * ps.KL()) / g_minus_1;
  const Rational closed = Rational(ps.KL()) / (Rational(ps.L2() + ps.gamma() - 1) - Rational(ps.L2(), n));
  if (from_genus != closed) detail::fail(errc::inconsistent_input, "projection ratio forms disagree");
  return closed;
}

/// 2m/(m + 3), the bound when K = mL.
inline Rational pluricanonical_lambda(const Integer& m) {
  detail::require(m >= 1, errc::domain, "m must be at least 1");
  return Rational(2 * m, m + 3);
}

}  // namespace cbounds
