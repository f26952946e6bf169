#pragma once

// Numerical invariants of a surface and of a curve on it. Adjunction
// C^2 + K.C = 2 p_a - 2 is enforced when a CurveNumerics is built.

#include <string>

#include "errors.hpp"
#include "exactmath.hpp"

namespace cbounds {

enum class Kodaira { minus_infinity, zero, one, two };

inline std::string to_string(Kodaira k) {
  switch (k) {
    case Kodaira::minus_infinity: return "-inf";
    case Kodaira::zero: return "0";
    case Kodaira::one: return "1";
    case Kodaira::two: return "2";
  }
  return "?";
}

/// a = 3 c2 - K^2.
inline Integer a_invariant(const Integer& c2, const Integer& K2) { return 3 * c2 - K2; }

class SurfaceInvariants {
 public:
  SurfaceInvariants(Integer c2, Integer K2, Kodaira kodaira)
      : c2_(std::move(c2)), K2_(std::move(K2)), kodaira_(kodaira) {
    if (kodaira_ != Kodaira::minus_infinity && a() < 0)
      detail::fail(errc::invalid_class, "a = 3c2 - K^2 = " + a().str() + " < 0 with kodaira dimension >= 0");
  }

  const Integer& c2() const noexcept { return c2_; }
  const Integer& K2() const noexcept { return K2_; }
  Kodaira kodaira() const noexcept { return kodaira_; }
  Integer a() const { return a_invariant(c2_, K2_); }

 private:
  Integer c2_;
  Integer K2_;
  Kodaira kodaira_;
};

inline Integer a_invariant(const SurfaceInvariants& s) { return s.a(); }

/// Arithmetic genus from adjunction: (C^2 + k)/2 + 1.
inline Integer pa_from_adjunction(const Integer& C2, const Integer& kC) {
  const Integer sum = C2 + kC;
  if (sum % 2 != 0)
    detail::fail(errc::invalid_class,
                 "C^2 + K.C = " + sum.str() + " is odd; no divisor class on a smooth surface has these numbers");
  return sum / 2 + 1;
}

class CurveNumerics {
 public:
  /// Derives p_a by adjunction. Rejects odd C^2 + k and p_a < g.
  CurveNumerics(Integer g, Integer C2, Integer kC) : g_(std::move(g)), C2_(std::move(C2)), kC_(std::move(kC)) {
    detail::require(g_ >= 0, errc::domain, "geometric genus must be non-negative");
    pa_ = pa_from_adjunction(C2_, kC_);
    if (pa_ < g_)
      detail::fail(errc::invalid_class, "arithmetic genus " + pa_.str() + " below geometric genus " + g_.str());
  }

  /// Same, but checks a caller-supplied p_a against adjunction.
  CurveNumerics(Integer g, Integer pa, Integer C2, Integer kC) : CurveNumerics(std::move(g), C2, kC) {
    if (pa != pa_)
      detail::fail(errc::invalid_class,
                   "p_a = " + pa.str() + " contradicts adjunction (expected " + pa_.str() + ")");
  }

  const Integer& g() const noexcept { return g_; }
  const Integer& pa() const noexcept { return pa_; }
  const Integer& C2() const noexcept { return C2_; }
  const Integer& kC() const noexcept { return kC_; }
  Integer delta() const { return pa_ - g_; }

 private:
  Integer g_;
  Integer C2_;
  Integer kC_;
  Integer pa_;
};

/// beta = k / (g - 1), undefined at g = 1.
inline Rational beta(const CurveNumerics& c) {
  if (c.g() == 1) detail::fail(errc::undefined_value, "beta is undefined for g = 1");
  return Rational(c.kC(), c.g() - 1);
}

/// beta - 3. Not required to be positive.
inline Rational epsilon_excess(const CurveNumerics& c) {
  if (c.g() <= 1) detail::fail(errc::undefined_value, "epsilon needs g > 1");
  return beta(c) - 3;
}

/// x = delta / C^2, undefined at C^2 = 0.
inline Rational x_ratio(const CurveNumerics& c) {
  if (c.C2() == 0) detail::fail(errc::undefined_value, "x = delta/C^2 is undefined for C^2 = 0");
  return Rational(c.delta(), c.C2());
}

}  // namespace cbounds
