#pragma once

/**
 * @file exactmath.hpp
 * @brief Exact rationals and quadratic surds r + s*sqrt(t).
 *
 * Every inequality in this library is decided exactly. Rationals are GMP
 * backed (always in lowest terms, positive denominator). A QuadSurd carries
 * a single radical; values over the same radical form a field, and comparing
 * such values reduces to the sign of one surd, decided by squaring.
 *
 * Radicands are not required to be squarefree. Perfect squares collapse to a
 * rational and squares of small primes are pulled out at construction.
 */

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <array>
#include <compare>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"

namespace cbounds {

namespace bmp = boost::multiprecision;

using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using Decimal50 = bmp::cpp_dec_float_50;

// ---------------------------------------------------------------------------
// Integer / rational helpers
// ---------------------------------------------------------------------------

inline Rational make_rational(const Integer& num, const Integer& den) {
  detail::require(den != 0, errc::domain, "zero denominator");
  return Rational(num, den);
}

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

/// Floor of the square root of a non-negative integer.
inline Integer isqrt(const Integer& n) {
  detail::require(n >= 0, errc::domain, "isqrt of a negative integer");
  return bmp::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

inline Integer floor(const Rational& q) {
  const Integer& num = numerator(q);
  const Integer& den = denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

inline std::strong_ordering cmp(const Rational& x, const Rational& y) {
  const int c = x.compare(y);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Parses "p", "-p" or "p/q". Decimal points are rejected.
inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    detail::fail(errc::domain, "not a rational literal: '" + text + "'");
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den(1);
  if (m[2].matched) den = Integer(m[2].str().front() == '+' ? m[2].str().substr(1) : m[2].str());
  return make_rational(num, den);
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Decimal50 to_decimal(const Integer& x) { return Decimal50(x.str()); }

inline Decimal50 to_decimal(const Rational& x) {
  return Decimal50(numerator(x).str()) / Decimal50(denominator(x).str());
}

/// Decimal string with the given number of significant digits.
inline std::string approx_string(const Decimal50& x, int digits = 12) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

// ---------------------------------------------------------------------------
// QuadSurd
// ---------------------------------------------------------------------------

class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rational r) : r_(std::move(r)) {}  // NOLINT(implicit)
  QuadSurd(const Integer& r) : r_(r) {}       // NOLINT(implicit)
  QuadSurd(int r) : r_(r) {}                  // NOLINT(implicit)

  QuadSurd(Rational r, Rational s, Integer t) : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
    detail::require(t_ >= 0, errc::domain, "negative radicand");
    normalize();
  }

  /// sqrt(q) for a non-negative rational q, written over an integer radicand.
  static QuadSurd sqrt_of(const Rational& q) {
    detail::require(q >= 0, errc::domain, "square root of a negative rational");
    const Integer& den = denominator(q);
    // sqrt(p/q) = sqrt(p*q) / q
    return QuadSurd(Rational(0), Rational(Integer(1), den), numerator(q) * den);
  }

  const Rational& rational_part() const noexcept { return r_; }
  const Rational& surd_coefficient() const noexcept { return s_; }
  const Integer& radicand() const noexcept { return t_; }

  bool is_rational() const noexcept { return s_ == 0; }

  /// Throws unless the value is rational.
  const Rational& as_rational() const {
    detail::require(is_rational(), errc::domain, "value is irrational");
    return r_;
  }

  int sign() const {
    const int sr = r_.sign();
    const int ss = s_.sign();
    if (ss == 0) return sr;
    if (sr == 0 || sr == ss) return ss;
    // opposite signs: compare r^2 with s^2 t
    const int c = (r_ * r_).compare(s_ * s_ * Rational(t_));
    if (c == 0) return 0;
    return c > 0 ? sr : ss;
  }

  /// Greatest integer <= value, by integer square-root bracketing.
  Integer floor() const {
    if (is_rational()) return cbounds::floor(r_);
    // value = (A + C*sqrt(t)) / D with integers A, C and D > 0
    const Integer D = bmp::lcm(denominator(r_), denominator(s_));
    const Integer A = numerator(r_) * (D / denominator(r_));
    const Integer C = numerator(s_) * (D / denominator(s_));
    const Integer sq = C * C * t_;
    const Integer root = isqrt(sq);
    Integer fl_surd;  // floor(C*sqrt(t))
    if (C >= 0) {
      fl_surd = root;
    } else {
      fl_surd = (root * root == sq) ? Integer(-root) : Integer(-root - 1);
    }
    return cbounds::floor(Rational(A + fl_surd, D));
  }

  Integer ceil() const { return -(-*this).floor(); }

  Decimal50 to_decimal() const {
    Decimal50 v = cbounds::to_decimal(r_);
    if (!is_rational()) v += cbounds::to_decimal(s_) * bmp::sqrt(cbounds::to_decimal(t_));
    return v;
  }

  long double to_long_double() const { return static_cast<long double>(to_decimal()); }

  std::string to_string() const {
    if (is_rational()) return cbounds::to_string(r_);
    std::string out;
    if (r_ != 0) out = cbounds::to_string(r_) + (s_ < 0 ? " - " : " + ");
    else if (s_ < 0) out = "-";
    const Rational abs_s = s_ < 0 ? Rational(-s_) : s_;
    if (abs_s != 1) out += cbounds::to_string(abs_s) + "*";
    return out + "sqrt(" + t_.str() + ")";
  }

  QuadSurd operator-() const {
    QuadSurd out = *this;
    out.r_ = -out.r_;
    out.s_ = -out.s_;
    return out;
  }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    auto [a, b] = align(x, y);
    return QuadSurd(a.r_ + b.r_, a.s_ + b.s_, a.t_);
  }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    auto [a, b] = align(x, y);
    const Rational t(a.t_);
    return QuadSurd(a.r_ * b.r_ + a.s_ * b.s_ * t, a.r_ * b.s_ + a.s_ * b.r_, a.t_);
  }

  friend QuadSurd operator/(const QuadSurd& x, const Rational& q) {
    detail::require(q != 0, errc::domain, "division by zero");
    return QuadSurd(x.r_ / q, x.s_ / q, x.t_);
  }

  /// Square of a pure surd s*sqrt(t) (or of a rational); always rational.
  Rational square_of_pure() const {
    detail::require(r_ == 0 || s_ == 0, errc::domain, "not a pure surd");
    return r_ * r_ + s_ * s_ * Rational(t_);
  }

  /// Exact ordering. Mixed radicals raise unsupported_comparison.
  friend std::strong_ordering cmp(const QuadSurd& x, const QuadSurd& y) {
    const int sg = (x - y).sign();
    return sg < 0 ? std::strong_ordering::less
                  : (sg > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y); }
  friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y) == 0; }

  friend std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.to_string(); }

 private:
  void normalize() {
    if (s_ == 0 || t_ == 0) {
      s_ = 0;
      t_ = 0;
      return;
    }
    static constexpr std::array<unsigned, 25> small_primes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                              29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                              67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : small_primes) {
      const unsigned p2 = p * p;
      if (t_ < p2) break;
      while (t_ % p2 == 0) {
        t_ /= p2;
        s_ *= p;
      }
    }
    const Integer root = isqrt(t_);
    if (root * root == t_) {
      r_ += s_ * Rational(root);
      s_ = 0;
      t_ = 0;
    }
  }

  // Rewrites both operands over one radical. sqrt(t2) = (k/t1) sqrt(t1) when t1*t2 = k^2.
  static std::pair<QuadSurd, QuadSurd> align(const QuadSurd& x, const QuadSurd& y) {
    if (x.t_ == y.t_) return {x, y};
    if (x.is_rational()) {
      QuadSurd xx = x;
      xx.t_ = y.t_;
      return {xx, y};
    }
    if (y.is_rational()) {
      QuadSurd yy = y;
      yy.t_ = x.t_;
      return {x, yy};
    }
    const Integer prod = x.t_ * y.t_;
    const Integer k = isqrt(prod);
    if (k * k != prod)
      detail::fail(errc::unsupported_comparison,
                   "surds over unrelated radicals sqrt(" + x.t_.str() + ") and sqrt(" + y.t_.str() + ")");
    QuadSurd yy = y;
    yy.s_ = y.s_ * Rational(k, x.t_);
    yy.t_ = x.t_;
    return {x, yy};
  }

  Rational r_{0};
  Rational s_{0};
  Integer t_{0};
};

inline std::strong_ordering cmp(const QuadSurd& x, const Rational& y) { return cmp(x, QuadSurd(y)); }
inline Integer floor(const QuadSurd& x) { return x.floor(); }

}  // namespace cbounds
