#include <gtest/gtest.h>

#include "canonical_bounds/vojta.hpp"

using namespace cbounds;

TEST(PolarizedSurface, AdjunctionGuard) {
  EXPECT_NO_THROW(PolarizedSurface(5, 5, 6));
  try {
    PolarizedSurface(2, 1, 2);
    FAIL();
  } catch (const bounds_error& e) {
    EXPECT_EQ(e.code(), errc::invalid_class);
  }
  EXPECT_THROW(PolarizedSurface(2, 0, 2), bounds_error);
}

TEST(LambdaLower, Examples) {
  EXPECT_EQ(lambda_lower(PolarizedSurface(5, 5, 6)), Rational(1, 2));
  EXPECT_EQ(lambda_lower(PolarizedSurface(6, 2, 5)), 1);
  EXPECT_THROW(lambda_lower(PolarizedSurface(0, 2, 2)), bounds_error);
}

TEST(LambdaLower, CanonicalMultipleMatchesClosedForm) {
  for (long m = 1; m <= 12; ++m)
    for (long L2 : {2, 4, 6, 10}) {
      const auto ps = PolarizedSurface::canonical_multiple(m, L2);
      EXPECT_EQ(ps.KL(), m * L2);
      EXPECT_EQ(ps.gamma(), 1 + (1 + m) * L2 / 2);
      EXPECT_EQ(lambda_lower(ps), pluricanonical_lambda(m));
    }
  EXPECT_THROW(PolarizedSurface::canonical_multiple(2, 1), bounds_error);
}

TEST(ProjectionRatio, Examples) {
  const PolarizedSurface quintic(5, 5, 6);
  EXPECT_EQ(projection_genus(quintic, 1), 6);
  EXPECT_EQ(projection_ratio(quintic, 1), 1);
  EXPECT_THROW(projection_ratio(quintic, 0), bounds_error);
}

TEST(ProjectionRatio, ExceedsBoundAndConverges) {
  for (const auto& ps : {PolarizedSurface(5, 5, 6), PolarizedSurface(6, 2, 5), PolarizedSurface(3, 1, 3),
                         PolarizedSurface::canonical_multiple(7, 4)}) {
    const Rational bound = lambda_lower(ps);
    Rational previous = projection_ratio(ps, 1);
    for (long n = 1; n <= 1000; ++n) {
      const Rational r = projection_ratio(ps, n);
      EXPECT_GT(r, bound);
      // decreases towards the bound as L^2/n shrinks
      EXPECT_LE(r, previous);
      previous = r;
    }
    const Rational far = projection_ratio(ps, 1000000);
    EXPECT_LT(far - bound, Rational(1, 100000));
  }
}

TEST(PluricanonicalLambda, Examples) {
  EXPECT_EQ(pluricanonical_lambda(1), Rational(1, 2));
  EXPECT_EQ(pluricanonical_lambda(3), 1);
  const Rational big = pluricanonical_lambda(1000000);
  EXPECT_LT(big, 2);
  EXPECT_LT(2 - big, Rational(1, 100000));
  EXPECT_THROW(pluricanonical_lambda(0), bounds_error);
}
