#include <gtest/gtest.h>

#include "orthocount/qseries.hpp"
#include "support.hpp"

namespace orthocount {
namespace {

using testing::at;
using testing::P;

TEST(RangeProducts, EmptyProductIsOne) {
  EXPECT_EQ(psi_plus(3, 2), LaurentPoly(1));
  EXPECT_EQ(psi_minus(1, 0), LaurentPoly(1));
  EXPECT_EQ(chi(5, 4), LaurentPoly(1));
}

TEST(RangeProducts, SmallCases) {
  EXPECT_EQ(psi_plus(1, 1), P("q + 1"));
  EXPECT_EQ(psi_plus(1, 2), P("q^3 + q^2 + q + 1"));
  EXPECT_EQ(psi_minus(1, 2), P("q^3 - q^2 - q + 1"));
  EXPECT_EQ(chi(1, 2), P("q^4 - q^3 - q + 1"));
  EXPECT_EQ((RangeProduct{ProductKind::chi, 2, 3}.expand()), chi(2, 3));
}

TEST(RangeProducts, ReversedRangeIsRejected) {
  EXPECT_THROW(psi_plus(3, 1), InvalidRange);
  EXPECT_THROW(psi_minus(2, 0), InvalidRange);
}

TEST(GaussBinomial, Values) {
  EXPECT_EQ(at(gauss_binomial(3, 1), 3), 13);
  EXPECT_EQ(at(gauss_binomial(4, 2), 3), 130);
  EXPECT_EQ(at(gauss_binomial(6, 3), 3), 33880);
  EXPECT_EQ(gauss_binomial(2, 1), P("q + 1"));
  EXPECT_EQ(gauss_binomial(5, 0), LaurentPoly(1));
  EXPECT_EQ(gauss_binomial(5, 5), LaurentPoly(1));
}

TEST(GaussBinomial, Extension) {
  EXPECT_TRUE(gauss_binomial(3, 4).is_zero());
  EXPECT_TRUE(gauss_binomial(3, -1).is_zero());
  EXPECT_EQ(gauss_binomial(-1, 0), LaurentPoly(1));
  EXPECT_TRUE(gauss_binomial(-2, 0).is_zero());
  EXPECT_TRUE(gauss_binomial(-1, 1).is_zero());
}

TEST(GaussBinomial, PascalAndSymmetry) {
  for (int b = 1; b <= 12; ++b)
    for (int a = 0; a <= b; ++a) {
      EXPECT_EQ(gauss_binomial(b, a), gauss_binomial(b, b - a));
      EXPECT_EQ(gauss_binomial(b, a), gauss_binomial(b - 1, a - 1) + gauss_binomial(b - 1, a).shifted(a))
          << b << " " << a;
    }
}

TEST(GaussBinomial, SquaredVariable) {
  EXPECT_EQ(gauss_binomial_sq(4, 2), gauss_binomial(4, 2).dilated(2));
}

}  // namespace
}  // namespace orthocount
