#include <gtest/gtest.h>

#include <random>

#include "orthocount/exactnum.hpp"
#include "support.hpp"

namespace orthocount {
namespace {

using testing::P;
using testing::R;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(R("6/4")), "3/2");
  EXPECT_EQ(to_string(R("-7")), "-7");
  EXPECT_EQ(to_string(R("0/5")), "0");
  EXPECT_THROW(R(""), ParseError);
  EXPECT_THROW(R("1/0"), std::exception);
  EXPECT_THROW(R("x"), ParseError);
}

TEST(LaurentPoly, ZeroTermsAreNotStored) {
  LaurentPoly a = P("q^2 + 1");
  LaurentPoly b = a - P("q^2");
  EXPECT_EQ(b, LaurentPoly(1));
  EXPECT_EQ(b.size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(LaurentPoly, ArithmeticWithNegativeExponents) {
  LaurentPoly x = P("q + q^-1");
  EXPECT_EQ(x * x, P("q^2 + 2 + q^-2"));
  EXPECT_EQ(x.low_degree(), -1);
  EXPECT_EQ(x.degree(), 1);
  EXPECT_EQ(x.eval(2), R("5/2"));
  EXPECT_THROW(x.eval(0), ZeroBase);
}

TEST(LaurentPoly, StrRoundTrips) {
  for (const char* s : {"1/2*q^4 - 1/2*q^2 + 1", "-q", "q^-3 + 7/3", "0", "-2*q^5 + q"}) {
    LaurentPoly p = P(s);
    EXPECT_EQ(LaurentPoly::parse(p.str()), p) << s;
  }
  EXPECT_EQ(P("1/2*q^4 - 1/2*q^2 + 1").str(), "1/2*q^4 - 1/2*q^2 + 1");
  EXPECT_THROW(P("q^"), ParseError);
  EXPECT_THROW(P("2*"), ParseError);
}

TEST(LaurentPoly, RandomRingLaws) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-3, 4);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 4; ++t) p += LaurentPoly::monomial(BigRational(coef(gen), 1 + (coef(gen) + 5) % 3), expo(gen));
    return p;
  };
  for (int round = 0; round < 200; ++round) {
    LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).eval(3), a.eval(3) * b.eval(3));
    if (!b.is_zero()) {
      EXPECT_EQ(div_exact(a * b, b), a);
    }
  }
}

TEST(LaurentPoly, ShiftAndDilate) {
  EXPECT_EQ(P("q + 1").shifted(-1), P("1 + q^-1"));
  EXPECT_EQ(P("q^2 - q").dilated(2), P("q^4 - q^2"));
  EXPECT_EQ(pow(P("q + 1"), 3), P("q^3 + 3*q^2 + 3*q + 1"));
  EXPECT_EQ(pow(P("q"), 0), LaurentPoly(1));
}

TEST(LaurentPoly, DivisionAndGcd) {
  EXPECT_EQ(div_exact(P("q^2 - 1"), P("q - 1")), P("q + 1"));
  EXPECT_THROW(div_exact(P("q^2 + 1"), P("q - 1")), NotDivisible);
  EXPECT_THROW(div_exact(P("q"), LaurentPoly()), DivisionByZero);
  EXPECT_EQ(gcd(P("q^3 - q"), P("2*q^2 + 2*q")), P("q + 1"));
  EXPECT_EQ(gcd(P("q^-2 + q^-1"), P("q + 1")), P("q + 1"));
}

TEST(Ratio, CanonicalForm) {
  Ratio r(P("q^2 - 1"), P("2*q^2 - 2*q"));
  EXPECT_EQ(r.num(), P("1/2*q + 1/2"));
  EXPECT_EQ(r.den(), P("q"));
  EXPECT_EQ(r.eval(3), R("2/3"));
  EXPECT_EQ(Ratio(P("q"), P("q")), Ratio(LaurentPoly(1)));
  EXPECT_EQ(Ratio(P("1"), P("q")) + Ratio(P("1"), P("q")), Ratio(P("2"), P("q")));
  EXPECT_THROW(Ratio(P("1"), LaurentPoly()), DivisionByZero);
  EXPECT_THROW(Ratio(P("1"), P("q - 3")).eval(3), std::domain_error);
}

}  // namespace
}  // namespace orthocount
