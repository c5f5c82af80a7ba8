#include <gtest/gtest.h>

#include "orthocount/anzahl.hpp"
#include "support.hpp"

namespace orthocount {
namespace {

using testing::at;
using testing::P;
using testing::R;

struct GammaCase {
  int i, j;
  FormType delta;
  OptType lambda;
  int n;
  FormType eps;
  int k;
  FormType zeta;
  FormType eta;
  LaurentPoly expected;
};

LaurentPoly q(int e) { return LaurentPoly::q(e); }

TEST(Gamma, WorkedValues) {
  const std::vector<GammaCase> cases{
      {0, 3, kPar, kEll, 5, kPar, 2, kHyp, kPar, P("1/2*q^4") * P("q^2 - 1")},
      {0, 3, kPar, kHyp, 5, kPar, 2, kHyp, kPar, P("1/2*q^2") * P("q^4 - q^2 + 2")},
      {0, 2, kHyp, {}, 4, kHyp, 2, kHyp, kHyp, P("1/2*q") * P("q^3 + q^2 - 3*q + 3")},
      {0, 2, kHyp, {}, 5, kPar, 3, kPar, kPar, q(2) * P("q^4 - q^3 + 1")},
      {1, 2, kPar, kHyp, 5, kPar, 3, kPar, kPar, q(5) * P("q - 1")},
      {1, 3, kHyp, {}, 6, kHyp, 3, kPar, kHyp, q(4) * P("q^5 - q^4 - 2*q^2 + 4*q - 2")},
      {2, 3, kPar, {}, 6, kHyp, 3, kPar, kHyp, q(5) * P("q - 1") * P("q^3 - 2")},
      {0, 3, kPar, {}, 6, kHyp, 2, kHyp, kPar, P("1/2*q^3") * P("q^5 - q^3 + q + 1")},
  };
  for (const auto& c : cases)
    EXPECT_EQ(gamma_general(c.i, c.j, c.delta, c.lambda, c.n, c.eps, c.k, c.zeta, c.eta), c.expected)
        << c.i << " " << c.j << " " << c.n << " " << c.k;
}

TEST(Gamma, SecantLineSpanningValueAtThree) {
  EXPECT_EQ(at(gamma_general(0, 2, kHyp, {}, 4, kHyp, 2, kHyp, kHyp), 3), 45);
  EXPECT_EQ(at(gamma_general(0, 3, kPar, kEll, 5, kPar, 2, kHyp, kPar), 3), 324);
}

TEST(Gamma, UnifiedAgreesWithSpecialised) {
  for (int n = 1; n <= 9; ++n)
    for (FormType eps : ambient_types(n))
      for (const auto& p : subspace_profiles(n, eps)) {
        if ((n - p.j) % 2 != 0) continue;
        for (FormType zeta : nondegenerate_types(n - p.j))
          EXPECT_EQ(gamma_complementary_unified(p.i, p.j, p.delta, p.lambda, n, eps, zeta),
                    gamma_complementary(p.i, p.j, p.delta, p.lambda, n, eps, zeta))
              << describe(p) << " zeta=" << sign(zeta);
      }
}

TEST(Gamma, ZeroComplementIsOne) {
  EXPECT_EQ(gamma_general(0, 2, kHyp, {}, 4, kHyp, 0, kHyp, kHyp), LaurentPoly(1));
  EXPECT_TRUE(gamma_general(0, 2, kHyp, {}, 4, kHyp, 0, kHyp, kEll).is_zero());
}

TEST(Rho, WorkedValues) {
  const Ratio plus = rho(2, kHyp, 4, kEll, 7, kPar, kHyp);
  const Ratio minus = rho(2, kHyp, 4, kEll, 7, kPar, kEll);
  const LaurentPoly den = P("q^4 + q^2 + 1");
  EXPECT_EQ(plus, Ratio(P("1/2") * P("q^2 + 1") * P("q - 1") * P("q - 1"), den));
  EXPECT_EQ(minus, Ratio(P("1/2*q^5 - q^3 + q^2 - 1/2*q + 1"), P("q") * den));
  EXPECT_EQ(plus + minus, Ratio(P("q") * den - P("q^4 + q^3 + q - 1"), P("q") * den));
}

TEST(Rho, SmallCaseAtThree) { EXPECT_EQ(rho(2, kHyp, 2, kHyp, 4, kHyp, kHyp).eval(3), R("5/8")); }

TEST(Rho, SymmetricInTheTwoSpaces) {
  for (int n = 2; n <= 8; ++n)
    for (FormType eps : ambient_types(n))
      for (int j = 1; j < n; ++j)
        for (int k = 1; j + k <= n; ++k)
          for (FormType delta : nondegenerate_types(j))
            for (FormType zeta : nondegenerate_types(k))
              for (FormType eta : nondegenerate_types(j + k)) {
                auto pair = [&](int first, FormType t1, int second, FormType t2) {
                  ProfileParams p;
                  p.n = n;
                  p.eps = eps;
                  p.j = first;
                  p.delta = t1;
                  p.k = second;
                  p.zeta = t2;
                  p.eta = eta;
                  return p;
                };
                const ProfileParams a = pair(j, delta, k, zeta);
                const ProfileParams b = pair(k, zeta, j, delta);
                if (!validate_for(Family::rho, a) || !validate_for(Family::rho, b)) continue;
                EXPECT_EQ(evaluate(Family::rho, a), evaluate(Family::rho, b)) << describe(a);
              }
}

TEST(Rho, ProportionsOverSpanTypesSumBelowOne) {
  for (int n = 3; n <= 8; ++n)
    for (FormType eps : ambient_types(n))
      for (int j = 1; j < n; ++j)
        for (int k = 1; j + k <= n; ++k)
          for (FormType delta : nondegenerate_types(j))
            for (FormType zeta : nondegenerate_types(k)) {
              ProfileParams p;
              p.n = n;
              p.eps = eps;
              p.j = j;
              p.delta = delta;
              p.k = k;
              p.zeta = zeta;
              BigRational total = 0;
              bool any = false;
              for (FormType eta : nondegenerate_types(j + k)) {
                p.eta = eta;
                if (!validate_for(Family::rho, p)) continue;
                any = true;
                total += evaluate(Family::rho, p).eval(5);
              }
              if (any) {
                EXPECT_LE(total, 1) << describe(p);
              }
            }
}

}  // namespace
}  // namespace orthocount
