#include <gtest/gtest.h>

#include "orthocount/anzahl.hpp"
#include "orthocount/qseries.hpp"
#include "support.hpp"

namespace orthocount {
namespace {

using testing::at;
using testing::P;

TEST(Alpha, WorkedValues) {
  EXPECT_EQ(alpha(1, 1, kHyp, 3, kPar), P("q + 1"));
  EXPECT_EQ(alpha(0, 2, kHyp, 3, kPar), P("1/2*q^2 + 1/2*q"));
  EXPECT_EQ(alpha_perp(0, 1, kEll, 3), P("1/2*q^2 - 1/2*q"));
  EXPECT_EQ(alpha(0, 2, kHyp, 4, kHyp), P("1/2*q^2") * P("q + 1") * P("q + 1"));
}

TEST(Alpha, PerpTypesSplitTheTotal) {
  for (int n : {3, 5, 7})
    for (int j = 1; j < n; j += 2)
      EXPECT_EQ(alpha_perp(0, j, kEll, n) + alpha_perp(0, j, kHyp, n), alpha(0, j, kPar, n, kPar)) << n << " " << j;
}

TEST(Alpha, SumsToGaussBinomial) {
  for (int n = 1; n <= 8; ++n)
    for (FormType eps : ambient_types(n))
      for (int j = 0; j <= n; ++j) {
        LaurentPoly total;
        for (const auto& p : subspace_profiles(n, eps, j))
          total += p.lambda ? alpha_perp(p.i, p.j, *p.lambda, n) : alpha(p.i, p.j, p.delta, n, eps);
        EXPECT_EQ(total, gauss_binomial(n, j)) << n << " " << sign(eps) << " " << j;
      }
}

TEST(Alpha, ImpossibleProfileCountsZero) {
  EXPECT_TRUE(alpha(2, 2, kHyp, 4, kEll).is_zero());
  EXPECT_TRUE(alpha(0, 2, kHyp, 4, kPar).is_zero());
}

TEST(Beta, WorkedValues) {
  EXPECT_EQ(beta(0, 2, kHyp, std::nullopt, 4, kHyp, 3, kPar), P("q - 1"));
  const LaurentPoly nu_plus = beta_nu(0, 3, std::nullopt, 6, kHyp, 5, kHyp);
  const LaurentPoly nu_minus = beta_nu(0, 3, std::nullopt, 6, kHyp, 5, kEll);
  EXPECT_EQ(nu_plus, P("1/2*q^2 + 1/2*q"));
  EXPECT_EQ(nu_minus, P("1/2*q^2 - 1/2*q"));
  EXPECT_EQ(nu_plus + nu_minus, beta(0, 3, kPar, std::nullopt, 6, kHyp, 5, kPar));
  EXPECT_EQ(at(nu_plus, 3), 6);
}

TEST(Beta, WholeSpaceAndSelf) {
  EXPECT_EQ(beta(0, 2, kHyp, std::nullopt, 4, kHyp, 4, kHyp), LaurentPoly(1));
  EXPECT_TRUE(beta(0, 2, kHyp, std::nullopt, 4, kHyp, 4, kEll).is_zero());
  EXPECT_EQ(beta(0, 2, kHyp, std::nullopt, 4, kHyp, 2, kHyp), LaurentPoly(1));
}

TEST(Beta, HyperplaneFormsAgree) {
  for (int n = 2; n <= 7; ++n)
    for (FormType eps : ambient_types(n))
      for (const auto& p : subspace_profiles(n, eps))
        for (FormType zeta : nondegenerate_types(n - 1)) {
          if (p.i + p.j > n - 1) continue;
          EXPECT_EQ(beta_hyperplane(p.i, p.j, p.delta, p.lambda, n, eps, zeta),
                    beta(p.i, p.j, p.delta, p.lambda, n, eps, n - 1, zeta))
              << describe(p) << " zeta=" << sign(zeta);
        }
}

TEST(Evaluate, RejectsInvalidProfiles) {
  ProfileParams p;
  p.n = 4;
  p.eps = kHyp;
  p.j = 1;
  p.delta = kHyp;
  EXPECT_THROW(evaluate(Family::alpha, p), InvalidParams);
  p.delta = kPar;
  EXPECT_EQ(evaluate(Family::alpha, p), Ratio(alpha(0, 1, kPar, 4, kHyp)));
}

}  // namespace
}  // namespace orthocount
