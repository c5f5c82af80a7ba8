#include <gtest/gtest.h>

#include "orthocount/anzahl.hpp"
#include "orthocount/oracle.hpp"
#include "support.hpp"

namespace orthocount::oracle {
namespace {

using orthocount::testing::at;
using orthocount::testing::big;
using orthocount::testing::R;
using geometry::PrimeField;

const PrimeField F3(3);

// First subspace of the given class, in enumeration order.
Subspace first_of(const GramForm& form, int j, Classification c) {
  const auto reps = representatives(form, j, 0);
  return reps.at(c).front();
}

TEST(OracleAlpha, WorkedValues) {
  EXPECT_EQ(oracle_alpha(GramForm::standard(F3, 3, kPar), 1, 1, kHyp), 4);
  EXPECT_EQ(oracle_alpha(GramForm::standard(F3, 3, kPar), 0, 2, kHyp), 6);
  EXPECT_EQ(oracle_alpha(GramForm::standard(F3, 4, kHyp), 0, 2, kHyp), 72);
  EXPECT_EQ(big(oracle_alpha(GramForm::standard(F3, 5, kPar), 0, 3, kPar, kEll)), at(alpha_perp(0, 3, kEll, 5), 3));
}

TEST(OracleAlpha, JobsDoNotChangeTallies) {
  const GramForm form = GramForm::standard(F3, 5, kPar);
  EXPECT_EQ(tally_subspaces(form, 2, 1), tally_subspaces(form, 2, 3));
}

TEST(OracleBeta, SecantLine) {
  const GramForm form = GramForm::standard(F3, 4, kHyp);
  const auto secants = representatives(form, 2, 0).at({0, kHyp, std::nullopt});
  ASSERT_GE(secants.size(), 2u);
  EXPECT_EQ(oracle_beta(form, secants[0], 3, kPar), 2);
  EXPECT_EQ(oracle_beta(form, secants[1], 3, kPar), 2);
  EXPECT_EQ(oracle_beta(form, secants.back(), 3, kPar), 2);
}

TEST(OracleBeta, ConicPlaneWithPerpType) {
  const GramForm form = GramForm::standard(F3, 6, kHyp);
  const Subspace pi = first_of(form, 3, {0, kPar, std::nullopt});
  EXPECT_EQ(oracle_beta(form, pi, 5, kPar, kHyp), 6);
  EXPECT_EQ(oracle_beta(form, pi, 5, kPar, kEll), 3);
}

TEST(OracleGamma, WorkedValues) {
  const GramForm five = GramForm::standard(F3, 5, kPar);
  const Subspace conic = first_of(five, 3, {0, kPar, kEll});
  EXPECT_EQ(oracle_gamma(five, conic, 2, kHyp, std::nullopt, kPar), 324);
  const Subspace conic_plus = first_of(five, 3, {0, kPar, kHyp});
  EXPECT_EQ(oracle_gamma(five, conic_plus, 2, kHyp, std::nullopt, kPar), 333);

  const GramForm four = GramForm::standard(F3, 4, kHyp);
  const Subspace secant = first_of(four, 2, {0, kHyp, std::nullopt});
  EXPECT_EQ(oracle_gamma(four, secant, 2, kHyp, std::nullopt, kHyp), 45);
  EXPECT_EQ(oracle_gamma(four, secant, 0, kHyp, std::nullopt, kHyp), 1);
  EXPECT_EQ(oracle_gamma(four, secant, 2, kHyp, std::nullopt, kHyp, 3), 45);
}

TEST(OracleRho, SmallCase) {
  const GramForm four = GramForm::standard(F3, 4, kHyp);
  const BigRational value = oracle_rho(four, 2, kHyp, 2, kHyp, kHyp);
  EXPECT_EQ(value, R("5/8"));
  EXPECT_EQ(value, rho(2, kHyp, 2, kHyp, 4, kHyp, kHyp).eval(3));
  EXPECT_EQ(oracle_rho(four, 2, kHyp, 2, kEll, kEll), oracle_rho(four, 2, kEll, 2, kHyp, kEll));
  EXPECT_EQ(oracle_rho(four, 2, kHyp, 0, kHyp, kHyp), 1);
}

TEST(Representatives, SampledSubsetIsDeterministic) {
  const GramForm form = GramForm::standard(F3, 5, kPar);
  const auto all = representatives(form, 2, 0);
  const auto a = representatives(form, 2, 5, 1);
  const auto b = representatives(form, 2, 5, 1);
  ASSERT_EQ(a.size(), all.size());
  for (const auto& [c, list] : a) {
    EXPECT_EQ(list.size(), std::min<std::size_t>(5, all.at(c).size()));
    EXPECT_EQ(list, b.at(c));
  }
}

}  // namespace
}  // namespace orthocount::oracle
