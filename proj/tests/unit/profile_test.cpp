#include <gtest/gtest.h>

#include "orthocount/profile.hpp"

namespace orthocount {
namespace {

ProfileParams subspace(int n, FormType eps, int i, int j, FormType delta, std::optional<FormType> lambda = {}) {
  ProfileParams p;
  p.n = n;
  p.eps = eps;
  p.i = i;
  p.j = j;
  p.delta = delta;
  p.lambda = lambda;
  return p;
}

TEST(FormTypes, Conversion) {
  EXPECT_EQ(form_type(-1), kEll);
  EXPECT_EQ(form_type(0), kPar);
  EXPECT_EQ(sign(kHyp), 1);
  EXPECT_THROW(form_type(2), std::invalid_argument);
  EXPECT_EQ(ambient_types(3), std::vector<FormType>{kPar});
  EXPECT_EQ(ambient_types(4), (std::vector<FormType>{kEll, kHyp}));
  EXPECT_EQ(nondegenerate_types(0), std::vector<FormType>{kHyp});
}

TEST(Validate, AcceptsWellFormedProfiles) {
  EXPECT_TRUE(validate(subspace(3, kPar, 1, 1, kHyp)));
  EXPECT_TRUE(validate(subspace(3, kPar, 0, 1, kPar, kEll)));
  EXPECT_TRUE(validate(subspace(4, kHyp, 0, 2, kHyp)));
}

TEST(Validate, Reasons) {
  EXPECT_EQ(validate(subspace(4, kPar, 0, 2, kHyp)).reason, InvalidReason::parity_violation);
  EXPECT_EQ(validate(subspace(4, kHyp, 0, 1, kHyp)).reason, InvalidReason::parity_violation);
  EXPECT_EQ(validate(subspace(4, kHyp, 3, 2, kHyp)).reason, InvalidReason::range_violation);
  EXPECT_EQ(validate(subspace(4, kHyp, 0, 5, kPar)).reason, InvalidReason::range_violation);
  EXPECT_EQ(validate(subspace(4, kHyp, 0, 1, kPar, kEll)).reason, InvalidReason::forbidden_perp_type);
}

TEST(Validate, FamilySpecificFields) {
  ProfileParams p = subspace(4, kHyp, 0, 2, kHyp);
  EXPECT_EQ(validate_for(Family::beta, p).reason, InvalidReason::missing_parameter);
  p.k = 3;
  p.zeta = kPar;
  EXPECT_TRUE(validate_for(Family::beta, p));
  p.nu = kHyp;
  EXPECT_FALSE(validate_for(Family::beta, p));
  EXPECT_THROW(require_valid(Family::beta, p), InvalidParams);
}

TEST(Existence, WittIndexBounds) {
  EXPECT_TRUE(profile_exists(2, 2, kHyp, 4, kHyp));
  EXPECT_FALSE(profile_exists(2, 2, kHyp, 4, kEll));
  EXPECT_TRUE(profile_exists(1, 1, kHyp, 3, kPar));
  EXPECT_FALSE(profile_exists(1, 1, kHyp, 2, kEll));
  EXPECT_TRUE(profile_exists(0, 2, kEll, 3, kPar));
}

TEST(SubspaceProfiles, OrderedAndValid) {
  auto all = subspace_profiles(3, kPar);
  ASSERT_FALSE(all.empty());
  for (const auto& p : all) EXPECT_TRUE(validate(p)) << describe(p);
  EXPECT_EQ(all.front().j, 0);
  EXPECT_EQ(all.back().j, 3);
}

TEST(Names, FamilyRoundTrip) {
  for (Family f : {Family::alpha, Family::beta, Family::beta_nu, Family::gamma, Family::rho})
    EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_FALSE(family_from_name("delta"));
  EXPECT_EQ(describe(subspace(3, kPar, 0, 1, kPar, kEll)), "(i=0, j=1, delta=0, lambda=-1), (n=3, eps=0)");
}

}  // namespace
}  // namespace orthocount
