#include <gtest/gtest.h>

#include "orthocount/verify.hpp"

namespace orthocount::verify {
namespace {

bool same(const std::vector<SweepReport>& a, const std::vector<SweepReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t].profile != b[t].profile || a[t].oracle_value != b[t].oracle_value || a[t].status != b[t].status ||
        a[t].q != b[t].q)
      return false;
  return true;
}

TEST(Sweep, SmallSweepMatches) {
  SweepOptions o;
  o.n_max = 4;
  for (const auto& r : sweep_all(o))
    EXPECT_EQ(r.status, Status::match) << family_name(r.family) << " " << describe(r.profile) << " " << r.reason;
}

TEST(Sweep, ReportsDoNotDependOnJobs) {
  SweepOptions one;
  one.n_max = 4;
  SweepOptions many = one;
  many.jobs = 4;
  for (Family f : {Family::alpha, Family::gamma})
    EXPECT_TRUE(same(sweep_formula_vs_oracle(f, one), sweep_formula_vs_oracle(f, many))) << family_name(f);
}

TEST(Sweep, BudgetSkips) {
  SweepOptions o;
  o.n_max = 3;
  o.max_vectors = 9;
  bool any_skipped = false;
  for (const auto& r : sweep_formula_vs_oracle(Family::alpha, o)) {
    if (r.profile.n == 3) {
      EXPECT_EQ(r.status, Status::skipped);
      any_skipped = true;
    } else {
      EXPECT_EQ(r.status, Status::match);
    }
  }
  EXPECT_TRUE(any_skipped);
}

TEST(Sweep, RejectsBadPrimes) {
  SweepOptions o;
  o.primes = {4};
  EXPECT_THROW(sweep_all(o), std::invalid_argument);
  try {
    check_primes({3, 9});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "9 is not an odd prime");
  }
}

TEST(Sweep, ProfilesAreValid) {
  for (Family f : {Family::alpha, Family::beta, Family::beta_nu, Family::gamma, Family::rho})
    for (const auto& p : sweep_profiles(f, 5, kPar)) EXPECT_TRUE(validate_for(f, p)) << describe(p);
  EXPECT_FALSE(sweep_profiles(Family::beta_nu, 6, kHyp).empty());
}

TEST(Identities, NamesRoundTrip) {
  EXPECT_EQ(all_identities().size(), 12u);
  for (IdentityId id : all_identities()) EXPECT_EQ(identity_from_name(identity_name(id)), id);
  EXPECT_EQ(std::string(identity_name(IdentityId::appendixB_i_odd)), "appendixB_i_odd");
  EXPECT_FALSE(identity_from_name("rec9"));
}

TEST(Identities, SuiteHoldsUpToEight) {
  const auto reports = run_identity_suite(8);
  for (IdentityId id : all_identities()) {
    std::size_t seen = 0;
    for (const auto& r : reports)
      if (r.id == id) {
        ++seen;
        EXPECT_EQ(r.status, Status::match) << identity_name(id) << " " << r.reason;
      }
    EXPECT_GT(seen, 0u) << identity_name(id);
  }
}

TEST(Identities, OrderDoesNotDependOnJobs) {
  const auto a = run_identity_suite({IdentityId::rec1, IdentityId::pascal}, 6, 1);
  const auto b = run_identity_suite({IdentityId::rec1, IdentityId::pascal}, 6, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    EXPECT_EQ(a[t].params, b[t].params);
    EXPECT_EQ(a[t].lhs, b[t].lhs);
  }
}

TEST(Identities, SingleInstance) {
  const auto r = check_identity(IdentityId::pascal, {{"b", 5}, {"a", 2}, {"variant", 2}});
  EXPECT_EQ(r.status, Status::match);
  EXPECT_EQ(r.lhs, r.rhs);
}

}  // namespace
}  // namespace orthocount::verify
