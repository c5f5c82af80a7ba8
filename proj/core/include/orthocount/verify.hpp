#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthocount/exactnum.hpp"
#include "orthocount/profile.hpp"

// Checks of the closed forms: against brute-force counts over small prime
// fields, and as exact polynomial identities between the formulas.
namespace orthocount::verify {

enum class Status { match, mismatch, skipped };

const char* status_name(Status s);

struct SweepReport {
  Family family = Family::alpha;
  ProfileParams profile;
  int q = 0;
  std::optional<BigRational> formula_value;
  std::optional<BigRational> oracle_value;
  Status status = Status::skipped;
  /// Why the profile was skipped, or what disagreed.
  std::string reason;
};

struct SweepOptions {
  int n_max = 5;
  std::vector<int> primes{3};
  int jobs = 1;
  /// Enumeration is attempted only while p^n stays within this bound.
  long long max_vectors = 1000;
  /// Every pi is used as a representative up to this n ...
  int all_reps_up_to = 4;
  /// ... and beyond it this many, sampled per class.
  std::size_t sampled_reps = 5;
  /// Sample size once n exceeds n_sample_shrink.
  int n_sample_shrink = 5;
  std::size_t sampled_reps_large = 3;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument for a prime list entry that is not an odd
/// prime below 64.
void check_primes(const std::vector<int>& primes);

/// Every profile of the family with n <= n_max, evaluated by formula and by
/// enumeration at each prime. Orders: prime, n, eps, then profile order.
std::vector<SweepReport> sweep_formula_vs_oracle(Family family, const SweepOptions& options);

/// All families, alpha first.
std::vector<SweepReport> sweep_all(const SweepOptions& options);

/// The profiles a sweep visits for one ambient space, in report order.
std::vector<ProfileParams> sweep_profiles(Family family, int n, FormType eps);

enum class IdentityId {
  rec1,
  rec2,
  rec3,
  rec4,
  double_count_beta,
  halved_beta,
  beta_nu_decomp,
  appendixB_i_odd,
  appendixB_i_even,
  pascal,
  hyperplane_specializations,
  gamma_general_factorization,
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
std::vector<IdentityId> all_identities();

using IdentityParams = std::vector<std::pair<std::string, int>>;

struct IdentityReport {
  IdentityId id = IdentityId::pascal;
  IdentityParams params;
  LaurentPoly lhs;
  LaurentPoly rhs;
  Status status = Status::match;
  std::string reason;
};

/// One instance of a recursion lemma. params name n, j, i and the types the
/// lemma quantifies over (delta, eps, zeta, lambda as needed). Throws
/// InvalidParams when the lemma does not apply.
IdentityReport check_recursion_identity(IdentityId id, const IdentityParams& params);

/// One instance of any other identity; same conventions.
IdentityReport check_structural_identity(IdentityId id, const IdentityParams& params);

/// Dispatches to the two functions above.
IdentityReport check_identity(IdentityId id, const IdentityParams& params);

/// Every applicable parameter tuple of the identity with n <= n_max (b <=
/// n_max + 2 for pascal).
std::vector<IdentityParams> identity_instances(IdentityId id, int n_max);

/// All identities over all instances; report order does not depend on jobs.
std::vector<IdentityReport> run_identity_suite(int n_max, int jobs = 1);
std::vector<IdentityReport> run_identity_suite(const std::vector<IdentityId>& ids, int n_max, int jobs = 1);

}  // namespace orthocount::verify
