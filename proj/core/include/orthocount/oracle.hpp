#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orthocount/exactnum.hpp"
#include "orthocount/geometry.hpp"

// Brute-force counterparts of the closed forms, by exhaustive enumeration over
// a prime field. Every count is for one fixed form; the formulas claim the
// answer only depends on the profile.
namespace orthocount::oracle {

using geometry::Classification;
using geometry::GramForm;
using geometry::Subspace;
using OptType = std::optional<FormType>;

/// Number of j-subspaces in each class.
std::map<Classification, long long> tally_subspaces(const GramForm& form, int j, int jobs = 1);

/// i-singular j-spaces of type delta; with lambda, only those of that perp
/// type, otherwise all of them.
long long oracle_alpha(const GramForm& form, int i, int j, FormType delta, OptType lambda = std::nullopt,
                       int jobs = 1);

struct ExtensionKey {
  int k = 0;
  FormType zeta = kHyp;
  /// Perp type of pi inside sigma; recorded when k(j - i) is odd.
  OptType nu;
  friend auto operator<=>(const ExtensionKey&, const ExtensionKey&) = default;
};

/// Non-singular sigma containing pi, for every k, keyed by (k, type, nu).
std::map<ExtensionKey, long long> tally_extensions(const GramForm& form, const Subspace& pi);

long long oracle_beta(const GramForm& form, const Subspace& pi, int k, FormType zeta, OptType nu = std::nullopt);

struct ComplementKey {
  int k = 0;
  FormType zeta = kHyp;
  /// Perp type of sigma; recorded when nk is odd.
  OptType mu;
  FormType eta = kHyp;
  friend auto operator<=>(const ComplementKey&, const ComplementKey&) = default;
};

/// Non-singular k-spaces sigma, k in [k_lo, k_hi], with sigma and pi meeting
/// trivially and <pi, sigma> non-singular.
std::map<ComplementKey, long long> tally_complements(const GramForm& form, const Subspace& pi, int k_lo, int k_hi,
                                                      int jobs = 1);

long long oracle_gamma(const GramForm& form, const Subspace& pi, int k, FormType zeta, OptType mu, FormType eta,
                       int jobs = 1);

/// Among pairs of non-singular j- and k-spaces of types delta and zeta (the
/// j-space also of perp type lambda when given), the fraction whose span is
/// a non-singular (j + k)-space of type eta. One pi per orbit, weighted by
/// the orbit size.
BigRational oracle_rho(const GramForm& form, int j, FormType delta, int k, FormType zeta, FormType eta,
                       OptType lambda = std::nullopt, int jobs = 1);

/// Up to per_class j-subspaces of each class, chosen uniformly with a seeded
/// generator; per_class = 0 keeps every subspace. Lists are in enumeration order.
std::map<Classification, std::vector<Subspace>> representatives(const GramForm& form, int j, std::size_t per_class,
                                                                 std::uint64_t seed = 1);

}  // namespace orthocount::oracle
