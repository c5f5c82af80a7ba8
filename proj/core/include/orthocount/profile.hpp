#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthocount {

/// Type of a non-degenerate form; also used for perp types, which are +-1.
enum class FormType : int { elliptic = -1, parabolic = 0, hyperbolic = 1 };

inline constexpr FormType kEll = FormType::elliptic;
inline constexpr FormType kPar = FormType::parabolic;
inline constexpr FormType kHyp = FormType::hyperbolic;

constexpr int sign(FormType t) { return static_cast<int>(t); }
FormType form_type(int value);  // throws std::invalid_argument outside {-1, 0, 1}

/// Identifies one counting query. Field names follow the usual subscript
/// order alpha_{(i,j,delta,lambda),(n,eps)}, beta_{...,(k,zeta)}, gamma_{...,(k,zeta,mu),eta}.
struct ProfileParams {
  int n = 0;
  FormType eps = kHyp;
  int i = 0;
  int j = 0;
  FormType delta = kHyp;
  std::optional<FormType> lambda;
  std::optional<int> k;
  std::optional<FormType> zeta;
  std::optional<FormType> mu;
  std::optional<FormType> eta;
  /// Perp type of pi inside sigma, only meaningful for the beta_nu family.
  std::optional<FormType> nu;

  friend bool operator==(const ProfileParams&, const ProfileParams&) = default;
};

std::string describe(const ProfileParams& p);

enum class Family { alpha, beta, beta_nu, gamma, rho };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

enum class InvalidReason {
  none,
  range_violation,
  parity_violation,
  forbidden_perp_type,
  missing_perp_type,
  missing_parameter,
  unexpected_parameter,
  empty_profile,
};

const char* reason_name(InvalidReason r);

struct ValidityVerdict {
  InvalidReason reason = InvalidReason::none;
  std::string message;

  bool valid() const { return reason == InvalidReason::none; }
  explicit operator bool() const { return valid(); }

  static ValidityVerdict ok() { return {}; }
  static ValidityVerdict fail(InvalidReason r, std::string msg) { return {r, std::move(msg)}; }
};

struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(ValidityVerdict v)
      : std::invalid_argument(v.message), verdict(std::move(v)) {}
  ValidityVerdict verdict;
};

/// Checks the profile invariants that do not depend on which quantity is
/// asked for: dimensions, type parities, and when a perp type is required.
ValidityVerdict validate(const ProfileParams& p);

/// validate() plus the extra fields and ranges each family needs. For beta,
/// beta_nu, gamma and rho the subspace pi must exist (alpha may count zero).
ValidityVerdict validate_for(Family family, const ProfileParams& p);

/// Throws InvalidParams when validate_for fails.
void require_valid(Family family, const ProfileParams& p);

/// Whether an i-singular j-space of type delta exists in the (n, eps) space
/// (assuming the parities already hold).
bool profile_exists(int i, int j, FormType delta, int n, FormType eps);

/// All (i, delta, lambda) profiles of j-spaces, i.e. everything validate()
/// accepts for fixed (n, eps, j), in increasing (i, delta, lambda) order.
std::vector<ProfileParams> subspace_profiles(int n, FormType eps, int j);

/// subspace_profiles over every j in [0, n].
std::vector<ProfileParams> subspace_profiles(int n, FormType eps);

/// Valid ambient types for dimension n.
std::vector<FormType> ambient_types(int n);

/// Valid types of a non-degenerate subspace of dimension k.
std::vector<FormType> nondegenerate_types(int k);

}  // namespace orthocount
