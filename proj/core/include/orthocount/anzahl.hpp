#pragma once

#include <optional>

#include "orthocount/exactnum.hpp"
#include "orthocount/profile.hpp"

// Closed-form counts for subspaces relative to a non-degenerate quadratic form
// on F_q^n, q odd, as Laurent polynomials in q.
//
// Conventions shared by every evaluator:
//  * a j-space pi is "i-singular of type delta" when the restricted form has an
//    i-dimensional radical and the non-degenerate quotient has type delta;
//  * lambda (perp type) is the type of pi^perp, needed only when n(j-i) is odd;
//  * a type whose parity is incompatible with its dimension yields the count 0,
//    other range violations throw InvalidParams.
namespace orthocount {

using OptType = std::optional<FormType>;

/// Number of i-singular j-spaces of type delta in the (n, eps) space. When
/// n(j-i) is odd this is the total over both perp types.
LaurentPoly alpha(int i, int j, FormType delta, int n, FormType eps);

/// Number of i-singular j-spaces (type 0) with perp type lambda; n(j-i) odd.
LaurentPoly alpha_perp(int i, int j, FormType lambda, int n);

/// Simplified hyperplane counts: alpha for (i, n-1) with i = i_mode in {0, 1}.
LaurentPoly alpha_hyperplane(int i_mode, FormType delta, int n, FormType eps);

/// Non-singular k-spaces of type zeta through a fixed i-singular j-space of
/// type delta (with perp type lambda when n(j-i) is odd).
LaurentPoly beta(int i, int j, FormType delta, OptType lambda, int n, FormType eps, int k, FormType zeta);

/// Like beta, restricted to the k-spaces sigma in which pi has perp type nu;
/// needs j - i and k odd.
LaurentPoly beta_nu(int i, int j, OptType lambda, int n, FormType eps, int k, FormType nu);

/// Simplified forms of beta for k = n - 1 (i + j <= n - 1).
LaurentPoly beta_hyperplane(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta);
LaurentPoly beta_nu_hyperplane(int i, int j, int n, FormType nu);

/// Non-singular (n-j)-spaces of type zeta meeting pi trivially (so spanning
/// the whole space); n - j even.
LaurentPoly gamma_complementary(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta);

/// The single closed form covering all four parity cases of
/// gamma_complementary; used to cross-check the specialised forms.
LaurentPoly gamma_complementary_unified(int i, int j, FormType delta, OptType lambda, int n, FormType eps,
                                        FormType zeta);

/// n odd, j even: complements are odd-dimensional. With mu the count is
/// restricted to complements of perp type mu, otherwise it is the total.
LaurentPoly gamma_n_odd_j_even(int i, int j, FormType delta, OptType lambda, int n, OptType mu);

/// n even, j odd.
LaurentPoly gamma_n_even_j_odd(int i, int j, FormType delta, int n, FormType eps);

/// Complements of any parity: dispatches to the three forms above. Types
/// incompatible with n - j give 0.
LaurentPoly gamma_spanning(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta);

/// Any k <= n - j: non-singular k-spaces sigma of type zeta with sigma and pi
/// meeting trivially and <pi, sigma> non-singular of type eta.
LaurentPoly gamma_general(int i, int j, FormType delta, OptType lambda, int n, FormType eps, int k, FormType zeta,
                          FormType eta);

/// Routes a validated gamma profile to the matching theorem.
LaurentPoly gamma(const ProfileParams& p);

/// Proportion of pairs (pi, sigma) of non-singular j- and k-spaces of types
/// delta and zeta whose span is non-singular of type eta.
Ratio rho(int j, FormType delta, int k, FormType zeta, int n, FormType eps, FormType eta);

/// As rho with n, j odd and the j-space restricted to perp type lambda.
Ratio rho_perp_restricted(int j, FormType lambda, int k, FormType zeta, int n, FormType eta);

/// Evaluates any validated query; alpha/beta/gamma values are Ratios with
/// denominator 1.
Ratio evaluate(Family family, const ProfileParams& p);

}  // namespace orthocount
