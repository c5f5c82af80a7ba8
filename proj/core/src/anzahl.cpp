#include "orthocount/anzahl.hpp"

#include "orthocount/qseries.hpp"
#include "poly_terms.hpp"

namespace orthocount {

using detail::half;
using detail::invalid;
using detail::odd;
using detail::sq;

namespace {

const BigRational kHalf(1, 2);

// The type parities of the counting theorems: a mismatch means no such space.
bool types_compatible(int i, int j, int d, int n, int e) {
  if (!odd(j - i - d) || !odd(n - e)) return false;
  return i != j || d == 1;
}

FormType require_pm(OptType t, const char* name) {
  if (!t) invalid(InvalidReason::missing_perp_type, std::string("perp type ") + name + " required");
  if (*t == kPar) invalid(InvalidReason::forbidden_perp_type, std::string("perp type ") + name + " must be -1 or 1");
  return *t;
}

// General beta theorem, valid when n(j-i) is even or n = i + j.
LaurentPoly beta_closed_form(int i, int j, int d, int n, int e, int k, int z) {
  const int d2 = d * d;
  const int e2 = e * e;
  const int z2 = z * z;
  const int e_twice = (n - k) * (k - j + i) + n * (d2 - z2) * (1 - e2) + (i + j) * (1 - d2) * (z2 - e2) +
                      k * (1 - z2) * (e2 - d2) - e2 * d2 + z2 * (d2 + e2 - 1);
  const int a = n - k + (z2 - 1) * (e2 - 1) + 1;
  const int b = n - i - j + (d2 - 1) * (e2 - 1) - 1;
  const int c = k - i - j + (d2 - 1) * (z2 - 1) - 1;
  LaurentPoly num = psi_plus(half(a - e * z), half(b - e * d)) * psi_minus(half(a + e * z), half(b + e * d));
  LaurentPoly den = psi_plus(1 - z2, half(c - z * d)) * psi_minus(1, half(c + z * d));
  return div_exact(num, den).shifted(half(e_twice));
}

// Non-singular k-spaces (n, k odd) through an i-singular (k-i)-space of perp
// type mu. Such a sigma has rad(pi) as the perp of pi inside sigma, so
// pi^perp = rad(pi) + sigma^perp and pi has perp type mu exactly when sigma
// does; double counting the pairs gives the quotient below.
LaurentPoly beta_through_maximal(int i, int k, FormType mu, int n) {
  if (k == n) return mu == kHyp ? LaurentPoly(1) : LaurentPoly();
  return div_exact(alpha_perp(0, k, mu, n) * alpha(i, k - i, kPar, k, kPar), alpha_perp(i, k - i, mu, n));
}

}  // namespace

LaurentPoly alpha(int i, int j, FormType delta, int n, FormType eps) {
  detail::check_dims(i, j, n);
  const int d = sign(delta);
  const int e = sign(eps);
  if (!types_compatible(i, j, d, n, e) || !profile_exists(i, j, delta, n, eps)) return {};
  const int d2 = d * d;
  const int e2 = e * e;
  const int e_twice = (n - j - i) * ((j - i) + (1 - d2) * (1 - e2)) - (1 - d2) * e2;
  const int base = n - i - j + (d2 - 1) * (e2 - 1) + 1;
  LaurentPoly num = psi_plus(half(base - e * d), half(n - 1 - e)) * psi_minus(half(base + e * d), half(n - 1 + e));
  LaurentPoly den = psi_plus(1 - d2, half(j - i - d - 1)) * psi_minus(1, half(j - i + d - 1)) * psi_minus(1, i);
  return div_exact(num, den).shifted(half(e_twice));
}

LaurentPoly alpha_perp(int i, int j, FormType lambda, int n) {
  detail::check_dims(i, j, n);
  if (!(odd(n) && odd(j - i))) invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
  const int l = sign(require_pm(lambda, "lambda"));
  if (n == i + j) return l == 1 ? alpha(i, j, kPar, n, kPar) : LaurentPoly();
  LaurentPoly num = psi_plus(half(j - i + 1), half(n - 1)) * psi_minus(half(j - i + 1), half(n - 1));
  LaurentPoly den = psi_plus(0, half(n - j - i - l - 1)) * psi_minus(1, half(n - j - i + l - 1)) * psi_minus(1, i);
  return div_exact(num, den).shifted(half((j - i) * (n - j - i)));
}

LaurentPoly alpha_hyperplane(int i_mode, FormType delta, int n, FormType eps) {
  if (i_mode != 0 && i_mode != 1) invalid(InvalidReason::range_violation, "i_mode must be 0 or 1");
  detail::check_dims(i_mode, n - 1, n);
  const int d = sign(delta);
  const int e = sign(eps);
  if (!types_compatible(i_mode, n - 1, d, n, e)) return {};
  LaurentPoly r;
  if (i_mode == 0) {
    if (d != 0) {
      const int h = half(n - 1);
      detail::add_term(r, kHalf, 4 * h, LaurentPoly::q(h) + LaurentPoly(d));
    } else {
      const int h = half(n);
      detail::add_term(r, 1, 4 * (h - 1), LaurentPoly::q(h) - LaurentPoly(e));
    }
    return r;
  }
  if (d != e) return r;
  r = div_exact(LaurentPoly::q(n - 1) - LaurentPoly(1), LaurentPoly::q(1) - LaurentPoly(1));
  if (e != 0) detail::add_term(r, e, 2 * n - 4, 1);
  return r;
}

LaurentPoly beta(int i, int j, FormType delta, OptType lambda, int n, FormType eps, int k, FormType zeta) {
  detail::check_dims(i, j, n);
  if (k < i + j || k > n) invalid(InvalidReason::range_violation, "need i + j <= k <= n");
  const int d = sign(delta);
  const int e = sign(eps);
  const int z = sign(zeta);
  if (!types_compatible(i, j, d, n, e) || !odd(k - z)) return {};
  if (!profile_exists(i, j, delta, n, eps)) invalid(InvalidReason::empty_profile, "no such subspace pi");
  // sigma must itself contain a space of pi's profile.
  if (!profile_exists(i, j, delta, k, zeta)) return {};

  if (odd(n) && odd(j - i) && n != i + j) {
    const FormType l = require_pm(lambda, "lambda");
    if (!odd(k)) {
      // Exactly half of the pairs (pi, sigma) have pi of each perp type.
      LaurentPoly pairs = alpha(0, k, zeta, n, kPar) * alpha(i, j, kPar, k, zeta);
      return div_exact(pairs, alpha_perp(i, j, l, n)) * kHalf;
    }
    return beta_nu(i, j, l, n, eps, k, kHyp) + beta_nu(i, j, l, n, eps, k, kEll);
  }
  if (lambda && !(n == i + j && *lambda == kHyp))
    invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
  return beta_closed_form(i, j, d, n, e, k, z);
}

LaurentPoly beta_nu(int i, int j, OptType lambda, int n, FormType eps, int k, FormType nu) {
  detail::check_dims(i, j, n);
  if (k < i + j || k > n) invalid(InvalidReason::range_violation, "need i + j <= k <= n");
  if (!(odd(j - i) && odd(k))) invalid(InvalidReason::parity_violation, "beta_nu needs j - i and k odd");
  require_pm(nu, "nu");
  if (!odd(n - sign(eps))) return {};

  if (!odd(n)) {
    if (lambda) invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
    return div_exact(alpha(0, k, kPar, n, eps) * alpha_perp(i, j, nu, k), alpha(i, j, kPar, n, eps));
  }
  const FormType l = require_pm(lambda, "lambda");
  if (n == i + j) {
    if (l != kHyp) invalid(InvalidReason::forbidden_perp_type, "perp type must be 1 when n = i + j");
    return nu == kHyp ? LaurentPoly(1) : LaurentPoly();
  }
  const FormType inner = sign(l) * sign(nu) == 1 ? kHyp : kEll;
  return alpha(0, k - j - i, nu, n - j - i, l) * beta_through_maximal(i, k, inner, n);
}

LaurentPoly beta_hyperplane(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta) {
  detail::check_dims(i, j, n);
  if (i + j > n - 1) invalid(InvalidReason::range_violation, "need i + j <= n - 1");
  const int d = sign(delta);
  const int e = sign(eps);
  const int z = sign(zeta);
  if (!types_compatible(i, j, d, n, e) || !odd(n - 1 - z)) return {};
  if (!profile_exists(i, j, delta, n - 1, zeta)) return {};
  LaurentPoly r;
  if (!odd(n)) {
    // Both pieces carry q^((n-j+i)/2 - 1); only their sum need be integral.
    const int lead = 2 * (n - j + i) - 4;
    detail::add_term(r, 1, lead + 2 * (n - j - i), 1);
    detail::add_term(r, -d * e, lead, 1);
    return r;
  }
  if (d != 0) {
    const int lead = 2 * (n - j + i - 1);
    detail::add_term(r, kHalf, lead + 2 * (n - j - i - 1), 1);
    detail::add_term(r, kHalf * d * z, lead, 1);
    return r;
  }
  const int l = sign(require_pm(lambda, "lambda"));
  const int lead = 2 * (n - j + i) - 4;
  detail::add_term(r, kHalf, lead + 2 * (n - j - i), 1);
  detail::add_term(r, -kHalf * l, lead, 1);
  return r;
}

LaurentPoly beta_nu_hyperplane(int i, int j, int n, FormType nu) {
  detail::check_dims(i, j, n);
  if (odd(n) || !odd(j - i) || i + j > n - 1)
    invalid(InvalidReason::parity_violation, "needs n even, j - i odd and i + j <= n - 1");
  const int v = sign(require_pm(nu, "nu"));
  LaurentPoly r;
  const int lead = 2 * (n - j + i - 1);
  detail::add_term(r, kHalf, lead + 2 * (n - j - i - 1), 1);
  detail::add_term(r, kHalf * v, lead, 1);
  return r;
}

namespace {

ProfileParams rho_profile(int j, FormType delta, int k, FormType zeta, int n, FormType eps, FormType eta) {
  ProfileParams p;
  p.n = n;
  p.eps = eps;
  p.j = j;
  p.delta = delta;
  p.k = k;
  p.zeta = zeta;
  p.eta = eta;
  return p;
}

}  // namespace

Ratio rho(int j, FormType delta, int k, FormType zeta, int n, FormType eps, FormType eta) {
  require_valid(Family::rho, rho_profile(j, delta, k, zeta, n, eps, eta));
  // With one side the zero space the span is the other side itself.
  if (k == 0) return Ratio(LaurentPoly(delta == eta ? 1 : 0));
  if (j == 0) return Ratio(LaurentPoly(zeta == eta ? 1 : 0));
  if (!odd(n * j)) return Ratio(gamma_general(0, j, delta, std::nullopt, n, eps, k, zeta, eta), alpha(0, k, zeta, n, eps));
  LaurentPoly pairs;
  for (FormType l : {kEll, kHyp}) pairs += alpha_perp(0, j, l, n) * gamma_general(0, j, kPar, l, n, kPar, k, zeta, eta);
  return Ratio(pairs, alpha(0, j, kPar, n, kPar) * alpha(0, k, zeta, n, kPar));
}

Ratio rho_perp_restricted(int j, FormType lambda, int k, FormType zeta, int n, FormType eta) {
  ProfileParams p = rho_profile(j, kPar, k, zeta, n, kPar, eta);
  p.lambda = lambda;
  if (!(odd(n) && odd(j))) invalid(InvalidReason::forbidden_perp_type, "perp-restricted proportion needs n and j odd");
  require_valid(Family::rho, p);
  if (k == 0) return Ratio(LaurentPoly(eta == kPar ? 1 : 0));
  return Ratio(gamma_general(0, j, kPar, lambda, n, kPar, k, zeta, eta), alpha(0, k, zeta, n, kPar));
}

Ratio evaluate(Family family, const ProfileParams& p) {
  require_valid(family, p);
  switch (family) {
    case Family::alpha:
      return p.lambda ? alpha_perp(p.i, p.j, *p.lambda, p.n) : alpha(p.i, p.j, p.delta, p.n, p.eps);
    case Family::beta: return beta(p.i, p.j, p.delta, p.lambda, p.n, p.eps, *p.k, *p.zeta);
    case Family::beta_nu: return beta_nu(p.i, p.j, p.lambda, p.n, p.eps, *p.k, *p.nu);
    case Family::gamma: return gamma(p);
    case Family::rho:
      if (p.lambda) return rho_perp_restricted(p.j, *p.lambda, *p.k, *p.zeta, p.n, *p.eta);
      return rho(p.j, p.delta, *p.k, *p.zeta, p.n, p.eps, *p.eta);
  }
  return {};
}

}  // namespace orthocount
