// Counts of non-singular subspaces sigma meeting a fixed pi trivially, with a
// prescribed type for the span <pi, sigma>.
//
// The complementary case (sigma of dimension n - j) has a closed form per
// parity of (n, j, i); the general case reduces to it inside the span.

#include "orthocount/anzahl.hpp"
#include "orthocount/qseries.hpp"
#include "poly_terms.hpp"

namespace orthocount {

using detail::add_term;
using detail::half;
using detail::invalid;
using detail::odd;
using detail::sum_over;

namespace {

const BigRational kHalf(1, 2);

LaurentPoly chi1(int b) { return chi(1, b); }

LaurentPoly binom2(int b, int a) { return gauss_binomial_sq(b, a); }

// True when the count is vacuous: parities say no such pi or sigma exists.
bool vacuous(int i, int j, int d, int n, int e) {
  if (!odd(j - i - d) || !odd(n - e)) return true;
  if (i == j && d != 1) return true;
  return !profile_exists(i, j, form_type(d), n, form_type(e));
}

// n, j, i odd; delta = +-1.
LaurentPoly complementary_odd_odd_odd(int i, int j, int d, int n, int z) {
  const int pre = 4 * j * n - 5 * j * j - 2 * j - 1;
  const int t = half(j - i);
  LaurentPoly s1 = sum_over(0, t, [&](int m) {
    return (chi1(half(j + 1) - m) * binom2(t, m)).shifted(m * (j + i - n + m));
  });
  LaurentPoly s2 = sum_over(0, t - 1, [&](int m) {
    return (chi1(half(j - 1) - m) * binom2(t - 1, m)).shifted(m * (j + i - n + m));
  });
  LaurentPoly r;
  add_term(r, kHalf, pre, s1);
  add_term(r, kHalf * z, pre + 6 * j - 2 * n, s2);
  add_term(r, -kHalf * z * d, pre + 4 * j - 2 * n + 2 * i, s2);
  return r;
}

// n, j odd, i even; delta = 0 and pi has perp type lambda.
LaurentPoly complementary_odd_odd_even(int i, int j, int l, int n, int z) {
  const int pre = 4 * j * n - 5 * j * j - 2 * j - 1;
  const int t = half(j - i - 1);
  LaurentPoly s1 = sum_over(0, t, [&](int m) {
    return (chi1(half(j + 1) - m) * binom2(t, m)).shifted(m * (j + i - n + m + 1));
  });
  LaurentPoly s2 = sum_over(0, t, [&](int m) {
    return (chi1(half(j - 1) - m) * binom2(t, m)).shifted(m * (j + i - n + m - 1));
  });
  LaurentPoly s3 = sum_over(0, t, [&](int m) {
    return (chi1(half(j - 1) - m) * binom2(t, m)).shifted(m * (j + i - n + m + 1));
  });
  LaurentPoly r;
  add_term(r, kHalf, pre, s1);
  add_term(r, kHalf * z, pre + 6 * j - 2 * n, s2);
  add_term(r, kHalf * l, pre + 2 * (j + i - n), s3);
  return r;
}

// n, j, i even; delta = +-1.
LaurentPoly complementary_even_even_even(int i, int j, int d, int n, int e, int z) {
  const int pre = 4 * j * n - 5 * j * j;
  const int t = half(j - i);
  const int h = half(j);
  LaurentPoly s1 = sum_over(0, t, [&](int m) {
    return (chi1(h - m) * binom2(t, m)).shifted(m * (j + i - n + m - 1));
  });
  LaurentPoly s2 = sum_over(0, t - 1, [&](int m) {
    return (chi1(h - m) * binom2(t - 1, m)).shifted(m * (j + i - n + m + 1));
  });
  LaurentPoly s3 = sum_over(0, t, [&](int m) {
    return (chi1(h - m) * binom2(t - 1, m)).shifted(m * (j + i - n + m + 1));
  });
  LaurentPoly s5 = sum_over(0, t, [&](int m) {
    return (chi1(h - m) * binom2(t - 1, m - 1)).shifted(m * (j + i - n + m - 1));
  });
  LaurentPoly r;
  add_term(r, kHalf, pre, s1);
  add_term(r, kHalf * z, pre + 2 * (j - n), s2);
  add_term(r, kHalf * e * z, pre - 2 * j, s3);
  add_term(r, -kHalf * d * z, pre + 2 * (i - n), s2);
  add_term(r, kHalf * d * e * z, pre - 2 * i, s5);
  return r;
}

// n, j even, i odd; delta = 0.
LaurentPoly complementary_even_even_odd(int i, int j, int n, int e, int z) {
  const int pre = 4 * j * n - 5 * j * j;
  const int t = half(j - i - 1);
  const int h = half(j);
  LaurentPoly s = sum_over(0, t, [&](int m) {
    return (chi1(h - m) * binom2(t, m)).shifted(m * (j + i - n + m));
  });
  LaurentPoly r;
  add_term(r, kHalf, pre, s);
  add_term(r, kHalf * z, pre + 2 * (j - n), s);
  add_term(r, kHalf * z * e, pre - 2 * j, s);
  return r;
}

// Exponent shared by both odd-complement theorems, times four.
int odd_complement_prefactor(int j, int n) {
  return 6 * j * n - n * n - 5 * j * j - 2 * n + 2 * j - 1;
}

}  // namespace

LaurentPoly gamma_complementary(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta) {
  detail::check_dims(i, j, n);
  if (odd(n - j)) invalid(InvalidReason::parity_violation, "complementary gamma needs n - j even");
  const int d = sign(delta);
  const int e = sign(eps);
  const int z = sign(zeta);
  if (vacuous(i, j, d, n, e) || !odd(n - j - z)) return {};
  if (odd(n)) {
    if (odd(i)) {
      if (lambda) invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
      return complementary_odd_odd_odd(i, j, d, n, z);
    }
    if (!lambda || *lambda == kPar) invalid(InvalidReason::missing_perp_type, "perp type lambda required: n(j-i) odd");
    if (n == i + j && *lambda != kHyp) return {};
    return complementary_odd_odd_even(i, j, sign(*lambda), n, z);
  }
  if (lambda) invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
  if (odd(i)) return complementary_even_even_odd(i, j, n, e, z);
  return complementary_even_even_even(i, j, d, n, e, z);
}

LaurentPoly gamma_complementary_unified(int i, int j, FormType delta, OptType lambda, int n, FormType eps,
                                        FormType zeta) {
  detail::check_dims(i, j, n);
  if (odd(n - j)) invalid(InvalidReason::parity_violation, "complementary gamma needs n - j even");
  const int d = sign(delta);
  const int e = sign(eps);
  const int z = sign(zeta);
  if (vacuous(i, j, d, n, e) || !odd(n - j - z)) return {};
  int l = 0;
  if (odd(n) && odd(j - i)) {
    if (!lambda || *lambda == kPar) invalid(InvalidReason::missing_perp_type, "perp type lambda required: n(j-i) odd");
    if (n == i + j && *lambda != kHyp) return {};
    l = sign(*lambda);
  }
  const int d2 = d * d;
  const int e2 = e * e;
  // Terms whose sign factor is zero are dropped before their (possibly
  // half-integral) indices are formed.
  const int top = half(j - i - 1 + d2);
  const int hj = (j + 1 - e2);  // twice the chi index offset of the leading term
  const int pre = 4 * j * (n - j) - hj * hj;
  LaurentPoly r;
  for (int m = 0; m <= top; ++m) {
    LaurentPoly t1 = chi1(half(hj) - m) * binom2(half(j - i - 1 + d2), m);
    add_term(r, kHalf, pre + 4 * m * (j + i - n + m + 1 - d2 - e2), t1);
    if (z != 0) {
      LaurentPoly t2 = chi1(half(j - 1 + e2) - m) * binom2(half(j - i - 1 - d2), m);
      add_term(r, kHalf * z, pre + 2 * (j - n) + 4 * (1 - e2) * j + 4 * m * (j + i - n + m - 1 + d2 + e2), t2);
    }
    if (d != 0 && z != 0) {
      LaurentPoly t3 = chi1(half(j - 1 + e2) - m) * binom2(half(j - i) - 1, m);
      add_term(r, -kHalf * d * z, pre + 2 * (i - n) + 4 * (1 - e2) * j + 4 * m * (j + i - n + m + e2), t3);
    }
    if (e != 0 && z != 0) {
      LaurentPoly t4 = chi1(half(j) - m) * binom2(half(j - i - 1 - d2), m);
      add_term(r, kHalf * e * z, pre - 2 * j + 4 * m * (j + i - n + m + d2), t4);
    }
    if (d != 0 && e != 0 && z != 0) {
      LaurentPoly t5 = chi1(half(j) - m) * binom2(half(j - i) - 1, m - 1);
      add_term(r, kHalf * d * e * z, pre - 2 * i + 4 * m * (j + i - n + m - 1), t5);
    }
    if (l != 0) {
      LaurentPoly t6 = chi1(half(j - 1) - m) * binom2(half(j - i - 1), m);
      add_term(r, kHalf * l, pre + 2 * (j + i - n) + 4 * m * (j + i - n + m + 1), t6);
    }
  }
  return r;
}

LaurentPoly gamma_n_odd_j_even(int i, int j, FormType delta, OptType lambda, int n, OptType mu) {
  detail::check_dims(i, j, n);
  if (!odd(n) || odd(j)) invalid(InvalidReason::parity_violation, "needs n odd and j even");
  const int d = sign(delta);
  if (vacuous(i, j, d, n, 0)) return {};
  if (mu && *mu == kPar) invalid(InvalidReason::forbidden_perp_type, "perp type mu must be -1 or 1");
  const int x = odd_complement_prefactor(j, n);
  LaurentPoly r;
  if (!odd(i)) {
    if (lambda) invalid(InvalidReason::forbidden_perp_type, "perp type not defined: n(j-i) even");
    const int t = half(n - j - i - 1);
    LaurentPoly s1 = sum_over(0, t, [&](int m) {
      return (chi1(half(n - j + 1) - m) * binom2(t, m)).shifted(m * (m - j + i + 1));
    });
    LaurentPoly s3 = sum_over(0, t, [&](int m) {
      return (chi1(half(n - j - 1) - m) * binom2(t, m)).shifted(m * (m - j + i + 1));
    });
    if (!mu) {
      add_term(r, 1, x, s1);
      add_term(r, d, x + 2 * (i - j), s3);
      return r;
    }
    LaurentPoly s2 = sum_over(0, t, [&](int m) {
      return (chi1(half(n - j - 1) - m) * binom2(t, m)).shifted(m * (m - j + i - 1));
    });
    add_term(r, kHalf, x, s1);
    add_term(r, kHalf * sign(*mu), x + 4 * n - 6 * j, s2);
    add_term(r, kHalf * d, x + 2 * (i - j), s3);
    return r;
  }
  if (!lambda || *lambda == kPar) invalid(InvalidReason::missing_perp_type, "perp type lambda required: n(j-i) odd");
  if (n == i + j && *lambda != kHyp) return {};
  const int t = half(n - j - i);
  LaurentPoly s1 = sum_over(0, t, [&](int m) {
    return (chi1(half(n - j + 1) - m) * binom2(t, m)).shifted(m * (m - j + i));
  });
  if (!mu) {
    add_term(r, 1, x, s1);
    return r;
  }
  LaurentPoly s2 = sum_over(0, t - 1, [&](int m) {
    return (chi1(half(n - j - 1) - m) * binom2(t - 1, m)).shifted(m * (m - j + i));
  });
  const int u = sign(*mu);
  add_term(r, kHalf, x, s1);
  add_term(r, kHalf * u, x + 2 * n - 4 * j + 2 * (n - j), s2);
  add_term(r, -kHalf * u * sign(*lambda), x + 2 * n - 4 * j + 2 * i, s2);
  return r;
}

LaurentPoly gamma_n_even_j_odd(int i, int j, FormType delta, int n, FormType eps) {
  detail::check_dims(i, j, n);
  if (odd(n) || !odd(j)) invalid(InvalidReason::parity_violation, "needs n even and j odd");
  const int d = sign(delta);
  const int e = sign(eps);
  if (vacuous(i, j, d, n, e)) return {};
  const int x = odd_complement_prefactor(j, n);
  LaurentPoly r;
  if (odd(i)) {
    const int t = half(n - j - i);
    // The leading sum runs to t with binomial top t - 1, as in the theorem;
    // its last term vanishes except when t = 0.
    LaurentPoly s1 = sum_over(0, t, [&](int m) {
      return (chi1(half(n - j + 1) - m) * binom2(t - 1, m)).shifted(m * (m - j + i + 1));
    });
    LaurentPoly s2 = sum_over(0, t - 1, [&](int m) {
      return (chi1(half(n - j - 1) - m) * binom2(t - 1, m)).shifted(m * (m - j + i + 1));
    });
    add_term(r, 1, x, s1);
    add_term(r, d, x + 2 * (i - j), s2);
    add_term(r, -e, x + 2 * n - 4 * j, s2);
    add_term(r, d * e, x + 2 * n - 6 * j + 2 * i, s2);
    return r;
  }
  const int t = half(n - j - i - 1);
  LaurentPoly s1 = sum_over(0, t, [&](int m) {
    return (chi1(half(n - j + 1) - m) * binom2(t, m)).shifted(m * (m - j + i));
  });
  LaurentPoly s2 = sum_over(0, t, [&](int m) {
    return (chi1(half(n - j - 1) - m) * binom2(t, m)).shifted(m * (m - j + i));
  });
  add_term(r, 1, x, s1);
  add_term(r, -e, x + 2 * n - 4 * j, s2);
  return r;
}

LaurentPoly gamma_spanning(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta) {
  if (!odd(n - j)) return gamma_complementary(i, j, delta, lambda, n, eps, zeta);
  if (odd(n)) return zeta == kPar ? gamma_n_odd_j_even(i, j, delta, lambda, n, std::nullopt) : LaurentPoly();
  return zeta == kPar ? gamma_n_even_j_odd(i, j, delta, n, eps) : LaurentPoly();
}

LaurentPoly gamma_general(int i, int j, FormType delta, OptType lambda, int n, FormType eps, int k, FormType zeta,
                          FormType eta) {
  detail::check_dims(i, j, n);
  if (k < 0 || k > n - j) invalid(InvalidReason::range_violation, "need 0 <= k <= n - j");
  const int d = sign(delta);
  if (vacuous(i, j, d, n, sign(eps)) || !odd(k - sign(zeta)) || !odd(k + j - sign(eta))) return {};
  if (odd(n) && odd(j - i) && n != i + j && (!lambda || *lambda == kPar))
    invalid(InvalidReason::missing_perp_type, "perp type lambda required: n(j-i) odd");
  // The span <pi, sigma> is non-singular and contains pi, so it has dimension
  // at least i + j; sigma = 0 leaves pi itself as the span.
  if (k == 0) return (i == 0 && delta == eta) ? LaurentPoly(1) : LaurentPoly();
  if (i > k) return {};

  const int span = k + j;
  if (!odd(span) || !odd(j - i)) {
    // Pick the span tau first, then sigma inside tau.
    LaurentPoly through = beta(i, j, delta, lambda, n, eps, span, eta);
    if (through.is_zero()) return {};
    if (!profile_exists(i, j, delta, span, eta)) return {};
    return through * gamma_spanning(i, j, delta, std::nullopt, span, eta, zeta);
  }
  // Odd span and j - i odd: split by the perp type nu of pi inside the span.
  LaurentPoly r;
  for (FormType nu : {kEll, kHyp}) {
    if (span == i + j && nu == kEll) continue;
    LaurentPoly through = beta_nu(i, j, lambda, n, eps, span, nu);
    if (through.is_zero()) continue;
    r += through * gamma_spanning(i, j, delta, nu, span, kPar, zeta);
  }
  return r;
}

LaurentPoly gamma(const ProfileParams& p) {
  require_valid(Family::gamma, p);
  const int k = *p.k;
  if (k == p.n - p.j && p.mu) return gamma_n_odd_j_even(p.i, p.j, p.delta, p.lambda, p.n, p.mu);
  return gamma_general(p.i, p.j, p.delta, p.lambda, p.n, p.eps, k, *p.zeta, *p.eta);
}

}  // namespace orthocount
