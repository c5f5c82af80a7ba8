#include <algorithm>
#include <functional>
#include <stdexcept>

#include "orthocount/anzahl.hpp"
#include "orthocount/geometry.hpp"
#include "orthocount/qseries.hpp"
#include "orthocount/verify.hpp"
#include "poly_terms.hpp"

namespace orthocount::verify {

using detail::add_term;
using detail::half;
using detail::odd;

namespace {

constexpr std::pair<IdentityId, const char*> kNames[] = {
    {IdentityId::rec1, "rec1"},
    {IdentityId::rec2, "rec2"},
    {IdentityId::rec3, "rec3"},
    {IdentityId::rec4, "rec4"},
    {IdentityId::double_count_beta, "double_count_beta"},
    {IdentityId::halved_beta, "halved_beta"},
    {IdentityId::beta_nu_decomp, "beta_nu_decomp"},
    {IdentityId::appendixB_i_odd, "appendixB_i_odd"},
    {IdentityId::appendixB_i_even, "appendixB_i_even"},
    {IdentityId::pascal, "pascal"},
    {IdentityId::hyperplane_specializations, "hyperplane_specializations"},
    {IdentityId::gamma_general_factorization, "gamma_general_factorization"},
};

std::optional<int> lookup(const IdentityParams& ps, const char* name) {
  for (const auto& [k, v] : ps)
    if (k == name) return v;
  return std::nullopt;
}

int need(const IdentityParams& ps, const char* name) {
  auto v = lookup(ps, name);
  if (!v) detail::invalid(InvalidReason::missing_parameter, std::string("identity parameter ") + name + " missing");
  return *v;
}

FormType need_type(const IdentityParams& ps, const char* name) { return form_type(need(ps, name)); }

OptType maybe_type(const IdentityParams& ps, const char* name) {
  auto v = lookup(ps, name);
  return v ? OptType(form_type(*v)) : std::nullopt;
}

LaurentPoly qp(int e) { return LaurentPoly::q(e); }
LaurentPoly one() { return LaurentPoly(1); }

// Complement count that is 0 for subspace profiles which cannot occur, as the
// boundary terms of the recursions require.
LaurentPoly spanning_or_zero(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta) {
  if (i < 0 || j < i || i + j > n) return {};
  if (!odd(j - i - sign(delta))) throw std::logic_error("recursion term with type of the wrong parity");
  if (i == j && delta != kHyp) return {};
  if (!profile_exists(i, j, delta, n, eps)) return {};
  if (!(odd(n) && odd(j - i))) lambda.reset();
  if (lambda && i + j == n && *lambda != kHyp) return {};
  return gamma_spanning(i, j, delta, lambda, n, eps, zeta);
}

// Non-singular hyperplanes of the given type through a non-singular (n-j)-space.
LaurentPoly hyperplanes_through(int j, FormType zeta, int n, FormType eps, FormType hyper) {
  return beta(0, n - j, zeta, std::nullopt, n, eps, n - 1, hyper);
}

const FormType kSigns[] = {kEll, kHyp};

// Right-hand sides of the four recursion lemmas. Ambient dimension n, the
// j-space has an i-dimensional radical.
LaurentPoly rhs_even_ambient_even_quotient(int i, int j, FormType delta, int n, FormType eps, FormType zeta) {
  const int d = sign(delta);
  const int e = sign(eps);
  LaurentPoly r = (qp(i) - one()) * qp(n - i - 1) * spanning_or_zero(i - 1, j - 1, delta, std::nullopt, n - 1, kPar, zeta);
  LaurentPoly mid;
  for (FormType nu : kSigns) {
    LaurentPoly c = (qp(1) - one()) * qp(half(n - j - i)) + qp(1) * LaurentPoly(sign(nu)) + LaurentPoly(d * e);
    mid += c * spanning_or_zero(i, j - 1, kPar, nu, n - 1, kPar, zeta);
  }
  r += (mid * (qp(half(j - i)) - LaurentPoly(d)) * BigRational(1, 2)).shifted(half(n) - 2);
  LaurentPoly c3 = (qp(half(j - i - 1 - d)) + one()) * (qp(half(j - i - 1 + d)) - one()) *
                   (qp(half(n - j - i)) - LaurentPoly(d * e));
  r += (c3 * spanning_or_zero(i + 1, j - 1, delta, std::nullopt, n - 1, kPar, zeta)).shifted(half(n - j + i) - 1);
  return r;
}

LaurentPoly rhs_even_ambient_odd_quotient(int i, int j, int n, FormType eps, FormType zeta) {
  const int e = sign(eps);
  const BigRational h(1, 2);
  LaurentPoly first;
  for (FormType nu : kSigns) first += spanning_or_zero(i - 1, j - 1, kPar, nu, n - 1, kPar, zeta);
  LaurentPoly r = (first * (qp(i) - one()) * h).shifted(n - i - 1);

  LaurentPoly mid;
  for (FormType kappa : kSigns) {
    LaurentPoly c = qp(half(n) - i - 1) * (qp(1) - one()) - LaurentPoly(e) +
                    qp(half(j - i - 1)) * LaurentPoly(sign(kappa)) * ((qp(1) - one()) * qp(half(n) - j) - LaurentPoly(e));
    mid += c * spanning_or_zero(i, j - 1, kappa, std::nullopt, n - 1, kPar, zeta);
  }
  r += (mid * h).shifted(half(n) - 1);

  LaurentPoly last;
  for (FormType nu : kSigns)
    last += spanning_or_zero(i + 1, j - 1, kPar, nu, n - 1, kPar, zeta) * (qp(half(n - j - i - 1)) + LaurentPoly(sign(nu)));
  r += (last * (qp(j - i - 1) - one()) * h).shifted(half(n - j + i - 1));
  return r;
}

LaurentPoly rhs_odd_ambient_odd_radical(int i, int j, FormType delta, int n, FormType zeta) {
  const int d = sign(delta);
  const int z = sign(zeta);
  const BigRational h(1, 2);
  LaurentPoly r = ((qp(i) - one()) * spanning_or_zero(i - 1, j - 1, delta, std::nullopt, n - 1, zeta, zeta) * h)
                      .shifted(n - i - 1);
  LaurentPoly c2 = (qp(1) - one()) * qp(half(n - 1) - i) - qp(half(j - i)) * LaurentPoly(d * z) -
                   (qp(1) - one()) * qp(half(n - j - i - 1)) * LaurentPoly(d) + LaurentPoly(z);
  r += (c2 * spanning_or_zero(i, j - 1, kPar, std::nullopt, n - 1, zeta, zeta) * h).shifted(half(n - 3));
  LaurentPoly c3 = (qp(j - i - 1) - one()) * qp(half(n - j - i - 1)) + (qp(1) - one()) * qp(half(n - 3) - i) * LaurentPoly(d) +
                   (qp(j - i - 1) - one()) * LaurentPoly(d * z) + (qp(1) - one()) * qp(half(j - i) - 1) * LaurentPoly(z);
  r += (c3 * spanning_or_zero(i + 1, j - 1, delta, std::nullopt, n - 1, zeta, zeta) * h).shifted(half(n - j + i - 1));
  return r;
}

LaurentPoly rhs_odd_ambient_even_radical(int i, int j, FormType lambda, int n, FormType zeta) {
  const int l = sign(lambda);
  const int z = sign(zeta);
  const BigRational h(1, 2);
  LaurentPoly r = ((qp(i) - one()) * spanning_or_zero(i - 1, j - 1, kPar, std::nullopt, n - 1, zeta, zeta) * h)
                      .shifted(n - i - 1);
  LaurentPoly mid;
  for (FormType kappa : kSigns) {
    const int c = sign(kappa);
    LaurentPoly w = (qp(1) - one()) * qp(half(n - 1) - i) + qp(half(j - i - 1)) * LaurentPoly(l) + qp(half(j - i + 1)) * LaurentPoly(z * c) +
                    (qp(1) - one()) * qp(half(n - j - i)) * LaurentPoly(c) + LaurentPoly(c * l) + qp(1) * LaurentPoly(z);
    mid += w * spanning_or_zero(i, j - 1, kappa, std::nullopt, n - 1, zeta, zeta);
  }
  r += (mid * BigRational(1, 4)).shifted(half(n - 3));
  LaurentPoly c3 = (qp(j - i - 1) - one()) * (qp(half(n - j - i)) - LaurentPoly(l));
  r += (c3 * spanning_or_zero(i + 1, j - 1, kPar, std::nullopt, n - 1, zeta, zeta) * h).shifted(half(n - j + i) - 1);
  return r;
}

// Whether pi = (i, j, delta, lambda) in (n, eps) with complements of type zeta
// is a valid complementary gamma query.
bool complementary_profile_ok(int i, int j, FormType delta, OptType lambda, int n, FormType eps, FormType zeta) {
  ProfileParams p;
  p.n = n;
  p.eps = eps;
  p.i = i;
  p.j = j;
  p.delta = delta;
  p.lambda = lambda;
  p.k = n - j;
  p.zeta = zeta;
  p.eta = eps;
  return validate_for(Family::gamma, p).valid();
}

void require(bool ok, const std::string& what) {
  if (!ok) detail::invalid(InvalidReason::range_violation, what);
}

IdentityReport finish(IdentityId id, const IdentityParams& ps, LaurentPoly lhs, LaurentPoly rhs) {
  IdentityReport r;
  r.id = id;
  r.params = ps;
  r.status = lhs == rhs ? Status::match : Status::mismatch;
  if (r.status == Status::mismatch) r.reason = "difference " + (lhs - rhs).str();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

const char* identity_name(IdentityId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
  for (const auto& [k, s] : kNames)
    if (name == s) return k;
  return std::nullopt;
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

IdentityReport check_recursion_identity(IdentityId id, const IdentityParams& ps) {
  const int n = need(ps, "n");
  const int j = need(ps, "j");
  const int i = need(ps, "i");
  const FormType zeta = need_type(ps, "zeta");
  require(j >= 1, "recursions need j >= 1");
  switch (id) {
    case IdentityId::rec1:
    case IdentityId::rec2: {
      const FormType eps = need_type(ps, "eps");
      require(!odd(n), "rec1 and rec2 need n even");
      const bool even_quotient = id == IdentityId::rec1;
      require(odd(j - i) != even_quotient, even_quotient ? "rec1 needs j - i even" : "rec2 needs j - i odd");
      const FormType delta = even_quotient ? need_type(ps, "delta") : kPar;
      require(complementary_profile_ok(i, j, delta, std::nullopt, n, eps, zeta), "not a valid complementary profile");
      LaurentPoly lhs = gamma_spanning(i, j, delta, std::nullopt, n, eps, zeta) * hyperplanes_through(j, zeta, n, eps, kPar);
      LaurentPoly rhs = even_quotient ? rhs_even_ambient_even_quotient(i, j, delta, n, eps, zeta)
                                      : rhs_even_ambient_odd_quotient(i, j, n, eps, zeta);
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    case IdentityId::rec3: {
      require(odd(n) && odd(j) && odd(i), "rec3 needs n, j and i odd");
      const FormType delta = need_type(ps, "delta");
      require(complementary_profile_ok(i, j, delta, std::nullopt, n, kPar, zeta), "not a valid complementary profile");
      LaurentPoly lhs =
          gamma_spanning(i, j, delta, std::nullopt, n, kPar, zeta) * hyperplanes_through(j, zeta, n, kPar, zeta);
      return finish(id, ps, std::move(lhs), rhs_odd_ambient_odd_radical(i, j, delta, n, zeta));
    }
    case IdentityId::rec4: {
      require(odd(n) && odd(j) && !odd(i), "rec4 needs n and j odd, i even");
      const FormType lambda = need_type(ps, "lambda");
      require(complementary_profile_ok(i, j, kPar, lambda, n, kPar, zeta), "not a valid complementary profile");
      LaurentPoly lhs = gamma_spanning(i, j, kPar, lambda, n, kPar, zeta) * hyperplanes_through(j, zeta, n, kPar, zeta);
      return finish(id, ps, std::move(lhs), rhs_odd_ambient_even_radical(i, j, lambda, n, zeta));
    }
    default:
      throw std::invalid_argument(std::string(identity_name(id)) + " is not a recursion identity");
  }
}

IdentityReport check_structural_identity(IdentityId id, const IdentityParams& ps) {
  switch (id) {
    case IdentityId::pascal: {
      const int b = need(ps, "b");
      const int a = need(ps, "a");
      require(b >= a && a >= 0, "pascal needs b >= a >= 0");
      LaurentPoly lhs = gauss_binomial(b, a);
      LaurentPoly rhs = need(ps, "variant") == 1 ? (gauss_binomial(b - 1, a).shifted(a) + gauss_binomial(b - 1, a - 1))
                                                 : (gauss_binomial(b - 1, a) + gauss_binomial(b - 1, a - 1).shifted(b - a));
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    case IdentityId::double_count_beta:
    case IdentityId::halved_beta: {
      const int n = need(ps, "n");
      const int i = need(ps, "i");
      const int j = need(ps, "j");
      const int k = need(ps, "k");
      const FormType eps = need_type(ps, "eps");
      const FormType zeta = need_type(ps, "zeta");
      if (id == IdentityId::double_count_beta) {
        const FormType delta = need_type(ps, "delta");
        require(!(odd(n) && odd(j - i)), "double counting without perp types needs n(j-i) even");
        LaurentPoly lhs = alpha(i, j, delta, n, eps) * beta(i, j, delta, std::nullopt, n, eps, k, zeta);
        LaurentPoly rhs = alpha(0, k, zeta, n, eps) * alpha(i, j, delta, k, zeta);
        return finish(id, ps, std::move(lhs), std::move(rhs));
      }
      const FormType lambda = need_type(ps, "lambda");
      require(odd(n) && odd(j - i) && !odd(k), "halved orbits need n and j - i odd, k even");
      LaurentPoly lhs = alpha_perp(i, j, lambda, n) * beta(i, j, kPar, lambda, n, kPar, k, zeta);
      LaurentPoly rhs = alpha(0, k, zeta, n, kPar) * alpha(i, j, kPar, k, zeta) * BigRational(1, 2);
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    case IdentityId::beta_nu_decomp: {
      const int n = need(ps, "n");
      const int i = need(ps, "i");
      const int j = need(ps, "j");
      const int k = need(ps, "k");
      const FormType eps = need_type(ps, "eps");
      const OptType lambda = maybe_type(ps, "lambda");
      LaurentPoly lhs = beta(i, j, kPar, lambda, n, eps, k, kPar);
      LaurentPoly rhs;
      for (FormType nu : kSigns) rhs += beta_nu(i, j, lambda, n, eps, k, nu);
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    case IdentityId::appendixB_i_odd:
    case IdentityId::appendixB_i_even: {
      const int n = need(ps, "n");
      const int i = need(ps, "i");
      const int j = need(ps, "j");
      const FormType eps = need_type(ps, "eps");
      require(!odd(n) && odd(j), "the endpoint identities need n even and j odd");
      const bool i_odd = id == IdentityId::appendixB_i_odd;
      require(odd(i) == i_odd, i_odd ? "needs i odd" : "needs i even");
      const FormType delta = i_odd ? need_type(ps, "delta") : kPar;
      require(complementary_profile_ok(i, j, delta, std::nullopt, n, eps, kPar), "not a valid complementary profile");
      LaurentPoly lhs = gamma_n_even_j_odd(i, j, delta, n, eps).shifted(j - 1);
      LaurentPoly rhs = i_odd ? rhs_even_ambient_even_quotient(i, j, delta, n, eps, kPar)
                              : rhs_even_ambient_odd_quotient(i, j, n, eps, kPar);
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    case IdentityId::hyperplane_specializations: {
      const int n = need(ps, "n");
      const int i = need(ps, "i");
      const FormType eps = need_type(ps, "eps");
      switch (need(ps, "variant")) {
        case 0: {
          const FormType delta = need_type(ps, "delta");
          return finish(id, ps, alpha_hyperplane(i, delta, n, eps), alpha(i, n - 1, delta, n, eps));
        }
        case 1: {
          const int j = need(ps, "j");
          const FormType delta = need_type(ps, "delta");
          const FormType zeta = need_type(ps, "zeta");
          const OptType lambda = maybe_type(ps, "lambda");
          return finish(id, ps, beta_hyperplane(i, j, delta, lambda, n, eps, zeta),
                        beta(i, j, delta, lambda, n, eps, n - 1, zeta));
        }
        default: {
          const int j = need(ps, "j");
          const FormType nu = need_type(ps, "nu");
          return finish(id, ps, beta_nu_hyperplane(i, j, n, nu), beta_nu(i, j, std::nullopt, n, eps, n - 1, nu));
        }
      }
    }
    case IdentityId::gamma_general_factorization: {
      const int n = need(ps, "n");
      const int i = need(ps, "i");
      const int j = need(ps, "j");
      const int k = need(ps, "k");
      const FormType eps = need_type(ps, "eps");
      const FormType delta = need_type(ps, "delta");
      const FormType zeta = need_type(ps, "zeta");
      const FormType eta = need_type(ps, "eta");
      const OptType lambda = maybe_type(ps, "lambda");
      require(k >= i && k + j <= n, "needs i <= k <= n - j");
      const int span = k + j;
      LaurentPoly lhs = gamma_general(i, j, delta, lambda, n, eps, k, zeta, eta);
      LaurentPoly rhs;
      if (!odd(span) || !odd(j - i)) {
        rhs = beta(i, j, delta, lambda, n, eps, span, eta) * gamma_spanning(i, j, delta, std::nullopt, span, eta, zeta);
      } else {
        for (FormType nu : kSigns) {
          if (span == i + j && nu == kEll) continue;
          rhs += beta_nu(i, j, lambda, n, eps, span, nu) * gamma_spanning(i, j, delta, nu, span, kPar, zeta);
        }
      }
      return finish(id, ps, std::move(lhs), std::move(rhs));
    }
    default:
      throw std::invalid_argument(std::string(identity_name(id)) + " is a recursion identity");
  }
}

IdentityReport check_identity(IdentityId id, const IdentityParams& params) {
  switch (id) {
    case IdentityId::rec1:
    case IdentityId::rec2:
    case IdentityId::rec3:
    case IdentityId::rec4: return check_recursion_identity(id, params);
    default: return check_structural_identity(id, params);
  }
}

std::vector<IdentityParams> identity_instances(IdentityId id, int n_max) {
  std::vector<IdentityParams> out;
  auto t = [](FormType f) { return sign(f); };
  switch (id) {
    case IdentityId::pascal:
      for (int b = 0; b <= n_max + 2; ++b)
        for (int a = 0; a <= b; ++a)
          for (int variant : {1, 2}) out.push_back({{"b", b}, {"a", a}, {"variant", variant}});
      return out;
    case IdentityId::rec1:
    case IdentityId::rec2:
    case IdentityId::appendixB_i_odd:
    case IdentityId::appendixB_i_even: {
      const bool even_quotient = id == IdentityId::rec1 || id == IdentityId::appendixB_i_odd;
      const bool endpoint = id == IdentityId::appendixB_i_odd || id == IdentityId::appendixB_i_even;
      for (int n = 2; n <= n_max; n += 2)
        for (FormType eps : ambient_types(n))
          for (int j = 1; j <= n; ++j) {
            if (endpoint && !odd(j)) continue;
            for (int i = 0; i <= j && i + j <= n; ++i) {
              if (odd(j - i) == even_quotient) continue;
              const std::vector<FormType> deltas = even_quotient ? std::vector<FormType>{kEll, kHyp} : std::vector<FormType>{kPar};
              const std::vector<FormType> zetas = endpoint ? std::vector<FormType>{kPar} : nondegenerate_types(n - j);
              for (FormType delta : deltas)
                for (FormType zeta : zetas) {
                  if (!complementary_profile_ok(i, j, delta, std::nullopt, n, eps, zeta)) continue;
                  IdentityParams ps{{"n", n}, {"eps", t(eps)}, {"j", j}, {"i", i}};
                  if (even_quotient) ps.emplace_back("delta", t(delta));
                  if (!endpoint) ps.emplace_back("zeta", t(zeta));
                  out.push_back(std::move(ps));
                }
            }
          }
      return out;
    }
    case IdentityId::rec3:
    case IdentityId::rec4: {
      const bool odd_radical = id == IdentityId::rec3;
      for (int n = 1; n <= n_max; n += 2)
        for (int j = 1; j <= n; j += 2)
          for (int i = odd_radical ? 1 : 0; i <= j && i + j <= n; i += 2)
            for (FormType zeta : nondegenerate_types(n - j))
              for (FormType s : kSigns) {
                const FormType delta = odd_radical ? s : kPar;
                const OptType lambda = odd_radical ? std::nullopt : OptType(s);
                if (!complementary_profile_ok(i, j, delta, lambda, n, kPar, zeta)) continue;
                IdentityParams ps{{"n", n}, {"j", j}, {"i", i}, {"zeta", t(zeta)}};
                ps.emplace_back(odd_radical ? "delta" : "lambda", t(s));
                out.push_back(std::move(ps));
              }
      return out;
    }
    default: break;
  }

  for (int n = 1; n <= n_max; ++n)
    for (FormType eps : ambient_types(n))
      for (const ProfileParams& pi : subspace_profiles(n, eps)) {
        if (!profile_exists(pi.i, pi.j, pi.delta, n, eps)) continue;
        IdentityParams base{{"n", n}, {"eps", t(eps)}, {"i", pi.i}, {"j", pi.j}};
        const int i = pi.i;
        const int j = pi.j;
        switch (id) {
          case IdentityId::double_count_beta:
            if (pi.lambda) break;
            for (int k = i + j; k <= n; ++k)
              for (FormType zeta : nondegenerate_types(k)) {
                auto ps = base;
                ps.insert(ps.end(), {{"delta", t(pi.delta)}, {"k", k}, {"zeta", t(zeta)}});
                out.push_back(std::move(ps));
              }
            break;
          case IdentityId::halved_beta:
            if (!pi.lambda) break;
            for (int k = i + j; k <= n; ++k) {
              if (odd(k)) continue;
              for (FormType zeta : nondegenerate_types(k)) {
                auto ps = base;
                ps.insert(ps.end(), {{"lambda", t(*pi.lambda)}, {"k", k}, {"zeta", t(zeta)}});
                out.push_back(std::move(ps));
              }
            }
            break;
          case IdentityId::beta_nu_decomp:
            if (!odd(j - i)) break;
            for (int k = i + j; k <= n; ++k) {
              ProfileParams p = pi;
              p.k = k;
              p.zeta = kPar;
              p.nu = kHyp;
              if (!validate_for(Family::beta_nu, p)) continue;
              auto ps = base;
              if (pi.lambda) ps.emplace_back("lambda", t(*pi.lambda));
              ps.emplace_back("k", k);
              out.push_back(std::move(ps));
            }
            break;
          case IdentityId::hyperplane_specializations:
            if (j == n - 1 && i <= 1 && !pi.lambda) {
              auto ps = base;
              ps.insert(ps.end(), {{"variant", 0}, {"delta", t(pi.delta)}});
              out.push_back(std::move(ps));
            }
            if (i + j <= n - 1) {
              for (FormType zeta : nondegenerate_types(n - 1)) {
                auto ps = base;
                ps.insert(ps.end(), {{"variant", 1}, {"delta", t(pi.delta)}, {"zeta", t(zeta)}});
                if (pi.lambda) ps.emplace_back("lambda", t(*pi.lambda));
                out.push_back(std::move(ps));
              }
              if (!odd(n) && odd(j - i))
                for (FormType nu : kSigns) {
                  auto ps = base;
                  ps.insert(ps.end(), {{"variant", 2}, {"nu", t(nu)}});
                  out.push_back(std::move(ps));
                }
            }
            break;
          case IdentityId::gamma_general_factorization:
            for (int k = std::max(i, 1); k + j <= n; ++k)
              for (FormType zeta : nondegenerate_types(k))
                for (FormType eta : nondegenerate_types(k + j)) {
                  auto ps = base;
                  ps.insert(ps.end(), {{"delta", t(pi.delta)}, {"k", k}, {"zeta", t(zeta)}, {"eta", t(eta)}});
                  if (pi.lambda) ps.emplace_back("lambda", t(*pi.lambda));
                  out.push_back(std::move(ps));
                }
            break;
          default: break;
        }
      }
  return out;
}

std::vector<IdentityReport> run_identity_suite(const std::vector<IdentityId>& ids, int n_max, int jobs) {
  std::vector<std::pair<IdentityId, IdentityParams>> work;
  for (IdentityId id : ids)
    for (auto& ps : identity_instances(id, n_max)) work.emplace_back(id, std::move(ps));
  return geometry::parallel_map<IdentityReport>(work.size(), jobs, [&](std::size_t t) {
    try {
      return check_identity(work[t].first, work[t].second);
    } catch (const std::exception& e) {
      IdentityReport r;
      r.id = work[t].first;
      r.params = work[t].second;
      r.status = Status::mismatch;
      r.reason = std::string("evaluation failed: ") + e.what();
      return r;
    }
  });
}

std::vector<IdentityReport> run_identity_suite(int n_max, int jobs) {
  return run_identity_suite(all_identities(), n_max, jobs);
}

}  // namespace orthocount::verify
