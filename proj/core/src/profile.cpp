#include "orthocount/profile.hpp"

#include <sstream>

namespace orthocount {

FormType form_type(int value) {
  if (value < -1 || value > 1) throw std::invalid_argument("form type must be -1, 0 or 1, got " + std::to_string(value));
  return static_cast<FormType>(value);
}

namespace {

bool odd(int x) { return (x % 2) != 0; }

std::string opt(const std::optional<FormType>& t) { return t ? std::to_string(sign(*t)) : "-"; }

ValidityVerdict fail(InvalidReason r, std::string msg) { return ValidityVerdict::fail(r, std::move(msg)); }

bool is_pm_one(FormType t) { return t != kPar; }

}  // namespace

std::string describe(const ProfileParams& p) {
  std::ostringstream os;
  os << "(i=" << p.i << ", j=" << p.j << ", delta=" << sign(p.delta);
  if (p.lambda) os << ", lambda=" << sign(*p.lambda);
  os << "), (n=" << p.n << ", eps=" << sign(p.eps) << ")";
  if (p.k) os << ", (k=" << *p.k << ", zeta=" << opt(p.zeta) << (p.mu ? ", mu=" + opt(p.mu) : "") << ")";
  if (p.eta) os << ", eta=" << sign(*p.eta);
  if (p.nu) os << ", nu=" << sign(*p.nu);
  return os.str();
}

const char* family_name(Family f) {
  switch (f) {
    case Family::alpha: return "alpha";
    case Family::beta: return "beta";
    case Family::beta_nu: return "beta_nu";
    case Family::gamma: return "gamma";
    case Family::rho: return "rho";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::alpha, Family::beta, Family::beta_nu, Family::gamma, Family::rho})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

const char* reason_name(InvalidReason r) {
  switch (r) {
    case InvalidReason::none: return "valid";
    case InvalidReason::range_violation: return "range violation";
    case InvalidReason::parity_violation: return "parity violation";
    case InvalidReason::forbidden_perp_type: return "forbidden perp type";
    case InvalidReason::missing_perp_type: return "missing perp type";
    case InvalidReason::missing_parameter: return "missing parameter";
    case InvalidReason::unexpected_parameter: return "unexpected parameter";
    case InvalidReason::empty_profile: return "no such subspace";
  }
  return "?";
}

bool profile_exists(int i, int j, FormType delta, int n, FormType eps) {
  // pi / rad(pi) sits inside rad(pi)^perp / rad(pi), a non-degenerate space of
  // dimension n - 2i and type eps; only when it fills that space is the type forced.
  if (i + j == n) return delta == eps;
  return true;
}

ValidityVerdict validate(const ProfileParams& p) {
  using R = InvalidReason;
  if (p.n < 1) return fail(R::range_violation, "n must be positive");
  if (!odd(p.n - sign(p.eps))) return fail(R::parity_violation, "type eps incompatible with dimension n: need n - eps odd");
  if (p.i < 0 || p.j < p.i) return fail(R::range_violation, "need 0 <= i <= j");
  if (p.i + p.j > p.n) return fail(R::range_violation, "need i + j <= n");
  if (!odd(p.j - p.i - sign(p.delta))) return fail(R::parity_violation, "type delta incompatible with j - i: need j - i - delta odd");
  if (p.i == p.j && p.delta != kHyp) return fail(R::parity_violation, "a totally singular space has delta = 1");

  const bool needs_lambda = odd(p.n) && odd(p.j - p.i);
  if (p.lambda) {
    if (!needs_lambda) return fail(R::forbidden_perp_type, "perp type not defined: n(j-i) even");
    if (!is_pm_one(*p.lambda)) return fail(R::forbidden_perp_type, "perp type lambda must be -1 or 1");
    if (p.n == p.i + p.j && *p.lambda != kHyp)
      return fail(R::forbidden_perp_type, "perp type must be 1 when n = i + j");
  } else if (needs_lambda) {
    return fail(R::missing_perp_type, "perp type lambda required: n(j-i) odd");
  }

  if (!p.k) {
    for (const auto* f : {&p.zeta, &p.mu, &p.eta})
      if (f->has_value()) return fail(R::missing_parameter, "zeta, mu and eta need k");
    if (p.nu) return fail(R::missing_parameter, "nu needs k");
    return ValidityVerdict::ok();
  }
  const int k = *p.k;
  if (k < 0 || k > p.n) return fail(R::range_violation, "need 0 <= k <= n");
  if (!p.zeta) return fail(R::missing_parameter, "zeta required with k");
  if (!odd(k - sign(*p.zeta))) return fail(R::parity_violation, "type zeta incompatible with k: need k - zeta odd");
  if (p.mu) {
    if (!(odd(p.n) && odd(k))) return fail(R::forbidden_perp_type, "perp type mu not defined: nk even");
    if (!is_pm_one(*p.mu)) return fail(R::forbidden_perp_type, "perp type mu must be -1 or 1");
  }
  if (p.eta) {
    if (k + p.j > p.n) return fail(R::range_violation, "need j + k <= n when eta is given");
    if (!odd(k + p.j - sign(*p.eta))) return fail(R::parity_violation, "type eta incompatible with k + j: need k + j - eta odd");
  }
  if (p.nu && !is_pm_one(*p.nu)) return fail(R::forbidden_perp_type, "perp type nu must be -1 or 1");
  return ValidityVerdict::ok();
}

ValidityVerdict validate_for(Family family, const ProfileParams& p) {
  using R = InvalidReason;
  // rho decides between the plain and the perp-restricted proportion by
  // whether lambda is given, so the generic "lambda required" rule is relaxed.
  if (family == Family::rho && !p.lambda && odd(p.n) && odd(p.j - p.i)) {
    ProfileParams relaxed = p;
    relaxed.lambda = kHyp;
    if (auto v = validate(relaxed); !v) return v;
  } else if (auto v = validate(p); !v) {
    return v;
  }

  auto exists = [&] {
    return profile_exists(p.i, p.j, p.delta, p.n, p.eps)
               ? ValidityVerdict::ok()
               : fail(R::empty_profile, "no i-singular j-space of type delta exists when i + j = n and delta != eps");
  };

  switch (family) {
    case Family::alpha:
      if (p.k || p.nu) return fail(R::unexpected_parameter, "alpha takes no k, zeta, mu, eta or nu");
      return ValidityVerdict::ok();

    case Family::beta:
      if (!p.k) return fail(R::missing_parameter, "beta needs k and zeta");
      if (p.mu || p.eta || p.nu) return fail(R::unexpected_parameter, "beta takes no mu, eta or nu");
      if (*p.k < p.i + p.j) return fail(R::range_violation, "need i + j <= k <= n");
      return exists();

    case Family::beta_nu:
      if (!p.k || !p.nu) return fail(R::missing_parameter, "beta_nu needs k and nu");
      if (p.mu || p.eta) return fail(R::unexpected_parameter, "beta_nu takes no mu or eta");
      if (*p.k < p.i + p.j) return fail(R::range_violation, "need i + j <= k <= n");
      if (!(odd(*p.k) && odd(p.j - p.i)))
        return fail(R::parity_violation, "perp type inside sigma needs k(j-i) odd");
      if (odd(p.n) && p.i + p.j == p.n) return fail(R::range_violation, "k(j-i) odd needs n > i + j when n is odd");
      return exists();

    case Family::gamma:
      if (!p.k || !p.eta) return fail(R::missing_parameter, "gamma needs k, zeta and eta");
      if (p.nu) return fail(R::unexpected_parameter, "gamma takes no nu");
      if (p.mu && !(*p.k == p.n - p.j && odd(p.n) && !odd(p.j)))
        return fail(R::forbidden_perp_type, "mu is only supported for k = n - j with n odd and j even");
      return exists();

    case Family::rho:
      if (!p.k || !p.eta) return fail(R::missing_parameter, "rho needs k, zeta and eta");
      if (p.mu || p.nu) return fail(R::unexpected_parameter, "rho takes no mu or nu");
      if (p.i != 0) return fail(R::range_violation, "rho compares non-singular spaces: i must be 0");
      if (p.j > p.n - 1 || *p.k > p.n - 1) return fail(R::range_violation, "need j, k <= n - 1");
      return exists();
  }
  return ValidityVerdict::ok();
}

void require_valid(Family family, const ProfileParams& p) {
  if (auto v = validate_for(family, p); !v) throw InvalidParams(std::move(v));
}

std::vector<FormType> ambient_types(int n) {
  if (odd(n)) return {kPar};
  return {kEll, kHyp};
}

std::vector<FormType> nondegenerate_types(int k) {
  if (k == 0) return {kHyp};
  return ambient_types(k);
}

std::vector<ProfileParams> subspace_profiles(int n, FormType eps, int j) {
  std::vector<ProfileParams> out;
  for (int i = 0; i <= j && i + j <= n; ++i) {
    ProfileParams p;
    p.n = n;
    p.eps = eps;
    p.i = i;
    p.j = j;
    if (odd(j - i)) {
      p.delta = kPar;
      if (odd(n)) {
        if (n != i + j) {
          p.lambda = kEll;
          out.push_back(p);
        }
        p.lambda = kHyp;
      }
      out.push_back(p);
    } else if (i == j) {
      p.delta = kHyp;
      out.push_back(p);
    } else {
      for (FormType d : {kEll, kHyp}) {
        p.delta = d;
        out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<ProfileParams> subspace_profiles(int n, FormType eps) {
  std::vector<ProfileParams> out;
  for (int j = 0; j <= n; ++j) {
    auto part = subspace_profiles(n, eps, j);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace orthocount
