#include "orthocount/verify.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include "orthocount/anzahl.hpp"
#include "orthocount/oracle.hpp"

namespace orthocount::verify {

using geometry::Classification;
using geometry::GramForm;
using geometry::Subspace;
using oracle::ComplementKey;
using oracle::ExtensionKey;

const char* status_name(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void check_primes(const std::vector<int>& primes) {
  for (int p : primes) {
    if (!geometry::is_odd_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    if (p >= 64) throw std::invalid_argument(std::to_string(p) + " is too large for enumeration (need p < 64)");
  }
}

std::vector<ProfileParams> sweep_profiles(Family family, int n, FormType eps) {
  std::vector<ProfileParams> out;
  auto keep = [&](const ProfileParams& p) {
    if (validate_for(family, p)) out.push_back(p);
  };
  const std::vector<std::optional<FormType>> perp_choices{std::nullopt, kEll, kHyp};

  if (family == Family::alpha) return subspace_profiles(n, eps);
  if (family == Family::rho) {
    for (int j = 0; j < n; ++j)
      for (FormType delta : nondegenerate_types(j))
        for (const auto& lambda : perp_choices)
          for (int k = 0; k < n && j + k <= n; ++k)
            for (FormType zeta : nondegenerate_types(k))
              for (FormType eta : nondegenerate_types(j + k)) {
                ProfileParams p;
                p.n = n;
                p.eps = eps;
                p.j = j;
                p.delta = delta;
                p.lambda = lambda;
                p.k = k;
                p.zeta = zeta;
                p.eta = eta;
                keep(p);
              }
    return out;
  }
  for (const ProfileParams& pi : subspace_profiles(n, eps)) {
    for (int k = 0; k <= n; ++k) {
      ProfileParams p = pi;
      p.k = k;
      if (family == Family::beta) {
        for (FormType zeta : nondegenerate_types(k)) {
          p.zeta = zeta;
          keep(p);
        }
      } else if (family == Family::beta_nu) {
        p.zeta = kPar;
        for (FormType nu : {kEll, kHyp}) {
          p.nu = nu;
          keep(p);
        }
      } else {
        if (k + pi.j > n) continue;
        for (FormType zeta : nondegenerate_types(k))
          for (FormType eta : nondegenerate_types(k + pi.j))
            for (const auto& mu : perp_choices) {
              p.zeta = zeta;
              p.eta = eta;
              p.mu = mu;
              keep(p);
            }
      }
    }
  }
  return out;
}

namespace {

Classification class_of(const ProfileParams& p) {
  return Classification{p.i, p.delta, p.lambda};
}

// What the oracle knows about one ambient space: class sizes per dimension
// and, per class, the tallies of each sampled representative.
struct Ambient {
  struct RepTallies {
    std::map<ExtensionKey, long long> extensions;
    std::map<ComplementKey, long long> complements;
  };
  std::vector<std::map<Classification, long long>> sizes;
  std::vector<std::map<Classification, std::vector<RepTallies>>> reps;
};

std::size_t reps_per_class(int n, const SweepOptions& o) {
  if (n <= o.all_reps_up_to) return 0;
  return n <= o.n_sample_shrink ? o.sampled_reps : o.sampled_reps_large;
}

Ambient explore(const GramForm& form, bool extensions, bool complements, const SweepOptions& o) {
  const int n = form.n();
  Ambient a;
  a.sizes.resize(static_cast<std::size_t>(n + 1));
  a.reps.resize(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) a.sizes[static_cast<std::size_t>(j)] = oracle::tally_subspaces(form, j, o.jobs);
  if (!extensions && !complements) return a;

  struct Task {
    int j;
    Classification c;
    Subspace pi;
  };
  std::vector<Task> tasks;
  for (int j = 0; j <= n; ++j)
    for (auto& [c, list] : oracle::representatives(form, j, reps_per_class(n, o), o.seed))
      for (auto& s : list) tasks.push_back({j, c, s});

  auto tallies = geometry::parallel_map<Ambient::RepTallies>(tasks.size(), o.jobs, [&](std::size_t t) {
    Ambient::RepTallies r;
    if (extensions) r.extensions = oracle::tally_extensions(form, tasks[t].pi);
    if (complements) r.complements = oracle::tally_complements(form, tasks[t].pi, 0, n, 1);
    return r;
  });
  for (std::size_t t = 0; t < tasks.size(); ++t)
    a.reps[static_cast<std::size_t>(tasks[t].j)][tasks[t].c].push_back(std::move(tallies[t]));
  return a;
}

long long count_beta(const Ambient::RepTallies& r, const ProfileParams& p, bool by_nu) {
  long long total = 0;
  for (const auto& [key, count] : r.extensions) {
    if (key.k != *p.k) continue;
    if (by_nu ? key.nu == p.nu : key.zeta == *p.zeta) total += count;
  }
  return total;
}

long long count_gamma(const Ambient::RepTallies& r, int k, FormType zeta, std::optional<FormType> mu, FormType eta) {
  long long total = 0;
  for (const auto& [key, count] : r.complements)
    if (key.k == k && key.zeta == zeta && key.eta == eta && (!mu || key.mu == mu)) total += count;
  return total;
}

BigRational from(long long v) { return BigRational(static_cast<long>(v)); }

// Oracle value for one profile; sets a reason when it cannot be determined.
std::optional<BigRational> oracle_value(Family family, const ProfileParams& p, const Ambient& a, std::string& reason) {
  const auto& sizes_j = a.sizes[static_cast<std::size_t>(p.j)];
  if (family == Family::alpha) {
    const auto it = sizes_j.find(class_of(p));
    return from(it == sizes_j.end() ? 0 : it->second);
  }
  if (family == Family::rho) {
    long long second = 0;
    for (const auto& [c, count] : a.sizes[static_cast<std::size_t>(*p.k)])
      if (c.radical_dim == 0 && c.type == *p.zeta) second += count;
    BigInt pairs = 0;
    BigInt good = 0;
    for (const auto& [c, reps] : a.reps[static_cast<std::size_t>(p.j)]) {
      if (c.radical_dim != 0 || c.type != p.delta || (p.lambda && c.perp_type != p.lambda)) continue;
      const long long orbit = sizes_j.at(c);
      pairs += BigInt(static_cast<long>(orbit)) * static_cast<long>(second);
      good += BigInt(static_cast<long>(orbit)) *
              static_cast<long>(count_gamma(reps.front(), *p.k, *p.zeta, std::nullopt, *p.eta));
    }
    if (pairs == 0) {
      reason = "no pairs with this profile exist";
      return std::nullopt;
    }
    BigRational r(good, pairs);
    r.canonicalize();
    return r;
  }

  const auto it = a.reps[static_cast<std::size_t>(p.j)].find(class_of(p));
  if (it == a.reps[static_cast<std::size_t>(p.j)].end() || it->second.empty()) {
    reason = "no subspace of this profile exists";
    return std::nullopt;
  }
  std::optional<long long> first;
  for (const auto& rep : it->second) {
    const long long v = family == Family::gamma ? count_gamma(rep, *p.k, *p.zeta, p.mu, *p.eta)
                                                : count_beta(rep, p, family == Family::beta_nu);
    if (!first) {
      first = v;
    } else if (v != *first) {
      reason = "count depends on the representative: " + std::to_string(*first) + " vs " + std::to_string(v);
    }
  }
  return from(*first);
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int t = 0; t < e; ++t) {
    if (r > (1LL << 40)) return r;
    r *= b;
  }
  return r;
}

}  // namespace

std::vector<SweepReport> sweep_formula_vs_oracle(Family family, const SweepOptions& options) {
  check_primes(options.primes);
  if (options.n_max > geometry::kMaxDim) throw std::invalid_argument("n_max above the enumeration limit of 8");
  std::vector<SweepReport> out;
  for (int p : options.primes) {
    for (int n = 1; n <= options.n_max; ++n) {
      for (FormType eps : ambient_types(n)) {
        const auto profiles = sweep_profiles(family, n, eps);
        if (profiles.empty()) continue;
        const bool within = ipow(p, n) <= options.max_vectors;
        std::unique_ptr<Ambient> ambient;
        if (within) {
          const GramForm form = GramForm::standard(geometry::PrimeField(p), n, eps);
          const bool ext = family == Family::beta || family == Family::beta_nu;
          const bool comp = family == Family::gamma || family == Family::rho;
          ambient = std::make_unique<Ambient>(explore(form, ext, comp, options));
        }
        for (const ProfileParams& prof : profiles) {
          SweepReport r;
          r.family = family;
          r.profile = prof;
          r.q = p;
          if (!within) {
            r.status = Status::skipped;
            r.reason = "outside enumeration budget: " + std::to_string(p) + "^" + std::to_string(n) + " > " +
                       std::to_string(options.max_vectors);
            out.push_back(std::move(r));
            continue;
          }
          r.formula_value = evaluate(family, prof).eval(BigRational(p));
          r.oracle_value = oracle_value(family, prof, *ambient, r.reason);
          const bool agree = r.oracle_value && *r.oracle_value == *r.formula_value;
          r.status = agree && r.reason.empty() ? Status::match : Status::mismatch;
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

std::vector<SweepReport> sweep_all(const SweepOptions& options) {
  std::vector<SweepReport> out;
  for (Family f : {Family::alpha, Family::beta, Family::beta_nu, Family::gamma, Family::rho}) {
    auto part = sweep_formula_vs_oracle(f, options);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace orthocount::verify
