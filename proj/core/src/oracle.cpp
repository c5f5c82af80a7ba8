#include "orthocount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace orthocount::oracle {

using geometry::PivotPattern;
using geometry::SubspaceCursor;
using geometry::Vec;

namespace {

template <typename Key>
void merge_into(std::map<Key, long long>& into, const std::map<Key, long long>& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

void check_dim(const GramForm& form, int j, const char* what) {
  if (j < 0 || j > form.n()) throw std::invalid_argument(std::string(what) + " dimension out of range");
}

}  // namespace

std::map<Classification, long long> tally_subspaces(const GramForm& form, int j, int jobs) {
  check_dim(form, j, "subspace");
  using Tally = std::map<Classification, long long>;
  const auto parts = geometry::partitioned<Tally>(form.n(), j, jobs, [&](const std::vector<PivotPattern>& pats) {
    Tally t;
    SubspaceCursor cursor(form.field(), form.n(), j, pats);
    Subspace s;
    while (cursor.next(s)) ++t[geometry::classify(form, s)];
    return t;
  });
  Tally total;
  for (const auto& t : parts) merge_into(total, t);
  return total;
}

long long oracle_alpha(const GramForm& form, int i, int j, FormType delta, OptType lambda, int jobs) {
  long long total = 0;
  for (const auto& [c, count] : tally_subspaces(form, j, jobs))
    if (c.radical_dim == i && c.type == delta && (!lambda || c.perp_type == lambda)) total += count;
  return total;
}

std::map<ExtensionKey, long long> tally_extensions(const GramForm& form, const Subspace& pi) {
  const geometry::PrimeField& f = form.field();
  const int n = form.n();
  const int j = pi.dim();
  const Classification pc = geometry::classify(form, pi);
  const bool odd_quotient = (j - pc.radical_dim) % 2 != 0;

  // Every sigma containing pi is pi + tau for a unique tau inside the span of
  // the unit vectors off pi's pivot columns.
  std::vector<int> off_pivot;
  for (int c = 0, r = 0; c < n; ++c) {
    if (r < j && pi.pivot(r) == c) {
      ++r;
      continue;
    }
    off_pivot.push_back(c);
  }
  const int m = n - j;
  std::map<ExtensionKey, long long> out;
  std::vector<Vec> rows = pi.rows();
  const std::vector<Vec> pi_rows = pi.rows();
  for (int extra = 0; extra <= m; ++extra) {
    const int k = j + extra;
    SubspaceCursor cursor(f, m, extra);
    Subspace tau;
    while (cursor.next(tau)) {
      rows.resize(static_cast<std::size_t>(j));
      for (int r = 0; r < extra; ++r) {
        Vec v{};
        for (int c = 0; c < m; ++c) v[static_cast<std::size_t>(off_pivot[static_cast<std::size_t>(c)])] = tau.row(r)[static_cast<std::size_t>(c)];
        rows.push_back(v);
      }
      const Classification sc = geometry::classify_rows(form, rows.data(), k);
      if (sc.radical_dim != 0) continue;
      ExtensionKey key{k, sc.type, std::nullopt};
      if (odd_quotient && k % 2 != 0) {
        const auto inside = geometry::perp_within(form, rows.data(), k, pi_rows.data(), j);
        key.nu = geometry::classify_rows(form, inside.data(), static_cast<int>(inside.size())).type;
      }
      ++out[key];
    }
  }
  return out;
}

long long oracle_beta(const GramForm& form, const Subspace& pi, int k, FormType zeta, OptType nu) {
  long long total = 0;
  for (const auto& [key, count] : tally_extensions(form, pi))
    if (key.k == k && key.zeta == zeta && (!nu || key.nu == nu)) total += count;
  return total;
}

std::map<ComplementKey, long long> tally_complements(const GramForm& form, const Subspace& pi, int k_lo, int k_hi,
                                                      int jobs) {
  const int n = form.n();
  const int j = pi.dim();
  k_lo = std::max(k_lo, 0);
  k_hi = std::min(k_hi, n - j);
  using Tally = std::map<ComplementKey, long long>;
  Tally out;
  const std::vector<Vec> pi_rows = pi.rows();
  for (int k = k_lo; k <= k_hi; ++k) {
    const auto parts = geometry::partitioned<Tally>(n, k, jobs, [&](const std::vector<PivotPattern>& pats) {
      Tally t;
      SubspaceCursor cursor(form.field(), n, k, pats);
      Subspace sigma;
      std::vector<Vec> rows;
      while (cursor.next(sigma)) {
        rows = pi_rows;
        for (int r = 0; r < k; ++r) rows.push_back(sigma.row(r));
        if (geometry::rank(form.field(), n, rows) != j + k) continue;
        const Classification sc = geometry::classify(form, sigma);
        if (sc.radical_dim != 0) continue;
        const Classification span = geometry::classify_rows(form, rows.data(), j + k);
        if (span.radical_dim != 0) continue;
        ++t[ComplementKey{k, sc.type, sc.perp_type, span.type}];
      }
      return t;
    });
    for (const auto& t : parts) merge_into(out, t);
  }
  return out;
}

long long oracle_gamma(const GramForm& form, const Subspace& pi, int k, FormType zeta, OptType mu, FormType eta,
                       int jobs) {
  long long total = 0;
  for (const auto& [key, count] : tally_complements(form, pi, k, k, jobs))
    if (key.zeta == zeta && key.eta == eta && (!mu || key.mu == mu)) total += count;
  return total;
}

BigRational oracle_rho(const GramForm& form, int j, FormType delta, int k, FormType zeta, FormType eta,
                       OptType lambda, int jobs) {
  check_dim(form, j, "first");
  check_dim(form, k, "second");
  long long second = 0;
  for (const auto& [c, count] : tally_subspaces(form, k, jobs))
    if (c.radical_dim == 0 && c.type == zeta) second += count;

  BigInt pairs = 0;
  BigInt good = 0;
  for (const auto& [c, reps] : representatives(form, j, 1)) {
    if (c.radical_dim != 0 || c.type != delta || (lambda && c.perp_type != lambda)) continue;
    const long long orbit = oracle_alpha(form, 0, j, delta, c.perp_type, jobs);
    pairs += BigInt(static_cast<long>(orbit)) * static_cast<long>(second);
    if (j + k <= form.n()) good += BigInt(static_cast<long>(orbit)) *
                                    static_cast<long>(oracle_gamma(form, reps.front(), k, zeta, std::nullopt, eta, jobs));
  }
  if (pairs == 0) throw std::domain_error("proportion over an empty set of pairs");
  BigRational out(good, pairs);
  out.canonicalize();
  return out;
}

std::map<Classification, std::vector<Subspace>> representatives(const GramForm& form, int j, std::size_t per_class,
                                                                 std::uint64_t seed) {
  check_dim(form, j, "subspace");
  // First pass: the class of every subspace by enumeration index.
  std::map<Classification, std::vector<std::size_t>> positions;
  {
    SubspaceCursor cursor(form.field(), form.n(), j);
    Subspace s;
    for (std::size_t idx = 0; cursor.next(s); ++idx) positions[geometry::classify(form, s)].push_back(idx);
  }
  std::vector<std::pair<std::size_t, Classification>> wanted;
  std::mt19937_64 rng(seed);
  for (auto& [c, idx] : positions) {
    std::vector<std::size_t> chosen;
    if (per_class == 0 || idx.size() <= per_class) {
      chosen = idx;
    } else {
      std::sample(idx.begin(), idx.end(), std::back_inserter(chosen), per_class, rng);
    }
    for (std::size_t at : chosen) wanted.emplace_back(at, c);
  }
  std::sort(wanted.begin(), wanted.end());

  std::map<Classification, std::vector<Subspace>> out;
  SubspaceCursor cursor(form.field(), form.n(), j);
  Subspace s;
  std::size_t idx = 0;
  for (const auto& [at, c] : wanted) {
    while (idx <= at) {
      cursor.next(s);
      ++idx;
    }
    out[c].push_back(s);
  }
  return out;
}

}  // namespace orthocount::oracle
