// Prints one PASS/FAIL line per acceptance criterion. `--criterion N` runs a
// single one; the exit status is non-zero when any criterion run fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "orthocount/anzahl.hpp"
#include "orthocount/verify.hpp"

namespace {

using namespace orthocount;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

ProfileParams profile(int n, FormType eps, int i, int j, FormType delta, OptType lambda = {}) {
  ProfileParams p;
  p.n = n;
  p.eps = eps;
  p.i = i;
  p.j = j;
  p.delta = delta;
  p.lambda = lambda;
  return p;
}

ProfileParams with_k(ProfileParams p, int k, FormType zeta, OptType eta = {}, OptType nu = {}) {
  p.k = k;
  p.zeta = zeta;
  p.eta = eta;
  p.nu = nu;
  return p;
}

ProfileParams rho_profile(int j, FormType delta, int k, FormType zeta, int n, FormType eps, FormType eta,
                          OptType lambda = {}) {
  ProfileParams p = profile(n, eps, 0, j, delta, lambda);
  return with_k(p, k, zeta, eta);
}

Outcome worked_values() {
  struct Fixture {
    std::string name;
    Family family;
    ProfileParams p;
    Ratio expected;
  };
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly d7 = P("q^4 + q^2 + 1");
  const Ratio rho_plus(P("1/2") * P("q^2 + 1") * pow(P("q - 1"), 2), d7);
  const Ratio rho_minus(P("1/2*q^5 - q^3 + q^2 - 1/2*q + 1"), q * d7);
  const std::vector<Fixture> fixtures{
      {"alpha (1,1,1),(3,0)", Family::alpha, profile(3, kPar, 1, 1, kHyp), P("q + 1")},
      {"alpha (0,2,1),(3,0)", Family::alpha, profile(3, kPar, 0, 2, kHyp), P("1/2*q") * P("q + 1")},
      {"alpha (0,1,0,-1),(3,0)", Family::alpha, profile(3, kPar, 0, 1, kPar, kEll), P("1/2*q") * P("q - 1")},
      {"alpha (0,2,1),(4,1)", Family::alpha, profile(4, kHyp, 0, 2, kHyp), P("1/2*q^2") * pow(P("q + 1"), 2)},
      {"beta (0,2,1),(4,1),(3,0)", Family::beta, with_k(profile(4, kHyp, 0, 2, kHyp), 3, kPar), P("q - 1")},
      {"beta_nu (0,3,0),(6,1),(5,0) nu=1", Family::beta_nu,
       with_k(profile(6, kHyp, 0, 3, kPar), 5, kPar, {}, kHyp), P("1/2*q") * P("q + 1")},
      {"beta_nu (0,3,0),(6,1),(5,0) nu=-1", Family::beta_nu,
       with_k(profile(6, kHyp, 0, 3, kPar), 5, kPar, {}, kEll), P("1/2*q") * P("q - 1")},
      {"gamma (0,3,0,-1),(5,0),(2,1),0", Family::gamma, with_k(profile(5, kPar, 0, 3, kPar, kEll), 2, kHyp, kPar),
       P("1/2*q^4") * P("q^2 - 1")},
      {"gamma (0,3,0,1),(5,0),(2,1),0", Family::gamma, with_k(profile(5, kPar, 0, 3, kPar, kHyp), 2, kHyp, kPar),
       P("1/2*q^2") * P("q^4 - q^2 + 2")},
      {"gamma (0,2,1),(4,1),(2,1),1", Family::gamma, with_k(profile(4, kHyp, 0, 2, kHyp), 2, kHyp, kHyp),
       P("1/2*q") * P("q^3 + q^2 - 3*q + 3")},
      {"gamma (0,2,1),(5,0),(3,0),0", Family::gamma, with_k(profile(5, kPar, 0, 2, kHyp), 3, kPar, kPar),
       P("q^2") * P("q^4 - q^3 + 1")},
      {"gamma (1,2,0,1),(5,0),(3,0),0", Family::gamma, with_k(profile(5, kPar, 1, 2, kPar, kHyp), 3, kPar, kPar),
       P("q^5") * P("q - 1")},
      {"gamma (1,3,1),(6,1),(3,0),1", Family::gamma, with_k(profile(6, kHyp, 1, 3, kHyp), 3, kPar, kHyp),
       P("q^4") * P("q^5 - q^4 - 2*q^2 + 4*q - 2")},
      {"gamma (2,3,0),(6,1),(3,0),1", Family::gamma, with_k(profile(6, kHyp, 2, 3, kPar), 3, kPar, kHyp),
       P("q^5") * P("q - 1") * P("q^3 - 2")},
      {"gamma (0,3,0),(6,1),(2,1),0", Family::gamma, with_k(profile(6, kHyp, 0, 3, kPar), 2, kHyp, kPar),
       P("1/2*q^3") * P("q^5 - q^3 + q + 1")},
      {"rho (2,1),(4,-1),(7,0),1", Family::rho, rho_profile(2, kHyp, 4, kEll, 7, kPar, kHyp), rho_plus},
      {"rho (2,1),(4,-1),(7,0),-1", Family::rho, rho_profile(2, kHyp, 4, kEll, 7, kPar, kEll), rho_minus},
  };
  Outcome o;
  for (const auto& f : fixtures) {
    try {
      const Ratio got = evaluate(f.family, f.p);
      if (!(got == f.expected)) o.fail(f.name + ": got " + got.num().str() + " / (" + got.den().str() + ")");
    } catch (const std::exception& e) {
      o.fail(f.name + ": " + e.what());
    }
  }
  const Ratio sum = evaluate(Family::rho, fixtures[15].p) + evaluate(Family::rho, fixtures[16].p);
  const Ratio expected_sum(q * d7 - P("q^4 + q^3 + q - 1"), q * d7);
  if (!(sum == expected_sum)) o.fail("rho (2,1),(4,-1),(7,0) sum over eta");
  o.detail = std::to_string(fixtures.size() + 1) + " values";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const auto reports = verify::run_identity_suite(10);
  std::map<std::string, int> per_id;
  for (const auto& r : reports) {
    ++per_id[verify::identity_name(r.id)];
    if (r.status != verify::Status::match) {
      std::ostringstream os;
      os << verify::identity_name(r.id);
      for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
      o.fail(os.str() + ": " + r.reason);
    }
  }
  for (verify::IdentityId id : verify::all_identities())
    if (per_id[verify::identity_name(id)] == 0) o.fail(std::string(verify::identity_name(id)) + ": no instances");
  o.detail = std::to_string(reports.size()) + " identity instances, n <= 10, pascal b <= 12";
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  std::size_t checked = 0;
  auto sweep = [&](int p, int n_max) {
    verify::SweepOptions opts;
    opts.primes = {p};
    opts.n_max = n_max;
    for (const auto& r : verify::sweep_all(opts)) {
      ++checked;
      if (r.status == verify::Status::skipped) {
        o.fail(std::string(family_name(r.family)) + " " + describe(r.profile) + " p=" + std::to_string(p) +
               " skipped: " + r.reason);
      } else if (r.status == verify::Status::mismatch) {
        o.fail(std::string(family_name(r.family)) + " " + describe(r.profile) + " p=" + std::to_string(p) + ": " +
               (r.formula_value ? to_string(*r.formula_value) : "-") + " vs " +
               (r.oracle_value ? to_string(*r.oracle_value) : "-") + " " + r.reason);
      }
    }
  };
  sweep(3, 6);
  sweep(5, 4);
  o.detail = std::to_string(checked) + " profiles at p=3 (n <= 6) and p=5 (n <= 4)";
  return o;
}

Outcome bounds() {
  Outcome o;
  int checks = 0;
  auto check = [&](const std::string& name, const Ratio& r, long q, const BigRational& c, bool strict) {
    ++checks;
    const BigRational value = r.eval(BigRational(q));
    const BigRational bound = 1 - c / q;
    const bool ok = strict ? value > bound : value >= bound;
    if (!ok)
      o.fail(name + " at q=" + std::to_string(q) + ": " + to_string(value) + (strict ? " > " : " >= ") +
             to_string(bound) + " does not hold");
  };
  const Ratio small = evaluate(Family::rho, rho_profile(2, kHyp, 2, kHyp, 4, kHyp, kHyp));
  for (long q : {3, 5, 7, 9, 11}) check("rho (2,1),(2,1),(4,1),1", small, q, BigRational(7, 6), false);
  const Ratio restricted = evaluate(Family::rho, rho_profile(3, kPar, 2, kHyp, 5, kPar, kPar, kHyp));
  for (long q : {3, 5, 7}) check("rho (3,0,1),(2,1),(5,0),0", restricted, q, BigRational(23, 20), true);
  const Ratio combined = evaluate(Family::rho, rho_profile(2, kHyp, 4, kEll, 7, kPar, kHyp)) +
                         evaluate(Family::rho, rho_profile(2, kHyp, 4, kEll, 7, kPar, kEll));
  for (long q : {3, 5, 7}) check("rho (2,1),(4,-1),(7,0) combined", combined, q, BigRational(110, 91), false);
  o.detail = std::to_string(checks) + " exact comparisons";
  return o;
}

Outcome integrality() {
  Outcome o;
  std::mt19937_64 gen(2024);
  const std::vector<Family> families{Family::alpha, Family::beta, Family::beta_nu, Family::gamma};
  std::map<std::tuple<int, int, int>, std::vector<ProfileParams>> cache;
  int sampled = 0;
  while (sampled < 1000) {
    const Family f = families[gen() % families.size()];
    const int n = 1 + static_cast<int>(gen() % 12);
    const auto types = ambient_types(n);
    const FormType eps = types[gen() % types.size()];
    auto& pool = cache[{static_cast<int>(f), n, sign(eps)}];
    if (pool.empty()) pool = verify::sweep_profiles(f, n, eps);
    if (pool.empty()) continue;
    const ProfileParams& p = pool[gen() % pool.size()];
    ++sampled;
    const Ratio v = evaluate(f, p);
    for (long q : {3, 5, 7, 9}) {
      const BigRational x = v.eval(BigRational(q));
      if (x.get_den() != 1 || x < 0)
        o.fail(std::string(family_name(f)) + " " + describe(p) + " at q=" + std::to_string(q) + " is " + to_string(x));
    }
  }
  o.detail = std::to_string(sampled) + " profiles with n <= 12 at q in {3,5,7,9}";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked-value fixtures", worked_values},
      {"symbolic identity suite", identity_suite},
      {"oracle equivalence sweep", oracle_sweep},
      {"quantitative bounds", bounds},
      {"integrality of counts", integrality},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  else if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }

  bool all = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (only != 0 && static_cast<int>(c) + 1 != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c + 1 << " " << criteria[c].first << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : o.failures) std::cout << "  " << f << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
