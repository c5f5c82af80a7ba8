#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "orthocount/anzahl.hpp"
#include "orthocount/geometry.hpp"
#include "orthocount/verify.hpp"

namespace orthocount::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.3.0";

// Raised for input that does not parse into a query at all (exit 3).
struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

struct ProfileArgs {
  std::optional<int> n, eps, i, j, delta, lambda, k, zeta, mu, eta, nu;
};

void add_profile_options(CLI::App& cmd, ProfileArgs& a) {
  cmd.add_option("--n", a.n, "ambient dimension");
  cmd.add_option("--eps", a.eps, "ambient type (-1, 0, 1)");
  cmd.add_option("--i", a.i, "radical dimension of pi (default 0)");
  cmd.add_option("--j", a.j, "dimension of pi");
  cmd.add_option("--delta", a.delta, "type of pi");
  cmd.add_option("--lambda", a.lambda, "perp type of pi");
  cmd.add_option("--k", a.k, "dimension of sigma");
  cmd.add_option("--zeta", a.zeta, "type of sigma");
  cmd.add_option("--mu", a.mu, "perp type of sigma");
  cmd.add_option("--eta", a.eta, "type of the span");
  cmd.add_option("--nu", a.nu, "perp type of pi inside sigma");
}

FormType to_type(const std::optional<int>& v, const char* name) {
  if (*v < -1 || *v > 1) throw Malformed(std::string("--") + name + " must be -1, 0 or 1");
  return form_type(*v);
}

std::optional<FormType> to_opt_type(const std::optional<int>& v, const char* name) {
  if (!v) return std::nullopt;
  return to_type(v, name);
}

ProfileParams to_profile(const ProfileArgs& a) {
  for (auto [v, name] : {std::pair{&a.n, "n"}, {&a.eps, "eps"}, {&a.j, "j"}, {&a.delta, "delta"}})
    if (!*v) throw Malformed(std::string("--") + name + " is required");
  ProfileParams p;
  p.n = *a.n;
  p.eps = to_type(a.eps, "eps");
  p.i = a.i.value_or(0);
  p.j = *a.j;
  p.delta = to_type(a.delta, "delta");
  p.lambda = to_opt_type(a.lambda, "lambda");
  p.k = a.k;
  p.zeta = to_opt_type(a.zeta, "zeta");
  p.mu = to_opt_type(a.mu, "mu");
  p.eta = to_opt_type(a.eta, "eta");
  p.nu = to_opt_type(a.nu, "nu");
  return p;
}

Family to_family(const std::string& s) {
  auto f = family_from_name(s);
  if (!f) throw Malformed("unknown family '" + s + "' (expected alpha, beta, beta_nu, gamma or rho)");
  return *f;
}

Format to_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw Malformed("unknown format '" + s + "' (expected csv or json)");
}

bool is_odd_prime_power(long long q) {
  if (q < 3 || q % 2 == 0) return false;
  long long p = 3;
  while (p * p <= q && q % p != 0) p += 2;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::optional<BigRational> to_q(const std::optional<long long>& q) {
  if (!q) return std::nullopt;
  if (!is_odd_prime_power(*q)) throw Malformed("q must be an odd prime power >= 3, got " + std::to_string(*q));
  return BigRational(static_cast<long>(*q));
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json type_json(const std::optional<FormType>& t) { return t ? ordered_json(sign(*t)) : ordered_json(nullptr); }

ordered_json profile_json(const ProfileParams& p) {
  ordered_json j;
  j["n"] = p.n;
  j["eps"] = sign(p.eps);
  j["i"] = p.i;
  j["j"] = p.j;
  j["delta"] = sign(p.delta);
  j["lambda"] = type_json(p.lambda);
  j["k"] = p.k ? ordered_json(*p.k) : ordered_json(nullptr);
  j["zeta"] = type_json(p.zeta);
  j["mu"] = type_json(p.mu);
  j["eta"] = type_json(p.eta);
  j["nu"] = type_json(p.nu);
  return j;
}

ordered_json document(const std::string& command, bool stamp) {
  ordered_json doc;
  doc["tool"] = "orthocount";
  doc["version"] = kVersion;
  doc["command"] = command;
  if (stamp) doc["generated_at"] = timestamp();
  doc["reports"] = ordered_json::array();
  return doc;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t t = 0; t < fields.size(); ++t) out << (t ? "," : "") << csv_field(fields[t]);
  out << "\r\n";
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
std::string opt_str(const std::optional<FormType>& v) { return v ? std::to_string(sign(*v)) : std::string(); }

const std::vector<std::string> kProfileColumns{"n", "eps", "i", "j", "delta", "lambda", "k", "zeta", "mu", "eta", "nu"};

std::vector<std::string> profile_fields(const ProfileParams& p) {
  return {std::to_string(p.n), std::to_string(sign(p.eps)), std::to_string(p.i), std::to_string(p.j),
          std::to_string(sign(p.delta)), opt_str(p.lambda), opt_str(p.k), opt_str(p.zeta),
          opt_str(p.mu), opt_str(p.eta), opt_str(p.nu)};
}

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string family;
  ProfileArgs profile;
  std::optional<long long> q;
  std::string output = "auto";
  std::string format = "text";
  bool no_timestamp = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Family family = to_family(a.family);
  const Format format = to_format(a.format);
  const ProfileParams p = to_profile(a.profile);
  const auto q = to_q(a.q);
  std::string mode = a.output == "auto" ? (q ? "both" : "symbolic") : a.output;
  if (mode != "symbolic" && mode != "numeric" && mode != "both")
    throw Malformed("--output must be symbolic, numeric or both");
  if (mode != "symbolic" && !q) throw Malformed("--output " + mode + " needs --q");

  const Ratio value = evaluate(family, p);
  const std::string symbolic = value.str();
  const std::string numeric = q ? to_string(value.eval(*q)) : std::string();

  switch (format) {
    case Format::text:
      if (mode == "symbolic") out << symbolic << "\n";
      else if (mode == "numeric") out << numeric << "\n";
      else out << symbolic << " = " << numeric << "\n";
      break;
    case Format::csv:
      csv_row(out, with(with({"family"}, kProfileColumns), {"q", "symbolic", "numeric"}));
      csv_row(out, with(with({family_name(family)}, profile_fields(p)),
                        {q ? to_string(*q) : "", mode == "numeric" ? "" : symbolic, numeric}));
      break;
    case Format::json: {
      ordered_json doc = document("eval", !a.no_timestamp);
      ordered_json r;
      r["family"] = family_name(family);
      r["profile"] = profile_json(p);
      r["q"] = a.q ? ordered_json(*a.q) : ordered_json(nullptr);
      r["symbolic"] = mode == "numeric" ? ordered_json(nullptr) : ordered_json(symbolic);
      r["numeric"] = q ? ordered_json(numeric) : ordered_json(nullptr);
      doc["reports"].push_back(r);
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// ---- table ------------------------------------------------------------------

struct TableArgs {
  std::string family;
  std::optional<int> n;
  int n_min = 1;
  int n_max = 5;
  std::optional<int> eps;
  std::optional<long long> q;
  std::string format = "csv";
  bool no_timestamp = false;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  const Family family = to_family(a.family);
  const Format format = to_format(a.format);
  const auto q = to_q(a.q);
  const int lo = a.n ? *a.n : a.n_min;
  const int hi = a.n ? *a.n : a.n_max;
  if (lo < 1 && lo <= hi) throw InvalidParams(ValidityVerdict::fail(InvalidReason::range_violation, "n must be positive"));
  const auto eps_filter = to_opt_type(a.eps, "eps");

  struct Row {
    ProfileParams p;
    std::string symbolic;
    std::string numeric;
  };
  std::vector<Row> rows;
  for (int n = lo; n <= hi; ++n)
    for (FormType eps : ambient_types(n)) {
      if (eps_filter && *eps_filter != eps) continue;
      for (const ProfileParams& p : verify::sweep_profiles(family, n, eps)) {
        const Ratio v = evaluate(family, p);
        rows.push_back({p, v.str(), q ? to_string(v.eval(*q)) : std::string()});
      }
    }

  if (format == Format::json) {
    ordered_json doc = document("table", !a.no_timestamp);
    doc["family"] = family_name(family);
    doc["q"] = a.q ? ordered_json(*a.q) : ordered_json(nullptr);
    for (const Row& r : rows) {
      ordered_json j;
      j["profile"] = profile_json(r.p);
      j["symbolic"] = r.symbolic;
      j["numeric"] = q ? ordered_json(r.numeric) : ordered_json(nullptr);
      doc["reports"].push_back(j);
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  csv_row(out, with(with({"family"}, kProfileColumns), {"q", "symbolic", "numeric"}));
  for (const Row& r : rows)
    csv_row(out, with(with({family_name(family)}, profile_fields(r.p)),
                      {q ? to_string(*q) : "", r.symbolic, r.numeric}));
  return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n_max;
  std::vector<int> primes{3};
  int jobs = 1;
  std::string format = "text";
  bool no_timestamp = false;
};

struct Counts {
  std::size_t match = 0, mismatch = 0, skipped = 0;
  void add(verify::Status s) {
    (s == verify::Status::match ? match : s == verify::Status::mismatch ? mismatch : skipped)++;
  }
};

std::string params_str(const verify::IdentityParams& ps) {
  std::string s;
  for (const auto& [k, v] : ps) s += (s.empty() ? "" : ";") + k + "=" + std::to_string(v);
  return s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Format format = to_format(a.format);
  if (a.suite != "identities" && a.suite != "oracle" && a.suite != "all")
    throw Malformed("unknown suite '" + a.suite + "' (expected identities, oracle or all)");
  const bool run_identities = a.suite != "oracle";
  const bool run_oracle = a.suite != "identities";
  if (run_oracle) {
    try {
      verify::check_primes(a.primes);
    } catch (const std::invalid_argument& e) {
      throw Malformed(e.what());
    }
  }
  if (a.jobs < 1) throw InvalidParams(ValidityVerdict::fail(InvalidReason::range_violation, "--jobs must be >= 1"));
  const int identity_n = a.n_max.value_or(10);
  const int oracle_n = a.n_max.value_or(5);
  if (run_identities && (identity_n < 1 || identity_n > 16))
    throw InvalidParams(ValidityVerdict::fail(InvalidReason::range_violation, "identity suite needs 1 <= n-max <= 16"));
  if (run_oracle && (oracle_n < 1 || oracle_n > geometry::kMaxDim))
    throw InvalidParams(ValidityVerdict::fail(InvalidReason::range_violation, "oracle sweep needs 1 <= n-max <= 8"));

  std::vector<verify::IdentityReport> identities;
  std::vector<verify::SweepReport> sweeps;
  if (run_identities) identities = verify::run_identity_suite(identity_n, a.jobs);
  if (run_oracle) {
    verify::SweepOptions o;
    o.n_max = oracle_n;
    o.primes = a.primes;
    o.jobs = a.jobs;
    sweeps = verify::sweep_all(o);
  }
  Counts ic, oc;
  for (const auto& r : identities) ic.add(r.status);
  for (const auto& r : sweeps) oc.add(r.status);
  const bool failed = ic.mismatch + oc.mismatch > 0;

  switch (format) {
    case Format::text: {
      if (run_identities)
        out << "identities: " << identities.size() << " checked, " << ic.match << " match, " << ic.mismatch
            << " mismatch\n";
      if (run_oracle)
        out << "oracle: " << sweeps.size() << " checked, " << oc.match << " match, " << oc.mismatch << " mismatch, "
            << oc.skipped << " skipped\n";
      for (const auto& r : identities)
        if (r.status == verify::Status::mismatch)
          out << "MISMATCH " << identity_name(r.id) << " " << params_str(r.params) << ": " << r.reason << "\n";
      for (const auto& r : sweeps)
        if (r.status == verify::Status::mismatch)
          out << "MISMATCH " << family_name(r.family) << " " << describe(r.profile) << " q=" << r.q
              << ": formula " << (r.formula_value ? to_string(*r.formula_value) : "-") << ", oracle "
              << (r.oracle_value ? to_string(*r.oracle_value) : "-") << (r.reason.empty() ? "" : " (" + r.reason + ")")
              << "\n";
      break;
    }
    case Format::csv: {
      csv_row(out, with(with({"suite", "check"}, kProfileColumns),
                        {"params", "q", "lhs", "rhs", "status", "reason"}));
      const std::vector<std::string> blank(kProfileColumns.size());
      for (const auto& r : identities)
        csv_row(out, with(with({"identities", identity_name(r.id)}, blank),
                          {params_str(r.params), "", r.lhs.str(), r.rhs.str(), verify::status_name(r.status), r.reason}));
      for (const auto& r : sweeps)
        csv_row(out, with(with({"oracle", family_name(r.family)}, profile_fields(r.profile)),
                          {"", std::to_string(r.q), r.formula_value ? to_string(*r.formula_value) : "",
                           r.oracle_value ? to_string(*r.oracle_value) : "", verify::status_name(r.status), r.reason}));
      break;
    }
    case Format::json: {
      ordered_json doc = document("verify", !a.no_timestamp);
      doc["suite"] = a.suite;
      ordered_json summary;
      if (run_identities) summary["identities"] = {{"match", ic.match}, {"mismatch", ic.mismatch}};
      if (run_oracle) summary["oracle"] = {{"match", oc.match}, {"mismatch", oc.mismatch}, {"skipped", oc.skipped}};
      doc["summary"] = summary;
      for (const auto& r : identities) {
        ordered_json j;
        j["suite"] = "identities";
        j["identity_id"] = identity_name(r.id);
        ordered_json ps = ordered_json::object();
        for (const auto& [k, v] : r.params) ps[k] = v;
        j["params"] = ps;
        j["lhs"] = r.lhs.str();
        j["rhs"] = r.rhs.str();
        j["status"] = verify::status_name(r.status);
        j["reason"] = r.reason.empty() ? ordered_json(nullptr) : ordered_json(r.reason);
        doc["reports"].push_back(j);
      }
      for (const auto& r : sweeps) {
        ordered_json j;
        j["suite"] = "oracle";
        j["family"] = family_name(r.family);
        j["profile"] = profile_json(r.profile);
        j["q"] = r.q;
        j["formula_value"] = r.formula_value ? ordered_json(to_string(*r.formula_value)) : ordered_json(nullptr);
        j["oracle_value"] = r.oracle_value ? ordered_json(to_string(*r.oracle_value)) : ordered_json(nullptr);
        j["status"] = verify::status_name(r.status);
        j["reason"] = r.reason.empty() ? ordered_json(nullptr) : ordered_json(r.reason);
        doc["reports"].push_back(j);
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return failed ? kMismatch : kOk;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of subspaces relative to quadratic forms over finite fields of odd order"};
  app.name("orthocount");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one count as a Laurent polynomial in q, optionally at q");
  eval->add_option("family", ev.family, "alpha, beta, beta_nu, gamma or rho")->required();
  add_profile_options(*eval, ev.profile);
  eval->add_option("--q", ev.q, "evaluation point (odd prime power)");
  eval->add_option("--output", ev.output, "symbolic, numeric or both");
  eval->add_option("--format", ev.format, "text (default), csv or json");
  eval->add_flag("--no-timestamp", ev.no_timestamp, "omit generated_at from JSON");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Every valid profile of a family over a range of n");
  table->add_option("family", tb.family, "alpha, beta, beta_nu, gamma or rho")->required();
  table->add_option("--n", tb.n, "a single ambient dimension");
  table->add_option("--n-min", tb.n_min, "smallest ambient dimension (default 1)");
  table->add_option("--n-max", tb.n_max, "largest ambient dimension (default 5)");
  table->add_option("--eps", tb.eps, "only this ambient type");
  table->add_option("--q", tb.q, "evaluation point for the numeric column");
  table->add_option("--format", tb.format, "csv (default) or json");
  table->add_flag("--no-timestamp", tb.no_timestamp, "omit generated_at from JSON");

  VerifyArgs vf;
  auto* ver = app.add_subcommand("verify", "Run the identity suite and/or the brute-force comparison");
  ver->add_option("suite", vf.suite, "identities, oracle or all (default)");
  ver->add_option("--n-max", vf.n_max, "largest n (default 10 for identities, 5 for oracle)");
  ver->add_option("--primes", vf.primes, "primes for the oracle, e.g. 3,5")->delimiter(',');
  ver->add_option("--jobs", vf.jobs, "worker threads");
  ver->add_option("--format", vf.format, "text (default), csv or json");
  ver->add_flag("--no-timestamp", vf.no_timestamp, "omit generated_at from JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (eval->parsed()) return cmd_eval(ev, out);
    if (table->parsed()) return cmd_table(tb, out);
    return cmd_verify(vf, out);
  } catch (const Malformed& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const InvalidParams& e) {
    err << "invalid parameters (" << reason_name(e.verdict.reason) << "): " << e.what() << "\n";
    return kInvalidParams;
  }
}

}  // namespace orthocount::cli
