#include "pfq_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "pfq/decomp.hpp"
#include "pfq/identities.hpp"
#include "pfq/rpp.hpp"
#include "pfq/sequences.hpp"
#include "pfq/telescope.hpp"
#include "pfq_cli/json_io.hpp"

namespace pfq::cli {

namespace {

struct Options {
  std::string id;
  int n = 1, r = 0, i = 1, j = 1;
  std::optional<int> m, l;
  int max_n = 0;
  int trunc = 8;
  int trials = 10;
  std::uint64_t seed = 1;
  int max_j = 8, max_k = 10;
  std::optional<std::string> a, b, q, c, d, alpha, beta;
  bool json = false, timing = false, perturb = false;
  std::string file, algorithm = "elimination", method;
  std::string shape, profile, kind;
};

struct UsageError : Error {
  using Error::Error;
};

std::optional<Rational> scalar(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return Rational::from_string(*s);
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(what + ": not an integer list: \"" + s + "\"");
    }
  }
  if (v.empty()) throw UsageError(what + " is empty");
  return v;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

void add_scalars(CLI::App* app, Options& o) {
  app->add_option("--a", o.a, "scalar a (rational string)");
  app->add_option("--b", o.b, "scalar b");
  app->add_option("--q", o.q, "scalar q");
  app->add_option("--c", o.c, "scalar c");
  app->add_option("--d", o.d, "scalar d");
  app->add_option("--alpha", o.alpha, "scalar alpha");
  app->add_option("--beta", o.beta, "scalar beta");
}

void add_run(CLI::App* app, Options& o) {
  app->add_option("--trials", o.trials, "random points per instance")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "master seed");
  app->add_flag("--json", o.json, "emit a JSON report");
  app->add_flag("--timing", o.timing, "include wall-clock times in the report");
}

// ---- verify ----

struct Summary {
  long total = 0, passed = 0, failed = 0, skipped = 0;
};

Summary summarize(const std::vector<VerificationReport>& reps) {
  Summary s;
  for (const auto& r : reps) {
    ++s.total;
    if (r.skipped)
      ++s.skipped;
    else if (r.passed())
      ++s.passed;
    else
      ++s.failed;
  }
  return s;
}

std::string status(const VerificationReport& r) {
  return r.skipped ? "SKIP" : (r.passed() ? "PASS" : "FAIL");
}

void print_reports(std::ostream& out, const std::string& command, const std::string& id,
                   const Json& config, const std::vector<VerificationReport>& reps,
                   const Options& o, double wall_ms) {
  const Summary s = summarize(reps);
  if (o.json) {
    Json j;
    j["command"] = command;
    j["id"] = id;
    j["config"] = config;
    Json arr = Json::array();
    for (const auto& r : reps) arr.push_back(report_to_json(r, o.timing));
    j["reports"] = std::move(arr);
    j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed},
                    {"skipped", s.skipped}};
    if (o.timing) j["wall_ms"] = wall_ms;
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& r : reps) {
    out << status(r) << " " << r.id << " trial=" << r.trial;
    for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
    if (!r.passed()) {
      if (!r.skipped) out << " lhs=" << r.lhs << " rhs=" << r.rhs;
      if (!r.cross_check) out << " cross_check=false";
    }
    if (!r.detail.empty() && !r.passed()) out << " (" << r.detail << ")";
    out << "\n";
  }
  out << "total=" << s.total << " passed=" << s.passed << " failed=" << s.failed
      << " skipped=" << s.skipped;
  if (o.timing) out << " wall_ms=" << wall_ms;
  out << "\n";
}

int default_m(IdentityId id, int n) {
  switch (id) {
    case IdentityId::PfGeneral2:
    case IdentityId::PfGeneral4:
    case IdentityId::PfGeneralB4:
      return 2 * n + 1;
    case IdentityId::PfGeneral1:
    case IdentityId::PfGeneral3:
    case IdentityId::PfGeneralB3:
      return 2 * n;
    default:
      return 0;
  }
}

Json scalar_echo(const Options& o) {
  Json j = Json::object();
  auto put = [&](const char* k, const std::optional<std::string>& v) {
    if (v) j[k] = scalar(v)->str();
  };
  put("a", o.a);
  put("b", o.b);
  put("q", o.q);
  put("c", o.c);
  put("d", o.d);
  put("alpha", o.alpha);
  put("beta", o.beta);
  return j;
}

std::vector<VerificationReport> run_identity(IdentityId id, const Options& o, Json& config) {
  std::vector<int> ns;
  if (o.max_n > 0)
    for (int n = 1; n <= o.max_n; ++n) ns.push_back(n);
  else
    ns.push_back(o.n);
  const auto ints = identity_integers(id);
  for (const auto& k : ints) {
    if (k == "n" && o.max_n > 0)
      config["max_n"] = o.max_n;
    else if (k == "n")
      config["n"] = o.n;
    else if (k == "r")
      config["r"] = o.r;
    else if (k == "m" && o.m)
      config["m"] = *o.m;
    else if (k == "l" && o.l)
      config["l"] = *o.l;
    else if (k == "i")
      config["i"] = o.i;
    else if (k == "j")
      config["j"] = o.j;
  }
  std::vector<VerificationReport> all;
  for (int n : ns) {
    IdentityParams p;
    p.n = n;
    p.r = o.r;
    p.m = o.m.value_or(default_m(id, n));
    p.l = o.l.value_or(0);
    p.i = o.i;
    p.j = o.j;
    p.a = scalar(o.a);
    p.b = scalar(o.b);
    p.q = scalar(o.q);
    p.c = scalar(o.c);
    p.d = scalar(o.d);
    p.alpha = scalar(o.alpha);
    p.beta = scalar(o.beta);
    auto reps = verify(id, p, o.trials, o.seed);
    all.insert(all.end(), reps.begin(), reps.end());
  }
  return all;
}

std::vector<VerificationReport> run_appendix(AppendixCheck which, const Options& o, Json& config) {
  AppendixParams p;
  p.max_j = o.max_j;
  p.max_k = o.max_k;
  p.perturb = o.perturb;
  p.a = scalar(o.a);
  p.b = scalar(o.b);
  p.c = scalar(o.c);
  p.q = scalar(o.q);
  config["max_j"] = o.max_j;
  config["max_k"] = o.max_k;
  config["perturb"] = o.perturb;
  return verify_appendix(which, p, o.trials, o.seed);
}

RppParams rpp_params(RppTheorem t, const Options& o) {
  RppParams p;
  p.n = o.n;
  p.r = o.r;
  const bool odd = t == RppTheorem::Odd || t == RppTheorem::Odd2 || t == RppTheorem::Odd3;
  p.m = o.m.value_or(odd ? 2 * o.n - 1 : 2 * o.n);
  p.l = o.l.value_or(t == RppTheorem::GF2 || t == RppTheorem::Odd2 ? p.m : p.m + 1);
  return p;
}

std::vector<VerificationReport> run_rpp(RppTheorem t, const Options& o, Json& config) {
  const RppParams p = rpp_params(t, o);
  if (t != RppTheorem::GF && t != RppTheorem::Odd) config["l"] = p.l;
  config["m"] = p.m;
  config["n"] = p.n;
  config["r"] = p.r;
  config["trunc"] = o.trunc;
  return verify_rpp_theorem(t, p, o.trunc, o.trials, o.seed, scalar(o.a), scalar(o.b));
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Json config = Json::object();
  std::vector<VerificationReport> reps;
  if (auto id = identity_from_name(o.id)) {
    reps = run_identity(*id, o, config);
  } else if (auto ap = appendix_from_name(o.id)) {
    reps = run_appendix(*ap, o, config);
  } else if (auto th = rpp_theorem_from_name(o.id)) {
    reps = run_rpp(*th, o, config);
  } else {
    throw UsageError("unknown id \"" + o.id + "\"; valid ids: " + join(verify_ids(), ", "));
  }
  config["trials"] = o.trials;
  config["seed"] = o.seed;
  Json sc = scalar_echo(o);
  if (!sc.empty()) config["scalars"] = std::move(sc);
  const double wall =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  print_reports(out, "verify", o.id, config, reps, o, wall);
  return summarize(reps).failed > 0 ? kExitFail : kExitPass;
}

// ---- pf / decompose ----

int cmd_pf(const Options& o, std::ostream& out) {
  RSkew A = read_skew_file(o.file);
  require_even(A.n());
  Rational v;
  if (o.algorithm == "elimination")
    v = pf_elimination(A);
  else if (o.algorithm == "expansion")
    v = pf_expansion(A);
  else if (o.algorithm == "combinatorial")
    v = pf_combinatorial(A);
  else
    throw UsageError("unknown algorithm \"" + o.algorithm +
                     "\"; use elimination, expansion or combinatorial");
  if (o.json) {
    Json j;
    j["command"] = "pf";
    j["n"] = A.n();
    j["algorithm"] = o.algorithm;
    j["pfaffian"] = v.str();
    out << j.dump(2) << "\n";
  } else {
    out << v.str() << "\n";
  }
  return kExitPass;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  RSkew A = read_skew_file(o.file);
  require_even(A.n());
  const std::string method = o.method.empty() ? "elimination" : o.method;
  PfDecomposition d;
  if (method == "elimination")
    d = pf_decompose_elimination(A);
  else if (method == "subpf")
    d = pf_decompose_by_subpf(A);
  else
    throw UsageError("unknown method \"" + method + "\"; use elimination or subpf");
  if (o.json) {
    Json j;
    j["command"] = "decompose";
    j["method"] = method;
    j["t"] = rationals_to_json(d.t);
    j["V"] = matrix_to_json(d.V);
    out << j.dump(2) << "\n";
  } else {
    out << "t =";
    for (const auto& x : d.t) out << " " << x.str();
    out << "\nV =\n";
    for (int i = 0; i < d.V.rows(); ++i) {
      for (int k = 0; k < d.V.cols(); ++k) out << (k ? " " : "") << d.V(i, k).str();
      out << "\n";
    }
  }
  return kExitPass;
}

// ---- rpp ----

int cmd_rpp_gf(const Options& o, std::ostream& out) {
  StrictPartition shape(int_list(o.shape, "--shape"));
  const auto prof = int_list(o.profile, "--profile");
  const std::string method = o.method.empty() ? "det" : o.method;
  QSeries g;
  if (method == "brute")
    g = gf_rpp_bruteforce(shape, Profile(prof), o.trunc);
  else if (method == "det")
    g = gf_rpp_det(shape, Profile(prof), o.trunc);
  else
    throw UsageError("unknown method \"" + method + "\"; use brute or det");
  if (o.json) {
    Json j;
    j["command"] = "rpp gf";
    j["shape"] = shape.parts();
    j["profile"] = prof;
    j["trunc"] = o.trunc;
    j["method"] = method;
    Json c = Json::array();
    for (int t = 0; t <= g.order(); ++t) c.push_back(g[t].str());
    j["coefficients"] = std::move(c);
    out << j.dump(2) << "\n";
  } else {
    out << series_str(g) << "\n";
  }
  return kExitPass;
}

int cmd_rpp_verify(const Options& o, std::ostream& out) {
  if (!rpp_theorem_from_name(o.id)) {
    std::vector<std::string> ids;
    for (auto t : all_rpp_theorems()) ids.push_back(rpp_theorem_name(t));
    throw UsageError("unknown rpp theorem \"" + o.id + "\"; valid ids: " + join(ids, ", "));
  }
  return cmd_verify(o, out);
}

// ---- seq / list ----

int cmd_seq(const Options& o, std::ostream& out) {
  auto k = kind_from_name(o.kind);
  if (!k) throw UsageError("unknown kind \"" + o.kind + "\"; valid kinds: " + join(kind_names(), ", "));
  auto need = [&](const std::optional<std::string>& v, const char* name) {
    if (!v) throw UsageError(o.kind + " needs --" + std::string(name));
    return Rational::from_string(*v);
  };
  SequenceKind s;
  switch (*k) {
    case SeqKind::LittleQJacobi:
      s = SequenceKind::little_q_jacobi(need(o.a, "a"), need(o.b, "b"), need(o.q, "q"));
      break;
    case SeqKind::Laguerre:
      s = SequenceKind::laguerre(need(o.alpha, "alpha"));
      break;
    case SeqKind::Narayana:
      s = SequenceKind::narayana(need(o.a, "a"));
      break;
    case SeqKind::AlSalamCarlitz:
      s = SequenceKind::al_salam_carlitz(need(o.a, "a"), need(o.q, "q"));
      break;
    default:
      s = SequenceKind::plain(*k);
  }
  std::vector<Rational> terms;
  for (int t = 0; t < o.n; ++t) terms.push_back(moment(s, t));
  if (o.json) {
    Json j;
    j["command"] = "seq";
    j["kind"] = o.kind;
    j["terms"] = rationals_to_json(terms);
    out << j.dump(2) << "\n";
  } else {
    std::vector<std::string> v;
    for (const auto& x : terms) v.push_back(x.str());
    out << "[" << join(v, ",") << "]\n";
  }
  return kExitPass;
}

int cmd_list(const Options& o, std::ostream& out) {
  std::vector<std::string> ids, app, rpp;
  for (auto id : all_identities()) ids.push_back(identity_name(id));
  for (auto c : all_appendix_checks()) app.push_back(appendix_name(c));
  for (auto t : all_rpp_theorems()) rpp.push_back(rpp_theorem_name(t));
  if (o.json) {
    Json j;
    j["identities"] = ids;
    j["appendix"] = app;
    j["rpp"] = rpp;
    j["sequences"] = kind_names();
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  auto section = [&](const char* name, const std::vector<std::string>& v) {
    out << name << ":\n";
    for (const auto& s : v) out << "  " << s << "\n";
  };
  section("identities", ids);
  section("appendix", app);
  section("rpp", rpp);
  section("sequences", kind_names());
  return kExitPass;
}

}  // namespace

std::vector<std::string> verify_ids() {
  std::vector<std::string> v;
  for (auto id : all_identities()) v.push_back(identity_name(id));
  for (auto c : all_appendix_checks()) v.push_back(appendix_name(c));
  for (auto t : all_rpp_theorems()) v.push_back(rpp_theorem_name(t));
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of Pfaffian and q-series identities", "pfq"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "check an identity at random points");
  verify_cmd->add_option("--id", o.id, "identity id (see `list`)")->required();
  verify_cmd->add_option("--n", o.n);
  verify_cmd->add_option("--r", o.r);
  verify_cmd->add_option("--m", o.m);
  verify_cmd->add_option("--l", o.l);
  verify_cmd->add_option("--i", o.i);
  verify_cmd->add_option("--j", o.j);
  verify_cmd->add_option("--max-n", o.max_n, "run n = 1..max-n");
  verify_cmd->add_option("--trunc", o.trunc, "series order K for rpp ids");
  verify_cmd->add_option("--max-j", o.max_j);
  verify_cmd->add_option("--max-k", o.max_k);
  verify_cmd->add_flag("--perturb", o.perturb, "perturb the certificate (negative control)");
  add_scalars(verify_cmd, o);
  add_run(verify_cmd, o);

  auto* pf_cmd = app.add_subcommand("pf", "Pfaffian of a matrix file");
  pf_cmd->add_option("--file", o.file)->required();
  pf_cmd->add_option("--algorithm", o.algorithm, "elimination | expansion | combinatorial");
  pf_cmd->add_flag("--json", o.json);

  auto* dec_cmd = app.add_subcommand("decompose", "Pfaffian decomposition A = tV T V");
  dec_cmd->add_option("--file", o.file)->required();
  dec_cmd->add_option("--method", o.method, "elimination | subpf");
  dec_cmd->add_flag("--json", o.json);

  auto* rpp_cmd = app.add_subcommand("rpp", "shifted plane partitions");
  rpp_cmd->require_subcommand(1);
  auto* gf_cmd = rpp_cmd->add_subcommand("gf", "truncated generating function of R(shape, profile)");
  gf_cmd->add_option("--shape", o.shape, "comma-separated strict partition")->required();
  gf_cmd->add_option("--profile", o.profile, "comma-separated profile")->required();
  gf_cmd->add_option("--trunc", o.trunc, "series order K");
  gf_cmd->add_option("--method", o.method, "det | brute");
  gf_cmd->add_flag("--json", o.json);
  auto* rv_cmd = rpp_cmd->add_subcommand("verify", "check a generating-function theorem");
  rv_cmd->add_option("--id", o.id, "rpp-gf, rpp-gf2, rpp-gf3, rpp-odd, rpp-odd2, rpp-odd3")->required();
  rv_cmd->add_option("--n", o.n);
  rv_cmd->add_option("--r", o.r);
  rv_cmd->add_option("--m", o.m);
  rv_cmd->add_option("--l", o.l);
  rv_cmd->add_option("--trunc", o.trunc, "series order K");
  rv_cmd->add_option("--a", o.a);
  rv_cmd->add_option("--b", o.b);
  add_run(rv_cmd, o);

  auto* seq_cmd = app.add_subcommand("seq", "first terms of a moment sequence");
  seq_cmd->add_option("--kind", o.kind)->required();
  seq_cmd->add_option("--n", o.n, "number of terms");
  add_scalars(seq_cmd, o);
  seq_cmd->add_flag("--json", o.json);

  auto* list_cmd = app.add_subcommand("list", "list ids and sequence kinds");
  list_cmd->add_flag("--json", o.json);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out);
    if (*pf_cmd) return cmd_pf(o, out);
    if (*dec_cmd) return cmd_decompose(o, out);
    if (*gf_cmd) return cmd_rpp_gf(o, out);
    if (*rv_cmd) return cmd_rpp_verify(o, out);
    if (*seq_cmd) return cmd_seq(o, out);
    if (*list_cmd) return cmd_list(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SkewViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace pfq::cli
