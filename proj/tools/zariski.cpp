// zariski: batch front end. Exit codes: 0 affirmative, 1 negative,
// 2 unknown or unsupported, 3 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "zariski/apps.hpp"
#include "zariski/derivation.hpp"
#include "zariski/errors.hpp"
#include "zariski/frame.hpp"
#include "zariski/ideals.hpp"
#include "zariski/oracles.hpp"
#include "zariski/prover.hpp"
#include "zariski/selftest.hpp"
#include "zariski/semantics.hpp"

using json = nlohmann::json;
using namespace zariski;

namespace {

enum Exit { kYes = 0, kNo = 1, kUnknown = 2, kInputError = 3 };

const char* status_name(int code) {
  switch (code) {
    case kYes:
      return "affirmative";
    case kNo:
      return "negative";
    case kUnknown:
      return "unknown";
    default:
      return "input-error";
  }
}

struct Report {
  json record = json::object();
  std::ostringstream text;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Elem> parse_elems(const Ring& ring, const std::string& text) {
  std::vector<Elem> out;
  for (const auto& s : split_list(text)) out.push_back(ring.parse_elem(s));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Env parse_env(const Ring& ring, const std::string& text) {
  Env env;
  for (const auto& item : split_list(text)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in --env, got " + item);
    env.emplace(trim(item.substr(0, eq)), ring.parse_elem(trim(item.substr(eq + 1))));
  }
  return env;
}

std::vector<std::string> elem_strings(const std::vector<Elem>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

std::vector<Sequent> read_axioms(const std::string& path) {
  std::vector<Sequent> out;
  std::stringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_sequent(line));
  }
  return out;
}

struct Options {
  std::string ring = "Z";
  std::string format = "pretty";
  std::string certificate;
  std::string at = "1";
  std::string env;
  std::string beta;
  std::string axioms;
  bool prime_filters = false;
  std::string payload;
  std::string extra;
  std::vector<std::string> args;
  int criterion = 0;
  std::uint64_t seed = 20211007;
};

// ---- commands ----

int cmd_entails(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  if (o.args.empty() || o.args.size() > 2) throw std::invalid_argument("entails takes F and an optional list G");
  std::string f_text = o.args[0];
  if (f_text.rfind("D(", 0) == 0 && f_text.back() == ')') f_text = f_text.substr(2, f_text.size() - 3);
  Elem f = ring.parse_elem(f_text);
  std::vector<Elem> gens;
  if (o.args.size() == 2) {
    for (auto s : split_list(o.args[1])) {
      if (s.rfind("D(", 0) == 0 && s.back() == ')') s = s.substr(2, s.size() - 3);
      gens.push_back(ring.parse_elem(s));
    }
  }
  Ideal ideal(ring, gens);
  r.record["f"] = f.str();
  r.record["generators"] = elem_strings(gens);
  std::optional<MembershipCertificate> cert;
  if (!o.certificate.empty()) {
    MembershipCertificate c = certificate_from_json(ring, read_file(o.certificate));
    if (!verify_certificate(f, ideal, c)) {
      r.record["reason"] = "certificate from disk does not verify";
      r.text << "certificate from " << o.certificate << " does not verify\n";
      return kNo;
    }
    cert = c;
  } else {
    cert = radical_membership(ideal, f);
  }
  if (!cert) {
    r.text << "D(" << f.str() << ") does not entail the join of D(g) for g in " << ideal.str() << "\n";
    return kNo;
  }
  if (!verify_certificate(f, ideal, *cert)) throw CertificateError("emitted certificate does not verify");
  r.record["certificate"] = json::parse(certificate_to_json(*cert));
  r.text << "D(" << f.str() << ") |- join of D(g), g in " << ideal.str() << "\n";
  r.text << "certificate: " << cert->describe(f, ideal) << "\n";
  return kYes;
}

int cmd_truth_open(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  if (o.args.size() != 1) throw std::invalid_argument("truth-open takes one formula");
  Env env = parse_env(ring, o.env);
  Context ctx;
  for (const auto& [k, v] : env) ctx.push_back(k);
  Formula phi = parse_formula(o.args[0], ctx);
  std::optional<Open> beta;
  if (!o.beta.empty()) beta = Open(Ideal(ring, parse_elems(ring, o.beta)));
  r.record["formula"] = format_formula(phi);
  json envj = json::object();
  for (const auto& [k, v] : env) envj[k] = v.str();
  r.record["environment"] = envj;
  TruthOpen t = truth_open(ring, phi, env, beta);
  if (!t.known()) {
    r.record["unknown_reason"] = t.unknown_reason;
    r.text << "unknown: " << t.unknown_reason << "\n";
    return kUnknown;
  }
  r.record["support"] = elem_strings(t.value->support().generators());
  r.text << "[[" << format_formula(phi) << "]] = " << t.value->str() << "\n";
  return kYes;
}

int cmd_force(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  if (o.args.size() != 1) throw std::invalid_argument("force takes one formula");
  Env env = parse_env(ring, o.env);
  Context ctx;
  for (const auto& [k, v] : env) ctx.push_back(k);
  Formula phi = parse_formula(o.args[0], ctx);
  Elem f = ring.parse_elem(o.at);
  std::optional<Open> beta;
  if (!o.beta.empty()) beta = Open(Ideal(ring, parse_elems(ring, o.beta)));
  r.record["formula"] = format_formula(phi);
  r.record["at"] = f.str();
  ForcingDecision d = forces(ring, f, phi, env, beta);
  if (d.truth) r.record["support"] = elem_strings(d.truth->support().generators());
  if (d.decision == Decision::kUnknown) {
    r.record["unknown_reason"] = d.reason;
    r.text << "unknown: " << d.reason << "\n";
    return kUnknown;
  }
  if (d.decision == Decision::kFalse) {
    r.text << "D(" << f.str() << ") does not force " << format_formula(phi) << "\n";
    if (d.truth) r.text << "truth open: " << d.truth->str() << "\n";
    return kNo;
  }
  r.text << "D(" << f.str() << ") forces " << format_formula(phi) << "\n";
  if (d.nilpotency) {
    if (!pow(f, *d.nilpotency).is_zero()) throw CertificateError("nilpotency witness does not verify");
    r.record["nilpotency"] = *d.nilpotency;
    r.text << "nilpotency: " << f.str() << "^" << *d.nilpotency << " = 0\n";
  }
  if (d.truth) {
    json certs = json::array();
    Ideal support = d.truth->support();
    for (const auto& c : d.certificates) {
      if (!verify_certificate(f, support, c)) throw CertificateError("forcing certificate does not verify");
      certs.push_back(json::parse(certificate_to_json(c)));
      r.text << "certificate: " << c.describe(f, support) << "\n";
    }
    r.record["certificates"] = certs;
  }
  if (beta) return kYes;
  try {
    if (auto fc = forcing_certificate(ring, f, phi, env)) {
      if (!check_forcing_certificate(ring, f, phi, env, *fc)) throw CertificateError("forcing tree does not verify");
      r.record["forcing_certificate"] = json::parse(forcing_certificate_to_json(*fc));
      r.text << "forcing tree: " << forcing_certificate_to_json(*fc) << "\n";
    }
  } catch (const UnsupportedRing&) {
  }
  return kYes;
}

int cmd_nabla_translate(const Options& o, Report& r) {
  if (o.args.size() != 1) throw std::invalid_argument("nabla-translate takes one formula");
  Formula phi = parse_formula(o.args[0]);
  Formula t = nabla_translate(phi);
  r.record["formula"] = format_formula(phi);
  r.record["fragment"] = to_string(classify(phi));
  r.record["translation"] = format_formula(t);
  r.text << format_formula(t) << "\n";
  return kYes;
}

std::vector<Sequent> theory_for(const Options& o) {
  std::vector<Sequent> axioms;
  if (o.prime_filters) axioms = prime_filter_theory(make_ring(o.ring));
  if (!o.axioms.empty()) {
    auto extra = read_axioms(o.axioms);
    axioms.insert(axioms.end(), extra.begin(), extra.end());
  }
  return axioms;
}

int cmd_check_derivation(const Options& o, Report& r) {
  if (o.args.size() != 1) throw std::invalid_argument("check-derivation takes one file");
  auto axioms = theory_for(o);
  Derivation d = derivation_from_json(read_file(o.args[0]));
  CheckResult res = check_derivation(axioms, d);
  r.record["conclusion"] = format_sequent(d->conclusion);
  r.record["size"] = derivation_size(d);
  if (!res.ok) {
    r.record["reason"] = res.describe();
    r.text << "rejected: " << res.describe() << "\n";
    return kNo;
  }
  r.text << "accepted: " << format_sequent(d->conclusion) << " (" << derivation_size(d) << " nodes)\n";
  return kYes;
}

int cmd_prove(const Options& o, Report& r) {
  if (o.args.size() != 1) throw std::invalid_argument("prove takes one sequent");
  auto axioms = theory_for(o);
  Sequent goal = parse_sequent(o.args[0]);
  r.record["goal"] = format_sequent(goal);
  std::optional<Derivation> d;
  try {
    d = coherent_prove(axioms, goal);
  } catch (const std::invalid_argument& e) {
    r.record["unknown_reason"] = e.what();
    r.text << "unsupported: " << e.what() << "\n";
    return kUnknown;
  }
  if (!d) {
    r.text << "not derivable: " << format_sequent(goal) << "\n";
    return kNo;
  }
  CheckResult res = check_derivation(axioms, *d);
  if (!res.ok) throw CertificateError("prover emitted a rejected derivation: " + res.describe());
  std::string text = derivation_to_json(*d);
  r.record["derivation"] = json::parse(text);
  r.text << text << "\n";
  return kYes;
}

int cmd_filters(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  auto filters = enumerate_prime_filters(ring);
  json list = json::array();
  for (const auto& p : filters) {
    list.push_back(p.elements());
    r.text << p.str() << "\n";
  }
  r.record["filters"] = list;
  r.text << filters.size() << " prime filters\n";
  return kYes;
}

Matrix matrix_arg(const Options& o, const Ring& ring) {
  if (o.args.size() != 1) throw std::invalid_argument("expected one matrix");
  return parse_matrix(ring, o.args[0]);
}

int cmd_mccoy(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  Matrix m = matrix_arg(o, ring);
  McCoyResult res = mccoy_regularity(m);
  if (!verify_mccoy(m, res)) throw CertificateError("McCoy result does not verify");
  r.record["matrix"] = m.str();
  r.record["minors"] = elem_strings(res.minors.generators());
  r.text << "minors: " << res.minors.str() << "\n";
  if (res.witness) {
    r.record["witness"] = res.witness->str();
    r.text << "not injective: " << res.witness->str() << " annihilates the minors\n";
    return kNo;
  }
  if (res.unit_certificate) {
    r.record["certificate"] = json::parse(certificate_to_json(*res.unit_certificate));
    r.text << "certificate: " << res.unit_certificate->describe(ring.one(), res.minors) << "\n";
  }
  if (res.nonzero_minor) {
    r.record["nonzero_minor"] = *res.nonzero_minor;
    r.text << "nonzero minor: " << res.minors.generators()[*res.nonzero_minor].str() << "\n";
  }
  r.text << "injective\n";
  return kYes;
}

int cmd_richman(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  Matrix m = matrix_arg(o, ring);
  r.record["matrix"] = m.str();
  RichmanOutcome out = richman_harness(m);
  if (out.kernel) {
    for (const auto& x : mat_vec(m, *out.kernel)) {
      if (!x.is_zero()) throw CertificateError("kernel vector does not verify");
    }
    r.record["kernel"] = elem_strings(*out.kernel);
    r.text << "not injective; kernel vector (";
    for (std::size_t i = 0; i < out.kernel->size(); ++i) r.text << (i ? ", " : "") << (*out.kernel)[i].str();
    r.text << ")\n";
    return kNo;
  }
  if (!out.certificate) {
    r.record["unknown_reason"] = "no kernel vector and no certificate";
    return kUnknown;
  }
  if (!verify_triviality(*out.certificate)) throw CertificateError("triviality certificate does not verify");
  std::string text = triviality_to_json(*out.certificate);
  r.record["certificate"] = json::parse(text);
  r.text << "injective, so 1 = 0:\n" << text << "\n";
  return kYes;
}

int cmd_generic_freeness(const Options& o, Report& r) {
  Ring ring = make_ring(o.ring);
  Matrix m = matrix_arg(o, ring);
  r.record["matrix"] = m.str();
  GenericFreenessResult out = generic_freeness_simple(m);
  if (out.trivial) {
    if (!verify_triviality(*out.trivial)) throw CertificateError("triviality certificate does not verify");
    std::string text = triviality_to_json(*out.trivial);
    r.record["certificate"] = json::parse(text);
    r.text << "the ring is trivial:\n" << text << "\n";
    return kYes;
  }
  if (!out.free || !verify_freeness(m, *out.free)) throw CertificateError("freeness witness does not verify");
  const auto& w = *out.free;
  r.record["f"] = w.f.str();
  r.record["localized"] = w.localized.describe();
  r.record["rank"] = w.rank;
  json basis = json::array();
  for (const auto& b : w.basis) basis.push_back(elem_strings(b));
  r.record["basis"] = basis;
  r.text << "coker is free of rank " << w.rank << " over " << w.localized.describe() << " = A[" << w.f.str()
         << "^-1]\n";
  return kYes;
}

int cmd_selftest(const Options& o, Report& r) {
  std::vector<CriterionResult> results;
  if (o.criterion) results.push_back(run_criterion(o.criterion, o.seed));
  else results = run_selftest(o.seed);
  bool all = true;
  json list = json::array();
  for (const auto& c : results) {
    all = all && c.passed;
    list.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    r.text << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << c.detail << ", " << c.seconds << "s)\n";
  }
  r.record["criteria"] = list;
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive commutative algebra in the frame of radical ideals"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "pretty or structured (one JSON record per line)")
      ->check(CLI::IsMember({"pretty", "structured"}));

  struct Spec {
    const char* name;
    const char* help;
    int (*run)(const Options&, Report&);
  };
  const std::vector<Spec> specs = {
      {"entails", "D(f) |- join of D(g): F and a comma-separated list G", cmd_entails},
      {"truth-open", "the open [[phi]]", cmd_truth_open},
      {"force", "does D(at) force phi", cmd_force},
      {"nabla-translate", "the nabla translation of a formula", cmd_nabla_translate},
      {"check-derivation", "check a derivation file", cmd_check_derivation},
      {"prove", "search for a derivation in a coherent theory", cmd_prove},
      {"filters", "prime filters of Z/n", cmd_filters},
      {"mccoy", "injectivity of a matrix by the ideal of maximal minors", cmd_mccoy},
      {"richman", "derive 1 = 0 from an injective wide matrix", cmd_richman},
      {"generic-freeness", "a localization where coker(M) is free", cmd_generic_freeness},
      {"selftest", "run the acceptance criteria", cmd_selftest},
  };
  std::map<CLI::App*, const Spec*> dispatch;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    dispatch[sub] = &s;
    std::string name = s.name;
    if (name == "selftest") {
      sub->add_option("--criterion", o.criterion, "run a single criterion")->check(CLI::Range(1, kCriterionCount));
      sub->add_option("--seed", o.seed, "random seed");
      continue;
    }
    if (name != "nabla-translate" && name != "check-derivation" && name != "prove") {
      sub->add_option("--ring", o.ring, "Z, Z/n, Fp[x,...]/(...) or Q[x,...]/(...)");
    }
    if (name == "check-derivation" || name == "prove") {
      sub->add_option("--ring", o.ring, "ring whose prime-filter theory is used with --prime-filters");
      sub->add_flag("--prime-filters", o.prime_filters, "use the prime-filter theory of --ring");
      sub->add_option("--axioms", o.axioms, "file with one axiom sequent per line");
    }
    if (name == "entails") sub->add_option("--certificate", o.certificate, "verify this certificate file instead");
    if (name == "force") sub->add_option("--at", o.at, "the basic open D(at)");
    if (name == "force" || name == "truth-open") {
      sub->add_option("--env", o.env, "bindings x=a,y=b");
      sub->add_option("--beta", o.beta, "generators of the open interpreting beta");
    }
    if (name == "filters") continue;
    sub->add_option("payload", o.payload, "formula, sequent, element, file or matrix")->required();
    if (name == "entails") sub->add_option("generators", o.extra, "comma-separated list G");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (!o.payload.empty()) o.args.push_back(o.payload);
  if (!o.extra.empty()) o.args.push_back(o.extra);
  const Spec* spec = nullptr;
  for (auto* sub : app.get_subcommands()) spec = dispatch.at(sub);
  Report r;
  r.record["command"] = spec->name;
  if (std::string(spec->name) != "nabla-translate" && std::string(spec->name) != "selftest") r.record["ring"] = o.ring;
  int code;
  try {
    code = spec->run(o, r);
  } catch (const CertificateError& e) {
    r.record["error"] = e.what();
    r.text << "certificate error: " << e.what() << "\n";
    code = kUnknown;
  } catch (const UnsupportedRing& e) {
    r.record["error"] = e.what();
    r.text << "unsupported: " << e.what() << "\n";
    code = kUnknown;
  } catch (const ReducednessViolation& e) {
    r.record["error"] = e.what();
    r.text << "unsupported: " << e.what() << "\n";
    code = kUnknown;
  } catch (const std::exception& e) {
    r.record["error"] = e.what();
    r.text << "error: " << e.what() << "\n";
    code = kInputError;
  }
  r.record["status"] = status_name(code);
  r.record["exit"] = code;
  if (o.format == "structured") {
    std::cout << r.record.dump() << "\n";
  } else {
    (code == kInputError ? std::cerr : std::cout) << r.text.str();
  }
  return code;
}
