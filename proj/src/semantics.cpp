#include "zariski/semantics.hpp"

#include <json.hpp>

#include "zariski/errors.hpp"

namespace zariski {

using Kind = FormulaNode::Kind;
using json = nlohmann::json;

namespace {

bool mentions(const Expr& e, const std::string& var) {
  std::set<std::string> names;
  collect_names(e, names);
  return names.count(var) > 0;
}

struct Linear {
  Expr coefficient;
  Expr rhs;
};

// a*y = c, y*a = c, y = c and the mirrored forms, with a and c free of y.
std::optional<Linear> match_linear(const Formula& body, const std::string& y) {
  if (body->kind != Kind::kEq) return std::nullopt;
  for (int side = 0; side < 2; ++side) {
    const Expr& prod = body->terms[side];
    const Expr& other = body->terms[1 - side];
    if (mentions(other, y)) continue;
    if (prod->op == ExprNode::Op::kName && prod->name == y) return Linear{make_num(1), other};
    if (prod->op != ExprNode::Op::kMul) continue;
    for (int k = 0; k < 2; ++k) {
      const Expr& var = prod->args[k];
      const Expr& coeff = prod->args[1 - k];
      if (var->op == ExprNode::Op::kName && var->name == y && !mentions(coeff, y)) return Linear{coeff, other};
    }
  }
  return std::nullopt;
}

class Compiler {
 public:
  Compiler(const Ring& ring, const std::optional<Open>& beta) : ring_(ring), beta_(beta) {}

  std::optional<Open> run(const Formula& f, const Env& env) {
    switch (f->kind) {
      case Kind::kTop:
        return Open::top(ring_);
      case Kind::kBot:
        return Open::bottom(ring_);
      case Kind::kBeta:
        if (!beta_) return unknown(f, "beta has no interpretation");
        if (beta_->ring() != ring_) throw RingMismatch("beta open belongs to another ring");
        return *beta_;
      case Kind::kEq: {
        Elem d = ring_.eval(f->terms[0], env) - ring_.eval(f->terms[1], env);
        if (d.is_zero()) return Open::top(ring_);
        return Open(annihilator(d));
      }
      case Kind::kPred:
        return basic_open(ring_.eval(f->terms[0], env));
      case Kind::kAnd: {
        Open acc = Open::top(ring_);
        for (const auto& c : f->children) {
          auto v = run(c, env);
          if (!v) return std::nullopt;
          acc = meet(acc, *v);
        }
        return acc;
      }
      case Kind::kOr: {
        Open acc = Open::bottom(ring_);
        for (const auto& c : f->children) {
          auto v = run(c, env);
          if (!v) return std::nullopt;
          acc = join(acc, *v);
        }
        return acc;
      }
      case Kind::kImp: {
        auto a = run(f->children[0], env);
        if (!a) return std::nullopt;
        auto b = run(f->children[1], env);
        if (!b) return std::nullopt;
        return heyting(*a, *b);
      }
      case Kind::kForall:
      case Kind::kExists: {
        const Formula& body = f->children[0];
        if (!free_names(body).count(f->var)) {
          Env inner = env;
          inner.erase(f->var);
          return run(body, inner);
        }
        if (f->kind == Kind::kExists) {
          if (auto lin = match_linear(body, f->var)) {
            Env inner = env;
            inner.erase(f->var);
            Elem a = ring_.eval(lin->coefficient, inner);
            Elem c = ring_.eval(lin->rhs, inner);
            return Open(ideal_quotient(Ideal(ring_, {a}), Ideal(ring_, {c})));
          }
        }
        if (ring_.is_finite()) {
          // Z/n: local elements lift to constants, so the quantifier ranges over A.
          bool all = f->kind == Kind::kForall;
          Open acc = all ? Open::top(ring_) : Open::bottom(ring_);
          for (const auto& w : ring_.elements()) {
            Env inner = env;
            inner.insert_or_assign(f->var, w);
            auto v = run(body, inner);
            if (!v) return std::nullopt;
            acc = all ? meet(acc, *v) : join(acc, *v);
          }
          return acc;
        }
        return unknown(f, "no compilation rule for this quantified formula");
      }
    }
    return unknown(f, "unhandled connective");
  }

  std::string reason;

 private:
  std::optional<Open> unknown(const Formula& f, const std::string& why) {
    if (reason.empty()) reason = why + ": " + format_formula(f);
    return std::nullopt;
  }

  const Ring& ring_;
  const std::optional<Open>& beta_;
};

}  // namespace

TruthOpen truth_open(const Ring& ring, const Formula& phi, const Env& env, const std::optional<Open>& beta) {
  Compiler c(ring, beta);
  TruthOpen out;
  out.value = c.run(phi, env);
  if (!out.value) out.unknown_reason = c.reason;
  return out;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kTrue:
      return "true";
    case Decision::kFalse:
      return "false";
    case Decision::kUnknown:
      return "unknown";
  }
  return {};
}

ForcingDecision forces(const Ring& ring, const Elem& f, const Formula& phi, const Env& env,
                       const std::optional<Open>& beta) {
  if (f.ring() != ring) throw RingMismatch("forcing element from another ring");
  ForcingDecision out;
  if (phi->kind == Kind::kBot) {
    out.nilpotency = is_nilpotent(f);
    out.decision = out.nilpotency ? Decision::kTrue : Decision::kFalse;
    out.truth = Open::bottom(ring);
    return out;
  }
  TruthOpen t = truth_open(ring, phi, env, beta);
  if (!t.known()) {
    out.reason = t.unknown_reason;
    return out;
  }
  out.truth = t.value;
  if (auto certs = leq(basic_open(f), *t.value)) {
    out.decision = Decision::kTrue;
    out.certificates = std::move(*certs);
  } else {
    out.decision = Decision::kFalse;
  }
  return out;
}

Open nabla_open(const Ring& ring, const Open& u) {
  if (u.ring() != ring) throw RingMismatch("open from another ring");
  if (ring.is_modular()) {
    Open acc = Open::top(ring);
    for (const auto& s : ring.elements()) {
      Open zero_locus = s.is_zero() ? Open::top(ring) : Open(annihilator(s));
      acc = meet(acc, heyting(heyting(u, zero_locus), zero_locus));
    }
    return acc;
  }
  if (ring.reducedness() == Reducedness::kKnownReduced) return negation(negation(u));
  throw UnsupportedRing("nabla on opens needs Z/n or a known-reduced ring, got " + ring.describe());
}

LocalizedElem eval_local(const Ring& ring, const Expr& term, const Elem& base,
                         const std::map<std::string, LocalizedElem>& env) {
  switch (term->op) {
    case ExprNode::Op::kNum:
      return loc_constant(base, ring.from_integer(term->num));
    case ExprNode::Op::kName: {
      auto it = env.find(term->name);
      if (it != env.end()) return it->second;
      return loc_constant(base, ring.variable(term->name));
    }
    case ExprNode::Op::kAdd:
      return loc_add(eval_local(ring, term->args[0], base, env), eval_local(ring, term->args[1], base, env));
    case ExprNode::Op::kSub:
      return loc_sub(eval_local(ring, term->args[0], base, env), eval_local(ring, term->args[1], base, env));
    case ExprNode::Op::kMul:
      return loc_mul(eval_local(ring, term->args[0], base, env), eval_local(ring, term->args[1], base, env));
    case ExprNode::Op::kNeg:
      return loc_neg(eval_local(ring, term->args[0], base, env));
    case ExprNode::Op::kPow: {
      LocalizedElem x = eval_local(ring, term->args[0], base, env);
      LocalizedElem acc = loc_constant(base, ring.one());
      for (unsigned long i = 0; i < term->exponent; ++i) acc = loc_mul(acc, x);
      return acc;
    }
    case ExprNode::Op::kDiv:
      throw UnsupportedRing("division is not available in localized terms: " + format_expr(term));
  }
  throw ParseError("bad expression");
}

namespace {

using LocalEnv = std::map<std::string, LocalizedElem>;

class CertChecker {
 public:
  explicit CertChecker(const Ring& ring) : ring_(ring) {}

  bool check(const Elem& h, const Formula& f, const LocalEnv& env, const ForcingCertPtr& cert) {
    switch (f->kind) {
      case Kind::kTop:
        return true;
      case Kind::kBot:
        return is_nilpotent(h).has_value();
      case Kind::kBeta:
        throw CertificateError("beta has no interpretation in a forcing certificate");
      case Kind::kEq: {
        LocalizedElem a = eval_local(ring_, f->terms[0], h, env);
        LocalizedElem b = eval_local(ring_, f->terms[1], h, env);
        return loc_equal(a, b).equal;
      }
      case Kind::kPred: {
        std::set<std::string> names;
        collect_names(f->terms[0], names);
        for (const auto& n : names) {
          if (env.count(n)) throw CertificateError("D(-) applied to a variable");
        }
        return leq(basic_open(h), basic_open(ring_.eval(f->terms[0]))).has_value();
      }
      case Kind::kAnd: {
        if (!cert || cert->parts.size() != f->children.size()) {
          throw CertificateError("conjunction needs one certificate part per conjunct");
        }
        for (std::size_t i = 0; i < f->children.size(); ++i) {
          if (!check(h, f->children[i], env, cert->parts[i])) return false;
        }
        return true;
      }
      case Kind::kOr:
      case Kind::kExists:
        return check_partition(h, f, env, cert);
      case Kind::kImp:
      case Kind::kForall: {
        for (const auto& n : free_names(f)) {
          if (env.count(n)) throw CertificateError("implication or forall over bound variables is not certifiable");
        }
        return forces(ring_, h, f).decision == Decision::kTrue;
      }
    }
    return false;
  }

 private:
  bool check_partition(const Elem& h, const Formula& f, const LocalEnv& env, const ForcingCertPtr& cert) {
    if (!cert) throw CertificateError("missing partition for " + format_formula(f));
    Elem sum = ring_.zero();
    for (const auto& b : cert->branches) {
      if (b.g.ring() != ring_) throw RingMismatch("partition element from another ring");
      sum = sum + h * b.g;
    }
    if (pow(h, cert->exponent) != sum) return false;
    for (const auto& b : cert->branches) {
      Elem hg = h * b.g;
      LocalEnv inner;
      for (const auto& [k, v] : env) inner.emplace(k, rebase(v, b.g));
      if (f->kind == Kind::kOr) {
        if (b.choice >= f->children.size()) throw CertificateError("disjunct choice out of range");
        if (!check(hg, f->children[b.choice], inner, b.sub)) return false;
      } else {
        if (!b.witness) throw CertificateError("existential branch without witness");
        inner.erase(f->var);
        inner.emplace(f->var, LocalizedElem(hg, *b.witness, b.witness_exponent));
        if (!check(hg, f->children[0], inner, b.sub)) return false;
      }
    }
    return true;
  }

  const Ring& ring_;
};

json cert_to_json(const ForcingCertPtr& cert) {
  if (!cert) return nullptr;
  json j;
  j["exponent"] = cert->exponent;
  json branches = json::array();
  for (const auto& b : cert->branches) {
    json jb;
    jb["g"] = b.g.str();
    jb["choice"] = b.choice;
    if (b.witness) {
      jb["witness"] = b.witness->str();
      jb["witness_exponent"] = b.witness_exponent;
    }
    jb["sub"] = cert_to_json(b.sub);
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  json parts = json::array();
  for (const auto& p : cert->parts) parts.push_back(cert_to_json(p));
  j["parts"] = std::move(parts);
  return j;
}

ForcingCertPtr cert_from_json(const Ring& ring, const json& j) {
  if (j.is_null()) return nullptr;
  if (!j.is_object()) throw ParseError("forcing certificate node must be an object or null");
  auto cert = std::make_shared<ForcingCertificate>();
  if (j.contains("exponent")) {
    if (!j["exponent"].is_number_unsigned()) throw ParseError("exponent must be a non-negative integer");
    cert->exponent = j["exponent"].get<unsigned long>();
  }
  if (j.contains("branches")) {
    for (const auto& jb : j["branches"]) {
      if (!jb.is_object() || !jb.contains("g") || !jb["g"].is_string()) throw ParseError("branch needs an element g");
      ForcingBranch b{ring.parse_elem(jb["g"].get<std::string>()), 0, std::nullopt, 0, nullptr};
      if (jb.contains("choice")) b.choice = jb["choice"].get<std::size_t>();
      if (jb.contains("witness")) {
        b.witness = ring.parse_elem(jb["witness"].get<std::string>());
        if (jb.contains("witness_exponent")) b.witness_exponent = jb["witness_exponent"].get<unsigned long>();
      }
      if (jb.contains("sub")) b.sub = cert_from_json(ring, jb["sub"]);
      cert->branches.push_back(std::move(b));
    }
  }
  if (j.contains("parts")) {
    for (const auto& p : j["parts"]) cert->parts.push_back(cert_from_json(ring, p));
  }
  return cert;
}

}  // namespace

bool check_forcing_certificate(const Ring& ring, const Elem& f, const Formula& phi, const Env& env,
                               const ForcingCertPtr& cert) {
  if (f.ring() != ring) throw RingMismatch("forcing element from another ring");
  LocalEnv local;
  for (const auto& [k, v] : env) local.emplace(k, loc_constant(f, v));
  CertChecker c(ring);
  return c.check(f, phi, local, cert);
}

namespace {

class CertBuilder {
 public:
  explicit CertBuilder(const Ring& ring) : ring_(ring) {}

  // Outer nullopt: no certificate; inner null: the node needs no data.
  std::optional<ForcingCertPtr> build(const Elem& h, const Formula& f, const Env& env) {
    switch (f->kind) {
      case Kind::kTop:
        return ForcingCertPtr{};
      case Kind::kBot:
        if (is_nilpotent(h)) return ForcingCertPtr{};
        return std::nullopt;
      case Kind::kBeta:
        return std::nullopt;
      case Kind::kPred:
        for (const auto& n : free_names(f)) {
          if (env.count(n)) return std::nullopt;
        }
        [[fallthrough]];
      case Kind::kEq:
      case Kind::kImp:
      case Kind::kForall:
        if (f->kind != Kind::kEq && f->kind != Kind::kPred) {
          for (const auto& n : free_names(f)) {
            if (env.count(n)) return std::nullopt;
          }
        }
        if (forced(h, f, env)) return ForcingCertPtr{};
        return std::nullopt;
      case Kind::kAnd: {
        auto cert = std::make_shared<ForcingCertificate>();
        for (const auto& c : f->children) {
          auto part = build(h, c, env);
          if (!part) return std::nullopt;
          cert->parts.push_back(*part);
        }
        return ForcingCertPtr(cert);
      }
      case Kind::kOr:
        return disjunction(h, f, env);
      case Kind::kExists:
        return existential(h, f, env);
    }
    return std::nullopt;
  }

 private:
  bool forced(const Elem& h, const Formula& f, const Env& env) {
    TruthOpen t = truth_open(ring_, f, env);
    return t.known() && leq(basic_open(h), *t.value).has_value();
  }

  std::optional<ForcingCertPtr> disjunction(const Elem& h, const Formula& f, const Env& env) {
    std::vector<Elem> gens;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < f->children.size(); ++i) {
      TruthOpen t = truth_open(ring_, f->children[i], env);
      if (!t.known()) return std::nullopt;
      for (const auto& g : t.value->support().generators()) {
        gens.push_back(g);
        owner.push_back(i);
      }
    }
    auto m = radical_membership(Ideal(ring_, gens), h);
    if (!m) return std::nullopt;
    auto cert = std::make_shared<ForcingCertificate>();
    cert->exponent = m->exponent + 1;
    for (const auto& cf : m->cofactors) {
      Elem g = cf.u * gens[cf.index];
      if (g.is_zero()) continue;
      std::size_t choice = owner[cf.index];
      auto sub = build(h * g, f->children[choice], env);
      if (!sub) return std::nullopt;
      cert->branches.push_back(ForcingBranch{g, choice, std::nullopt, 0, *sub});
    }
    return ForcingCertPtr(cert);
  }

  std::optional<ForcingCertPtr> existential(const Elem& h, const Formula& f, const Env& env) {
    const Formula& body = f->children[0];
    Env inner = env;
    inner.erase(f->var);
    auto cert = std::make_shared<ForcingCertificate>();
    if (!free_names(body).count(f->var)) {
      auto sub = build(h, body, inner);
      if (!sub) return std::nullopt;
      cert->branches.push_back(ForcingBranch{ring_.one(), 0, ring_.zero(), 0, *sub});
      return ForcingCertPtr(cert);
    }
    auto lin = match_linear(body, f->var);
    if (!lin) return ring_.is_finite() ? enumerated(h, f, inner) : std::nullopt;
    Elem a = ring_.eval(lin->coefficient, inner);
    Elem c = ring_.eval(lin->rhs, inner);
    Ideal q = ideal_quotient(Ideal(ring_, {a}), Ideal(ring_, {c}));
    auto m = radical_membership(q, h);
    if (!m) return std::nullopt;
    // h^k = sum u_i q_i and q_i c = w_i a, so a * (sum u_i w_i) = h^k c.
    Elem w = ring_.zero();
    for (const auto& cf : m->cofactors) {
      Elem qc = q.generators()[cf.index] * c;
      auto in_a = ideal_membership(Ideal(ring_, {a}), qc);
      if (!in_a) return std::nullopt;
      Elem wi = ring_.zero();
      for (const auto& x : in_a->cofactors) wi = wi + x.u;
      w = w + cf.u * wi;
    }
    cert->branches.push_back(ForcingBranch{ring_.one(), 0, w, m->exponent, nullptr});
    return ForcingCertPtr(cert);
  }

  // Z/n: every element of a localization lifts to a constant, so the
  // witnesses range over the ring itself.
  std::optional<ForcingCertPtr> enumerated(const Elem& h, const Formula& f, const Env& env) {
    const Formula& body = f->children[0];
    std::vector<Elem> gens;
    std::vector<Elem> owner;
    for (const auto& w : ring_.elements()) {
      Env inner = env;
      inner.insert_or_assign(f->var, w);
      TruthOpen t = truth_open(ring_, body, inner);
      if (!t.known()) return std::nullopt;
      for (const auto& g : t.value->support().generators()) {
        gens.push_back(g);
        owner.push_back(w);
      }
    }
    auto m = radical_membership(Ideal(ring_, gens), h);
    if (!m) return std::nullopt;
    auto cert = std::make_shared<ForcingCertificate>();
    cert->exponent = m->exponent + 1;
    for (const auto& cf : m->cofactors) {
      Elem g = cf.u * gens[cf.index];
      if (g.is_zero()) continue;
      Env inner = env;
      inner.insert_or_assign(f->var, owner[cf.index]);
      auto sub = build(h * g, body, inner);
      if (!sub) return std::nullopt;
      cert->branches.push_back(ForcingBranch{g, 0, owner[cf.index], 0, *sub});
    }
    return ForcingCertPtr(cert);
  }

  const Ring& ring_;
};

}  // namespace

std::optional<ForcingCertPtr> forcing_certificate(const Ring& ring, const Elem& f, const Formula& phi,
                                                  const Env& env) {
  if (f.ring() != ring) throw RingMismatch("forcing element from another ring");
  CertBuilder b(ring);
  auto cert = b.build(f, phi, env);
  if (cert && !check_forcing_certificate(ring, f, phi, env, *cert)) {
    throw CertificateError("built forcing certificate does not verify for " + format_formula(phi));
  }
  return cert;
}

std::string forcing_certificate_to_json(const ForcingCertPtr& cert) { return cert_to_json(cert).dump(); }

ForcingCertPtr forcing_certificate_from_json(const Ring& ring, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("forcing certificate is not valid JSON: ") + e.what());
  }
  try {
    return cert_from_json(ring, j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed forcing certificate: ") + e.what());
  }
}

}  // namespace zariski
