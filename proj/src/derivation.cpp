#include "zariski/derivation.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "zariski/errors.hpp"

namespace zariski {

using Kind = FormulaNode::Kind;
using json = nlohmann::json;

Derivation make_derivation(std::string rule, Sequent conclusion, std::vector<Derivation> premises, RuleData data) {
  auto d = std::make_shared<DerivationNode>();
  d->rule = std::move(rule);
  d->conclusion = std::move(conclusion);
  d->premises = std::move(premises);
  d->data = std::move(data);
  return d;
}

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names = {
      "identity",      "cut",           "substitution",    "top-intro",        "and-elim-left",
      "and-elim-right", "and-intro",    "bot-elim",        "or-intro-left",    "or-intro-right",
      "or-elim",       "bigor-intro",   "bigor-elim",      "exists-elim",      "exists-elim-inv",
      "frobenius-or",  "frobenius-exists", "eq-refl",      "eq-subst",         "bigand-elim",
      "bigand-intro",  "imp-intro",     "imp-elim",        "forall-intro",     "forall-elim",
      "axiom"};
  return names;
}

std::string CheckResult::describe() const {
  if (ok) return "ok";
  std::string p = "root";
  for (auto i : path) p += "." + std::to_string(i);
  return "rejected at " + p + " (" + rule + "): " + reason;
}

namespace {

using Error = std::optional<std::string>;

bool feq(const Formula& a, const Formula& b) { return formula_equal(a, b); }

bool is_binary(const Formula& f, Kind k) { return f->kind == k && !f->indexed; }
bool is_family(const Formula& f, Kind k) { return f->kind == k && f->indexed; }

bool in_context(const Context& ctx, const std::string& v) {
  return std::find(ctx.begin(), ctx.end(), v) != ctx.end();
}

std::string show(const Formula& f) { return format_formula(f); }

class Checker {
 public:
  Checker(const std::vector<Sequent>& axioms, const std::set<std::string>& constants)
      : axioms_(axioms), constants_(constants) {}

  CheckResult run(const Derivation& d) {
    CheckResult result;
    std::vector<std::size_t> path;
    visit(d, path, result);
    return result;
  }

 private:
  bool visit(const Derivation& d, std::vector<std::size_t>& path, CheckResult& result) {
    if (verified_.count(d.get())) return true;
    if (Error e = check_node(*d)) {
      result.ok = false;
      result.path = path;
      result.rule = d->rule;
      result.reason = *e;
      return false;
    }
    for (std::size_t i = 0; i < d->premises.size(); ++i) {
      path.push_back(i);
      bool ok = visit(d->premises[i], path, result);
      path.pop_back();
      if (!ok) return false;
    }
    verified_.insert(d.get());
    return true;
  }

  Error well_formed(const Sequent& s) const {
    try {
      check_well_formed(s.lhs, s.context, constants_);
      check_well_formed(s.rhs, s.context, constants_);
    } catch (const std::exception& e) {
      return std::string("conclusion not well-formed: ") + e.what();
    }
    return std::nullopt;
  }

  static Error arity(const DerivationNode& d, std::size_t n) {
    if (d.premises.size() != n) {
      return "rule takes " + std::to_string(n) + " premise(s), got " + std::to_string(d.premises.size());
    }
    return std::nullopt;
  }

  static Error same_context(const DerivationNode& d) {
    for (const auto& p : d.premises) {
      if (p->conclusion.context != d.conclusion.context) return "premise context differs from conclusion context";
    }
    return std::nullopt;
  }

  Error check_node(const DerivationNode& d) const {
    if (!d.conclusion.lhs || !d.conclusion.rhs) return "missing conclusion";
    for (const auto& p : d.premises) {
      if (!p) return "missing premise";
    }
    if (Error e = well_formed(d.conclusion)) return e;
    auto it = rules().find(d.rule);
    if (it == rules().end()) return "unknown rule '" + d.rule + "'";
    return it->second(this, d);
  }

  using RuleFn = std::function<Error(const Checker*, const DerivationNode&)>;

  static const std::map<std::string, RuleFn>& rules() {
    static const std::map<std::string, RuleFn> table = {
        {"identity", &Checker::identity},
        {"cut", &Checker::cut},
        {"substitution", &Checker::substitution},
        {"top-intro", &Checker::top_intro},
        {"and-elim-left", [](const Checker*, const DerivationNode& d) { return and_elim(d, 0); }},
        {"and-elim-right", [](const Checker*, const DerivationNode& d) { return and_elim(d, 1); }},
        {"and-intro", &Checker::and_intro},
        {"bot-elim", &Checker::bot_elim},
        {"or-intro-left", [](const Checker*, const DerivationNode& d) { return or_intro(d, 0); }},
        {"or-intro-right", [](const Checker*, const DerivationNode& d) { return or_intro(d, 1); }},
        {"or-elim", &Checker::or_elim},
        {"bigor-intro", &Checker::bigor_intro},
        {"bigor-elim", &Checker::bigor_elim},
        {"exists-elim", &Checker::exists_elim},
        {"exists-elim-inv", &Checker::exists_elim_inv},
        {"frobenius-or", &Checker::frobenius_or},
        {"frobenius-exists", &Checker::frobenius_exists},
        {"eq-refl", &Checker::eq_refl},
        {"eq-subst", &Checker::eq_subst},
        {"bigand-elim", &Checker::bigand_elim},
        {"bigand-intro", &Checker::bigand_intro},
        {"imp-intro", &Checker::imp_intro},
        {"imp-elim", &Checker::imp_elim},
        {"forall-intro", &Checker::forall_intro},
        {"forall-elim", &Checker::forall_elim},
        {"axiom", &Checker::axiom},
    };
    return table;
  }

  static Error identity(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    if (!feq(d.conclusion.lhs, d.conclusion.rhs)) return std::string("antecedent and succedent differ");
    return std::nullopt;
  }

  static Error cut(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 2)) return e;
    if (Error e = same_context(d)) return e;
    const Sequent& a = d.premises[0]->conclusion;
    const Sequent& b = d.premises[1]->conclusion;
    if (!feq(a.lhs, d.conclusion.lhs)) return std::string("first premise antecedent does not match");
    if (!feq(a.rhs, b.lhs)) return std::string("cut formulas differ: " + show(a.rhs) + " vs " + show(b.lhs));
    if (!feq(b.rhs, d.conclusion.rhs)) return std::string("second premise succedent does not match");
    return std::nullopt;
  }

  static Error substitution(const Checker* self, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    const Sequent& p = d.premises[0]->conclusion;
    std::map<std::string, Expr> subst;
    for (const auto& [var, term] : d.data.substitution) {
      if (!in_context(p.context, var)) return "substituted variable '" + var + "' is not in the premise context";
      std::set<std::string> names;
      collect_names(term, names);
      for (const auto& n : names) {
        if (!in_context(d.conclusion.context, n) && !self->constants_.count(n)) {
          return "term for '" + var + "' uses '" + n + "' outside the conclusion context";
        }
      }
      subst[var] = term;
    }
    for (const auto& v : p.context) {
      if (!subst.count(v) && !in_context(d.conclusion.context, v)) {
        return "premise variable '" + v + "' is neither substituted nor in the conclusion context";
      }
    }
    auto lhs = substitute(p.lhs, subst);
    auto rhs = substitute(p.rhs, subst);
    if (!lhs || !rhs) return std::string("substituted term would be captured by a quantifier");
    if (!feq(*lhs, d.conclusion.lhs) || !feq(*rhs, d.conclusion.rhs)) {
      return std::string("conclusion is not the premise under the substitution");
    }
    return std::nullopt;
  }

  static Error top_intro(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    if (d.conclusion.rhs->kind != Kind::kTop) return std::string("succedent is not true");
    return std::nullopt;
  }

  static Error and_elim(const DerivationNode& d, int side) {
    if (Error e = arity(d, 0)) return e;
    const Formula& l = d.conclusion.lhs;
    if (!is_binary(l, Kind::kAnd)) return std::string("antecedent is not a binary conjunction");
    if (!feq(l->children[side], d.conclusion.rhs)) {
      return std::string(side == 0 ? "succedent is not the left conjunct" : "succedent is not the right conjunct");
    }
    return std::nullopt;
  }

  static Error and_intro(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 2)) return e;
    if (Error e = same_context(d)) return e;
    const Formula& r = d.conclusion.rhs;
    if (!is_binary(r, Kind::kAnd)) return std::string("succedent is not a binary conjunction");
    for (int i = 0; i < 2; ++i) {
      const Sequent& p = d.premises[i]->conclusion;
      if (!feq(p.lhs, d.conclusion.lhs)) return "premise " + std::to_string(i) + " antecedent does not match";
      if (!feq(p.rhs, r->children[i])) return "premise " + std::to_string(i) + " does not prove the conjunct";
    }
    return std::nullopt;
  }

  static Error bot_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    if (d.conclusion.lhs->kind != Kind::kBot) return std::string("antecedent is not false");
    return std::nullopt;
  }

  static Error or_intro(const DerivationNode& d, int side) {
    if (Error e = arity(d, 0)) return e;
    const Formula& r = d.conclusion.rhs;
    if (!is_binary(r, Kind::kOr)) return std::string("succedent is not a binary disjunction");
    if (!feq(r->children[side], d.conclusion.lhs)) {
      return std::string(side == 0 ? "antecedent is not the left disjunct" : "antecedent is not the right disjunct");
    }
    return std::nullopt;
  }

  static Error or_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 2)) return e;
    if (Error e = same_context(d)) return e;
    const Formula& l = d.conclusion.lhs;
    if (!is_binary(l, Kind::kOr)) return std::string("antecedent is not a binary disjunction");
    for (int i = 0; i < 2; ++i) {
      const Sequent& p = d.premises[i]->conclusion;
      if (!feq(p.lhs, l->children[i])) return "premise " + std::to_string(i) + " does not start from the disjunct";
      if (!feq(p.rhs, d.conclusion.rhs)) return "premise " + std::to_string(i) + " succedent does not match";
    }
    return std::nullopt;
  }

  static Error bigor_intro(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    const Formula& r = d.conclusion.rhs;
    if (!is_family(r, Kind::kOr)) return std::string("succedent is not an indexed disjunction");
    if (!d.data.index) return std::string("missing disjunct index");
    if (*d.data.index >= r->children.size()) return std::string("disjunct index out of range");
    if (!feq(r->children[*d.data.index], d.conclusion.lhs)) return std::string("antecedent is not the chosen disjunct");
    return std::nullopt;
  }

  static Error bigor_elim(const Checker*, const DerivationNode& d) {
    const Formula& l = d.conclusion.lhs;
    if (!is_family(l, Kind::kOr)) return std::string("antecedent is not an indexed disjunction");
    if (Error e = arity(d, l->children.size())) return e;
    if (Error e = same_context(d)) return e;
    for (std::size_t i = 0; i < l->children.size(); ++i) {
      const Sequent& p = d.premises[i]->conclusion;
      if (!feq(p.lhs, l->children[i])) return "premise " + std::to_string(i) + " does not start from the disjunct";
      if (!feq(p.rhs, d.conclusion.rhs)) return "premise " + std::to_string(i) + " succedent does not match";
    }
    return std::nullopt;
  }

  // upper: phi |-[x,y] psi, lower: Q y. ... |-[x] ...
  static Error extended_context(const Context& upper, const Context& lower, const std::string& y) {
    if (in_context(lower, y)) return "bound variable '" + y + "' already in the context";
    Context expected = lower;
    expected.push_back(y);
    if (upper != expected) return "premise context must be the conclusion context extended by '" + y + "'";
    return std::nullopt;
  }

  static Error exists_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    const Sequent& p = d.premises[0]->conclusion;
    const Formula& l = d.conclusion.lhs;
    if (l->kind != Kind::kExists) return std::string("antecedent is not existential");
    if (Error e = extended_context(p.context, d.conclusion.context, l->var)) return e;
    if (free_names(d.conclusion.rhs).count(l->var)) return "'" + l->var + "' is free in the succedent";
    if (!feq(p.lhs, l->children[0]) || !feq(p.rhs, d.conclusion.rhs)) {
      return std::string("premise does not match the quantified sequent");
    }
    return std::nullopt;
  }

  static Error exists_elim_inv(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    const Sequent& p = d.premises[0]->conclusion;
    const Formula& l = p.lhs;
    if (l->kind != Kind::kExists) return std::string("premise antecedent is not existential");
    if (Error e = extended_context(d.conclusion.context, p.context, l->var)) return e;
    if (free_names(p.rhs).count(l->var)) return "'" + l->var + "' is free in the succedent";
    if (!feq(d.conclusion.lhs, l->children[0]) || !feq(p.rhs, d.conclusion.rhs)) {
      return std::string("conclusion does not match the quantified premise");
    }
    return std::nullopt;
  }

  static Error frobenius_or(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    const Formula& l = d.conclusion.lhs;
    const Formula& r = d.conclusion.rhs;
    if (!is_binary(l, Kind::kAnd) || l->children[0]->kind != Kind::kOr) {
      return std::string("antecedent is not (disjunction) & psi");
    }
    const Formula& dis = l->children[0];
    const Formula& psi = l->children[1];
    if (r->kind != Kind::kOr || r->indexed != dis->indexed || r->children.size() != dis->children.size()) {
      return std::string("succedent does not distribute the disjunction");
    }
    for (std::size_t i = 0; i < dis->children.size(); ++i) {
      const Formula& c = r->children[i];
      if (!is_binary(c, Kind::kAnd) || !feq(c->children[0], dis->children[i]) || !feq(c->children[1], psi)) {
        return "disjunct " + std::to_string(i) + " is not (phi_i & psi)";
      }
    }
    return std::nullopt;
  }

  static Error frobenius_exists(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    const Formula& l = d.conclusion.lhs;
    const Formula& r = d.conclusion.rhs;
    if (!is_binary(l, Kind::kAnd) || l->children[0]->kind != Kind::kExists) {
      return std::string("antecedent is not (exists y. phi) & psi");
    }
    const Formula& ex = l->children[0];
    if (in_context(d.conclusion.context, ex->var)) return "'" + ex->var + "' is one of the context variables";
    if (r->kind != Kind::kExists || r->var != ex->var) return std::string("succedent is not exists over the same variable");
    const Formula& body = r->children[0];
    if (!is_binary(body, Kind::kAnd) || !feq(body->children[0], ex->children[0]) || !feq(body->children[1], l->children[1])) {
      return std::string("succedent body is not (phi & psi)");
    }
    return std::nullopt;
  }

  static Error eq_refl(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    if (d.conclusion.lhs->kind != Kind::kTop) return std::string("antecedent is not true");
    const Formula& r = d.conclusion.rhs;
    if (r->kind != Kind::kEq) return std::string("succedent is not an equation");
    const Expr& t = r->terms[0];
    if (t->op != ExprNode::Op::kName || !in_context(d.conclusion.context, t->name)) {
      return std::string("reflexivity applies to a context variable");
    }
    if (!expr_equal(t, r->terms[1])) return std::string("sides of the equation differ");
    return std::nullopt;
  }

  static Error eq_subst(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    const auto& xs = d.data.from;
    const auto& ys = d.data.to;
    if (xs.empty() || xs.size() != ys.size()) return std::string("needs equally long nonempty variable lists");
    for (const auto* list : {&xs, &ys}) {
      for (const auto& v : *list) {
        if (!in_context(d.conclusion.context, v)) return "'" + v + "' is not a context variable";
      }
    }
    std::set<std::string> distinct(xs.begin(), xs.end());
    if (distinct.size() != xs.size()) return std::string("substituted variables must be distinct");
    const Formula& l = d.conclusion.lhs;
    if (!is_binary(l, Kind::kAnd)) return std::string("antecedent is not (x = y) & phi");
    Formula expected = fm::eq(make_name(xs[0]), make_name(ys[0]));
    for (std::size_t i = 1; i < xs.size(); ++i) {
      expected = fm::conj(expected, fm::eq(make_name(xs[i]), make_name(ys[i])));
    }
    if (!feq(l->children[0], expected)) return std::string("equations do not match the variable lists");
    std::map<std::string, Expr> subst;
    for (std::size_t i = 0; i < xs.size(); ++i) subst[xs[i]] = make_name(ys[i]);
    auto r = substitute(l->children[1], subst);
    if (!r) return std::string("substitution would be captured by a quantifier");
    if (!feq(*r, d.conclusion.rhs)) return std::string("succedent is not phi[y/x]");
    return std::nullopt;
  }

  static Error bigand_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    const Formula& l = d.conclusion.lhs;
    if (!is_family(l, Kind::kAnd)) return std::string("antecedent is not an indexed conjunction");
    if (!d.data.index) return std::string("missing conjunct index");
    if (*d.data.index >= l->children.size()) return std::string("conjunct index out of range");
    if (!feq(l->children[*d.data.index], d.conclusion.rhs)) return std::string("succedent is not the chosen conjunct");
    return std::nullopt;
  }

  static Error bigand_intro(const Checker*, const DerivationNode& d) {
    const Formula& r = d.conclusion.rhs;
    if (!is_family(r, Kind::kAnd)) return std::string("succedent is not an indexed conjunction");
    if (Error e = arity(d, r->children.size())) return e;
    if (Error e = same_context(d)) return e;
    for (std::size_t i = 0; i < r->children.size(); ++i) {
      const Sequent& p = d.premises[i]->conclusion;
      if (!feq(p.lhs, d.conclusion.lhs)) return "premise " + std::to_string(i) + " antecedent does not match";
      if (!feq(p.rhs, r->children[i])) return "premise " + std::to_string(i) + " does not prove the conjunct";
    }
    return std::nullopt;
  }

  // phi & psi |- chi  <=>  phi |- psi => chi
  static Error implication_match(const Sequent& upper, const Sequent& lower) {
    const Formula& l = upper.lhs;
    const Formula& r = lower.rhs;
    if (!is_binary(l, Kind::kAnd)) return std::string("upper antecedent is not a binary conjunction");
    if (r->kind != Kind::kImp) return std::string("lower succedent is not an implication");
    if (!feq(l->children[0], lower.lhs)) return std::string("left conjunct does not match the lower antecedent");
    if (!feq(l->children[1], r->children[0])) return std::string("right conjunct is not the hypothesis of the implication");
    if (!feq(upper.rhs, r->children[1])) return std::string("upper succedent is not the consequent");
    return std::nullopt;
  }

  static Error imp_intro(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    if (Error e = same_context(d)) return e;
    return implication_match(d.premises[0]->conclusion, d.conclusion);
  }

  static Error imp_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    if (Error e = same_context(d)) return e;
    return implication_match(d.conclusion, d.premises[0]->conclusion);
  }

  // phi |-[x,y] psi  <=>  phi |-[x] forall y. psi
  static Error universal_match(const Sequent& upper, const Sequent& lower) {
    const Formula& r = lower.rhs;
    if (r->kind != Kind::kForall) return std::string("succedent is not universal");
    if (Error e = extended_context(upper.context, lower.context, r->var)) return e;
    if (free_names(lower.lhs).count(r->var)) return "'" + r->var + "' is free in the antecedent";
    if (!feq(upper.lhs, lower.lhs) || !feq(upper.rhs, r->children[0])) {
      return std::string("sequents do not match the quantified form");
    }
    return std::nullopt;
  }

  static Error forall_intro(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    return universal_match(d.premises[0]->conclusion, d.conclusion);
  }

  static Error forall_elim(const Checker*, const DerivationNode& d) {
    if (Error e = arity(d, 1)) return e;
    return universal_match(d.conclusion, d.premises[0]->conclusion);
  }

  static bool axiom_matches(const Sequent& ax, const Sequent& s) {
    if (!feq(ax.lhs, s.lhs) || !feq(ax.rhs, s.rhs)) return false;
    for (const auto& v : ax.context) {
      if (!in_context(s.context, v)) return false;
    }
    return true;
  }

  static Error axiom(const Checker* self, const DerivationNode& d) {
    if (Error e = arity(d, 0)) return e;
    if (d.data.index) {
      if (*d.data.index >= self->axioms_.size()) return std::string("axiom index out of range");
      if (!axiom_matches(self->axioms_[*d.data.index], d.conclusion)) {
        return "sequent does not match axiom " + std::to_string(*d.data.index);
      }
      return std::nullopt;
    }
    for (const auto& ax : self->axioms_) {
      if (axiom_matches(ax, d.conclusion)) return std::nullopt;
    }
    return std::string("sequent is not an axiom");
  }

  const std::vector<Sequent>& axioms_;
  const std::set<std::string>& constants_;
  std::unordered_set<const DerivationNode*> verified_;
};

json to_json(const Derivation& d) {
  json j;
  j["rule"] = d->rule;
  j["conclusion"] = format_sequent(d->conclusion);
  json premises = json::array();
  for (const auto& p : d->premises) premises.push_back(to_json(p));
  j["premises"] = std::move(premises);
  if (!d->data.empty()) {
    json data = json::object();
    if (d->data.index) data["index"] = *d->data.index;
    if (!d->data.substitution.empty()) {
      json s = json::object();
      for (const auto& [k, v] : d->data.substitution) s[k] = format_expr(v);
      data["substitution"] = std::move(s);
    }
    if (!d->data.from.empty()) data["from"] = d->data.from;
    if (!d->data.to.empty()) data["to"] = d->data.to;
    j["data"] = std::move(data);
  }
  return j;
}

Derivation from_json(const json& j, const std::set<std::string>& constants) {
  if (!j.is_object()) throw ParseError("derivation node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) throw ParseError("derivation node without rule");
  if (!j.contains("conclusion") || !j["conclusion"].is_string()) throw ParseError("derivation node without conclusion");
  std::string rule = j["rule"].get<std::string>();
  Sequent conclusion;
  try {
    conclusion = parse_sequent(j["conclusion"].get<std::string>(), constants);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("ill-formed conclusion: ") + e.what());
  }
  std::vector<Derivation> premises;
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw ParseError("premises must be an array");
    for (const auto& p : j["premises"]) premises.push_back(from_json(p, constants));
  }
  RuleData data;
  if (j.contains("data")) {
    const json& dj = j["data"];
    if (!dj.is_object()) throw ParseError("data must be an object");
    if (dj.contains("index")) {
      if (!dj["index"].is_number_unsigned()) throw ParseError("index must be a non-negative integer");
      data.index = dj["index"].get<std::size_t>();
    }
    if (dj.contains("substitution")) {
      if (!dj["substitution"].is_object()) throw ParseError("substitution must be an object");
      for (const auto& [k, v] : dj["substitution"].items()) {
        if (!v.is_string()) throw ParseError("substitution terms must be strings");
        data.substitution[k] = parse_expr(v.get<std::string>());
      }
    }
    for (const char* key : {"from", "to"}) {
      if (!dj.contains(key)) continue;
      if (!dj[key].is_array()) throw ParseError(std::string(key) + " must be an array");
      auto& dest = std::string(key) == "from" ? data.from : data.to;
      for (const auto& v : dj[key]) {
        if (!v.is_string()) throw ParseError(std::string(key) + " entries must be strings");
        dest.push_back(v.get<std::string>());
      }
    }
  }
  return make_derivation(std::move(rule), std::move(conclusion), std::move(premises), std::move(data));
}

Formula d_of(const Integer& k) { return fm::pred(make_num(k)); }

Sequent seq(Formula lhs, Formula rhs) { return Sequent{{}, std::move(lhs), std::move(rhs)}; }

}  // namespace

CheckResult check_derivation(const std::vector<Sequent>& axioms, const Derivation& d,
                             const std::set<std::string>& constants) {
  Checker c(axioms, constants);
  return c.run(d);
}

std::size_t derivation_size(const Derivation& d) {
  std::unordered_set<const DerivationNode*> seen;
  std::vector<const DerivationNode*> stack = {d.get()};
  while (!stack.empty()) {
    const DerivationNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& p : n->premises) stack.push_back(p.get());
  }
  return seen.size();
}

std::string derivation_to_json(const Derivation& d) { return to_json(d).dump(2); }

Derivation derivation_from_json(const std::string& text, const std::set<std::string>& constants) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("derivation is not valid JSON: ") + e.what());
  }
  return from_json(j, constants);
}

std::vector<Sequent> prime_filter_theory(const Ring& ring) {
  if (!ring.is_modular()) throw UnsupportedRing("prime-filter theory is enumerated for Z/n only");
  const Integer& n = ring.modulus();
  std::vector<Sequent> out;
  out.push_back(seq(d_of(0), fm::bot()));
  for (Integer x = 0; x < n; ++x) {
    for (Integer y = 0; y < n; ++y) {
      Integer s = (x + y) % n;
      out.push_back(seq(d_of(s), fm::disj(d_of(x), d_of(y))));
    }
  }
  for (Integer x = 0; x < n; ++x) {
    for (Integer y = 0; y < n; ++y) {
      Integer p = (x * y) % n;
      out.push_back(seq(d_of(p), d_of(x)));
    }
  }
  out.push_back(seq(fm::top(), d_of(Integer(1) % n)));
  for (Integer x = 0; x < n; ++x) {
    for (Integer y = 0; y < n; ++y) {
      Integer p = (x * y) % n;
      out.push_back(seq(fm::conj(d_of(x), d_of(y)), d_of(p)));
    }
  }
  return out;
}

std::vector<Sequent> prime_filter_theory_restricted(const std::vector<Integer>& symbols) {
  std::set<Integer> s(symbols.begin(), symbols.end());
  for (const auto& k : s) {
    if (k < 0) throw ParseError("restricted symbols must be non-negative");
  }
  std::vector<Sequent> out;
  if (s.count(0)) out.push_back(seq(d_of(0), fm::bot()));
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (s.count(x + y)) out.push_back(seq(d_of(x + y), fm::disj(d_of(x), d_of(y))));
    }
  }
  for (const auto& p : s) {
    for (const auto& x : s) {
      if (x == 0) {
        if (p == 0) out.push_back(seq(d_of(0), d_of(0)));
      } else if (p % x == 0) {
        out.push_back(seq(d_of(p), d_of(x)));
      }
    }
  }
  if (s.count(1)) out.push_back(seq(fm::top(), d_of(1)));
  for (const auto& x : s) {
    for (const auto& y : s) {
      if (s.count(x * y)) out.push_back(seq(fm::conj(d_of(x), d_of(y)), d_of(x * y)));
    }
  }
  return out;
}

}  // namespace zariski
