#include "zariski/formula.hpp"

#include <utility>

namespace zariski {

namespace {

using Kind = FormulaNode::Kind;

Formula make(Kind kind) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = kind;
  return f;
}

Formula make_family(Kind kind, std::vector<Formula> family, bool indexed) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = kind;
  f->children = std::move(family);
  f->indexed = indexed;
  return f;
}

Formula make_quant(Kind kind, std::string var, Formula body) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = kind;
  f->var = std::move(var);
  f->children = {std::move(body)};
  return f;
}

}  // namespace

namespace fm {

Formula eq(Expr lhs, Expr rhs) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = Kind::kEq;
  f->terms = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula pred(Expr arg) {
  auto f = std::make_shared<FormulaNode>();
  f->kind = Kind::kPred;
  f->terms = {std::move(arg)};
  return f;
}

Formula beta() { return make(Kind::kBeta); }
Formula top() { return make(Kind::kTop); }
Formula bot() { return make(Kind::kBot); }
Formula conj(Formula a, Formula b) { return make_family(Kind::kAnd, {std::move(a), std::move(b)}, false); }
Formula disj(Formula a, Formula b) { return make_family(Kind::kOr, {std::move(a), std::move(b)}, false); }
Formula big_and(std::vector<Formula> family) { return make_family(Kind::kAnd, std::move(family), true); }
Formula big_or(std::vector<Formula> family) { return make_family(Kind::kOr, std::move(family), true); }
Formula imp(Formula a, Formula b) { return make_family(Kind::kImp, {std::move(a), std::move(b)}, false); }
Formula neg(Formula a) { return imp(std::move(a), bot()); }
Formula forall(std::string var, Formula body) { return make_quant(Kind::kForall, std::move(var), std::move(body)); }
Formula exists(std::string var, Formula body) { return make_quant(Kind::kExists, std::move(var), std::move(body)); }
Formula nabla(Formula phi) { return imp(imp(std::move(phi), beta()), beta()); }

Formula invertible(Expr x) {
  std::set<std::string> names;
  collect_names(x, names);
  std::string y = "y";
  while (names.count(y)) y += "'";
  return exists(y, eq(make_binary(ExprNode::Op::kMul, x, make_name(y)), make_num(1)));
}

}  // namespace fm

bool formula_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->indexed != b->indexed || a->var != b->var) return false;
  if (a->terms.size() != b->terms.size() || a->children.size() != b->children.size()) return false;
  for (std::size_t i = 0; i < a->terms.size(); ++i) {
    if (!expr_equal(a->terms[i], b->terms[i])) return false;
  }
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!formula_equal(a->children[i], b->children[i])) return false;
  }
  return true;
}

namespace {

void free_names_into(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  for (const auto& t : f->terms) {
    std::set<std::string> names;
    collect_names(t, names);
    for (const auto& n : names) {
      if (!bound.count(n)) out.insert(n);
    }
  }
  if (f->kind == Kind::kForall || f->kind == Kind::kExists) {
    bool fresh = bound.insert(f->var).second;
    free_names_into(f->children[0], bound, out);
    if (fresh) bound.erase(f->var);
    return;
  }
  for (const auto& c : f->children) free_names_into(c, bound, out);
}

std::optional<Formula> subst_rec(const Formula& f, const std::map<std::string, Expr>& subst) {
  if (subst.empty()) return f;
  switch (f->kind) {
    case Kind::kEq:
    case Kind::kPred: {
      auto copy = std::make_shared<FormulaNode>(*f);
      for (auto& t : copy->terms) t = substitute(t, subst);
      return Formula(copy);
    }
    case Kind::kForall:
    case Kind::kExists: {
      std::map<std::string, Expr> inner = subst;
      inner.erase(f->var);
      std::set<std::string> body_free = free_names(f->children[0]);
      for (const auto& [name, term] : inner) {
        if (!body_free.count(name)) continue;
        std::set<std::string> term_names;
        collect_names(term, term_names);
        if (term_names.count(f->var)) return std::nullopt;
      }
      auto body = subst_rec(f->children[0], inner);
      if (!body) return std::nullopt;
      return make_quant(f->kind, f->var, std::move(*body));
    }
    default: {
      if (f->children.empty()) return f;
      auto copy = std::make_shared<FormulaNode>(*f);
      for (auto& c : copy->children) {
        auto r = subst_rec(c, subst);
        if (!r) return std::nullopt;
        c = std::move(*r);
      }
      return Formula(copy);
    }
  }
}

}  // namespace

std::set<std::string> free_names(const Formula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  free_names_into(f, bound, out);
  return out;
}

std::optional<Formula> substitute(const Formula& f, const std::map<std::string, Expr>& subst) {
  return subst_rec(f, subst);
}

bool is_negation(const Formula& f) { return f->kind == Kind::kImp && f->children[1]->kind == Kind::kBot; }

std::optional<Formula> match_nabla(const Formula& f) {
  if (f->kind != Kind::kImp || f->children[1]->kind != Kind::kBeta) return std::nullopt;
  const Formula& inner = f->children[0];
  if (inner->kind != Kind::kImp || inner->children[1]->kind != Kind::kBeta) return std::nullopt;
  return inner->children[0];
}

namespace {

// Formulas that print as a single syntactic unit and never need parentheses.
bool is_closed_form(const Formula& f) {
  switch (f->kind) {
    case Kind::kPred:
    case Kind::kBeta:
    case Kind::kTop:
    case Kind::kBot:
      return true;
    case Kind::kAnd:
    case Kind::kOr:
      return f->indexed;
    case Kind::kImp:
      return match_nabla(f).has_value();
    default:
      return false;
  }
}

std::string wrap(const Formula& f) {
  std::string s = format_formula(f);
  if (is_closed_form(f) || f->kind == Kind::kEq || is_negation(f)) {
    return s;
  }
  return "(" + s + ")";
}

std::string wrap_operand_of_not(const Formula& f) {
  std::string s = format_formula(f);
  if (is_closed_form(f) || is_negation(f)) return s;
  return "(" + s + ")";
}

std::string format_family(const char* head, const std::vector<Formula>& family) {
  std::string out = head;
  out += "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += "; ";
    out += format_formula(family[i]);
  }
  return out + "}";
}

}  // namespace

std::string format_formula(const Formula& f) {
  switch (f->kind) {
    case Kind::kEq:
      return format_expr(f->terms[0]) + " = " + format_expr(f->terms[1]);
    case Kind::kPred:
      return "D(" + format_expr(f->terms[0]) + ")";
    case Kind::kBeta:
      return "beta";
    case Kind::kTop:
      return "true";
    case Kind::kBot:
      return "false";
    case Kind::kAnd:
      if (f->indexed) return format_family("And", f->children);
      return wrap(f->children[0]) + " & " + wrap(f->children[1]);
    case Kind::kOr:
      if (f->indexed) return format_family("Or", f->children);
      return wrap(f->children[0]) + " | " + wrap(f->children[1]);
    case Kind::kImp:
      if (auto inner = match_nabla(f)) return "nabla(" + format_formula(*inner) + ")";
      if (is_negation(f)) return "not " + wrap_operand_of_not(f->children[0]);
      return wrap(f->children[0]) + " => " + wrap(f->children[1]);
    case Kind::kForall:
      return "forall " + f->var + ":A. " + format_formula(f->children[0]);
    case Kind::kExists:
      return "exists " + f->var + ":A. " + format_formula(f->children[0]);
  }
  return {};
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return a.context == b.context && formula_equal(a.lhs, b.lhs) && formula_equal(a.rhs, b.rhs);
}

std::string format_sequent(const Sequent& s) {
  std::string out;
  if (!s.context.empty()) {
    out = "[";
    for (std::size_t i = 0; i < s.context.size(); ++i) {
      if (i) out += ", ";
      out += s.context[i] + ":A";
    }
    out += "] ";
  }
  return out + format_formula(s.lhs) + " |- " + format_formula(s.rhs);
}

}  // namespace zariski
