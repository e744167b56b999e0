#include <algorithm>

#include "zariski/errors.hpp"
#include "zariski/formula.hpp"

namespace zariski {

namespace {

// formula := quant | disj ('=>' formula)?
// quant   := ('forall' | 'exists') ident ':' 'A' '.' formula
// disj    := conj ('|' conj)*
// conj    := unary ('&' unary)*
// unary   := 'not' unary | primary
// primary := 'true' | 'false' | 'beta' | 'D' '(' term ')' | 'nabla' '(' formula ')'
//          | ('Or' | 'And') '[' ident 'in' number '..' number ']' '(' formula ')'
//          | ('Or' | 'And') '{' (formula (';' formula)*)? '}'
//          | quant | '(' formula ')' | term '=' term
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : cur_(text, tokenize(text)) {}

  TokenCursor& cursor() { return cur_; }

  Formula formula() {
    if (at_quantifier()) return quantifier();
    Formula lhs = disjunction();
    if (cur_.accept_symbol("=>")) return fm::imp(lhs, formula());
    return lhs;
  }

  std::string sort_annotation() {
    cur_.expect_symbol(":");
    std::string sort = cur_.expect_ident();
    if (sort != "A") throw SortError("unknown sort '" + sort + "' (the only sort is A)");
    return sort;
  }

 private:
  bool at_quantifier() const { return cur_.at_ident("forall") || cur_.at_ident("exists"); }

  Formula quantifier() {
    bool universal = cur_.next().text == "forall";
    std::string var = cur_.expect_ident();
    sort_annotation();
    cur_.expect_symbol(".");
    Formula body = formula();
    return universal ? fm::forall(var, body) : fm::exists(var, body);
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (cur_.accept_symbol("|")) lhs = fm::disj(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (cur_.accept_symbol("&")) lhs = fm::conj(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (cur_.at_ident("not")) {
      cur_.next();
      return fm::neg(unary());
    }
    return primary();
  }

  Formula family(bool is_or) {
    std::vector<Formula> members;
    if (cur_.accept_symbol("[")) {
      std::string index = cur_.expect_ident();
      if (!cur_.at_ident("in")) cur_.fail("expected 'in'");
      cur_.next();
      Integer lo = cur_.expect_number();
      cur_.expect_symbol("..");
      Integer hi = cur_.expect_number();
      cur_.expect_symbol("]");
      cur_.expect_symbol("(");
      Formula body = formula();
      cur_.expect_symbol(")");
      if (hi - lo > 100000) cur_.fail("index range too large");
      for (Integer k = lo; k <= hi; ++k) {
        auto inst = substitute(body, {{index, make_num(k)}});
        if (!inst) cur_.fail("index variable captured in family body");
        members.push_back(*inst);
      }
    } else {
      cur_.expect_symbol("{");
      if (!cur_.at_symbol("}")) {
        members.push_back(formula());
        while (cur_.accept_symbol(";")) members.push_back(formula());
      }
      cur_.expect_symbol("}");
    }
    return is_or ? fm::big_or(std::move(members)) : fm::big_and(std::move(members));
  }

  Formula equation() {
    Expr lhs = cur_.parse_sum();
    cur_.expect_symbol("=");
    Expr rhs = cur_.parse_sum();
    return fm::eq(lhs, rhs);
  }

  static bool continues_term(const TokenCursor& c) {
    for (const char* s : {"=", "+", "-", "*", "/", "^"}) {
      if (c.at_symbol(s)) return true;
    }
    return false;
  }

  Formula primary() {
    if (cur_.at_ident("true")) return cur_.next(), fm::top();
    if (cur_.at_ident("false")) return cur_.next(), fm::bot();
    if (cur_.at_ident("beta")) return cur_.next(), fm::beta();
    if (cur_.at_ident("D") && cur_.at_symbol("(", 1)) {
      cur_.next();
      cur_.next();
      Expr arg = cur_.parse_sum();
      cur_.expect_symbol(")");
      return fm::pred(arg);
    }
    if (cur_.at_ident("nabla") && cur_.at_symbol("(", 1)) {
      cur_.next();
      cur_.next();
      Formula inner = formula();
      cur_.expect_symbol(")");
      return fm::nabla(inner);
    }
    if ((cur_.at_ident("Or") || cur_.at_ident("And")) && (cur_.at_symbol("[", 1) || cur_.at_symbol("{", 1))) {
      bool is_or = cur_.next().text == "Or";
      return family(is_or);
    }
    if (at_quantifier()) return quantifier();
    if (cur_.at_symbol("(")) {
      std::size_t start = cur_.position();
      try {
        cur_.next();
        Formula inner = formula();
        cur_.expect_symbol(")");
        if (!continues_term(cur_)) return inner;
      } catch (const ParseError&) {
      }
      cur_.reset(start);
    }
    return equation();
  }

  TokenCursor cur_;
};

void check_rec(const Formula& f, std::vector<std::string>& vars, const std::set<std::string>& constants) {
  auto is_var = [&](const std::string& n) { return std::find(vars.begin(), vars.end(), n) != vars.end(); };
  using Kind = FormulaNode::Kind;
  switch (f->kind) {
    case Kind::kEq:
      for (const auto& t : f->terms) {
        std::set<std::string> names;
        collect_names(t, names);
        for (const auto& n : names) {
          if (!is_var(n) && !constants.count(n)) throw UnboundVariable("unbound variable '" + n + "'");
        }
      }
      return;
    case Kind::kPred: {
      std::set<std::string> names;
      collect_names(f->terms[0], names);
      for (const auto& n : names) {
        if (is_var(n)) {
          throw SortError("D(" + format_expr(f->terms[0]) + ") takes a ring element, not the variable '" + n + "'");
        }
        if (!constants.count(n)) throw UnboundVariable("unknown constant '" + n + "' in D(-)");
      }
      return;
    }
    case Kind::kForall:
    case Kind::kExists:
      vars.push_back(f->var);
      check_rec(f->children[0], vars, constants);
      vars.pop_back();
      return;
    default:
      for (const auto& c : f->children) check_rec(c, vars, constants);
  }
}

}  // namespace

void check_well_formed(const Formula& f, const Context& context, const std::set<std::string>& constants) {
  std::vector<std::string> vars(context.begin(), context.end());
  check_rec(f, vars, constants);
}

Formula parse_formula(std::string_view text, const Context& context, const std::set<std::string>& constants) {
  FormulaParser p(text);
  Formula f = p.formula();
  if (!p.cursor().at_end()) p.cursor().fail("trailing input");
  check_well_formed(f, context, constants);
  return f;
}

Sequent parse_sequent(std::string_view text, const std::set<std::string>& constants) {
  FormulaParser p(text);
  TokenCursor& cur = p.cursor();
  Sequent s;
  if (cur.accept_symbol("[")) {
    if (!cur.at_symbol("]")) {
      do {
        std::string v = cur.expect_ident();
        p.sort_annotation();
        if (std::find(s.context.begin(), s.context.end(), v) != s.context.end()) {
          cur.fail("variable '" + v + "' declared twice");
        }
        s.context.push_back(v);
      } while (cur.accept_symbol(","));
    }
    cur.expect_symbol("]");
  }
  s.lhs = p.formula();
  cur.expect_symbol("|-");
  s.rhs = p.formula();
  if (!cur.at_end()) cur.fail("trailing input");
  check_well_formed(s.lhs, s.context, constants);
  check_well_formed(s.rhs, s.context, constants);
  return s;
}

}  // namespace zariski
