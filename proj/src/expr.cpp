#include "zariski/expr.hpp"

#include <cctype>

#include "zariski/errors.hpp"

namespace zariski {

Expr make_num(const Integer& n) {
  auto e = std::make_shared<ExprNode>();
  e->op = ExprNode::Op::kNum;
  e->num = n;
  return e;
}

Expr make_name(std::string name) {
  auto e = std::make_shared<ExprNode>();
  e->op = ExprNode::Op::kName;
  e->name = std::move(name);
  return e;
}

Expr make_binary(ExprNode::Op op, Expr a, Expr b) {
  auto e = std::make_shared<ExprNode>();
  e->op = op;
  e->args = {std::move(a), std::move(b)};
  return e;
}

Expr make_neg(Expr a) {
  auto e = std::make_shared<ExprNode>();
  e->op = ExprNode::Op::kNeg;
  e->args = {std::move(a)};
  return e;
}

Expr make_pow(Expr a, unsigned long exponent) {
  auto e = std::make_shared<ExprNode>();
  e->op = ExprNode::Op::kPow;
  e->args = {std::move(a)};
  e->exponent = exponent;
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (a->op != b->op || a->args.size() != b->args.size()) return false;
  switch (a->op) {
    case ExprNode::Op::kNum:
      return a->num == b->num;
    case ExprNode::Op::kName:
      return a->name == b->name;
    case ExprNode::Op::kPow:
      if (a->exponent != b->exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!expr_equal(a->args[i], b->args[i])) return false;
  }
  return true;
}

namespace {

int precedence(const Expr& e) {
  switch (e->op) {
    case ExprNode::Op::kAdd:
    case ExprNode::Op::kSub:
      return 1;
    case ExprNode::Op::kMul:
    case ExprNode::Op::kDiv:
      return 2;
    case ExprNode::Op::kNeg:
      return 3;
    case ExprNode::Op::kPow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = format_expr(e);
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

std::string format_expr(const Expr& e) {
  switch (e->op) {
    case ExprNode::Op::kNum:
      return e->num.get_str();
    case ExprNode::Op::kName:
      return e->name;
    case ExprNode::Op::kAdd:
      return wrap(e->args[0], 1) + " + " + wrap(e->args[1], 2);
    case ExprNode::Op::kSub:
      return wrap(e->args[0], 1) + " - " + wrap(e->args[1], 2);
    case ExprNode::Op::kMul:
      return wrap(e->args[0], 2) + "*" + wrap(e->args[1], 3);
    case ExprNode::Op::kDiv:
      return wrap(e->args[0], 2) + "/" + wrap(e->args[1], 3);
    case ExprNode::Op::kNeg:
      return "-" + wrap(e->args[0], 3);
    case ExprNode::Op::kPow:
      return wrap(e->args[0], 5) + "^" + std::to_string(e->exponent);
  }
  return {};
}

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (e->op == ExprNode::Op::kName) out.insert(e->name);
  for (const auto& a : e->args) collect_names(a, out);
}

Expr substitute(const Expr& e, const std::map<std::string, Expr>& subst) {
  if (e->op == ExprNode::Op::kName) {
    auto it = subst.find(e->name);
    return it == subst.end() ? e : it->second;
  }
  if (e->args.empty()) return e;
  auto copy = std::make_shared<ExprNode>(*e);
  bool changed = false;
  for (auto& a : copy->args) {
    Expr r = substitute(a, subst);
    if (r != a) changed = true;
    a = std::move(r);
  }
  return changed ? Expr(copy) : e;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::kNumber, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      out.push_back({Token::Kind::kIdent, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    static constexpr std::string_view kTwo[] = {"=>", "|-", ".."};
    bool matched = false;
    for (auto sym : kTwo) {
      if (text.substr(i, sym.size()) == sym) {
        out.push_back({Token::Kind::kSymbol, std::string(sym), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static constexpr std::string_view kOne = "+-*/^()[]{},.:;=&|!";
    if (kOne.find(c) == std::string_view::npos) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    out.push_back({Token::Kind::kSymbol, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Kind::kEnd, "", text.size()});
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t k = std::min(index_ + ahead, tokens_.size() - 1);
  return tokens_[k];
}

Token TokenCursor::next() {
  Token t = peek();
  if (index_ < tokens_.size() - 1) ++index_;
  return t;
}

bool TokenCursor::at_symbol(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Kind::kSymbol && t.text == s;
}

bool TokenCursor::at_ident(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Kind::kIdent && t.text == s;
}

bool TokenCursor::accept_symbol(std::string_view s) {
  if (!at_symbol(s)) return false;
  next();
  return true;
}

void TokenCursor::expect_symbol(std::string_view s) {
  if (!accept_symbol(s)) fail("expected '" + std::string(s) + "'");
}

std::string TokenCursor::expect_ident() {
  if (peek().kind != Token::Kind::kIdent) fail("expected identifier");
  return next().text;
}

Integer TokenCursor::expect_number() {
  if (peek().kind != Token::Kind::kNumber) fail("expected number");
  return Integer(next().text);
}

void TokenCursor::fail(const std::string& what) const {
  const Token& t = peek();
  std::string near = t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
  throw ParseError(what + " at offset " + std::to_string(t.pos) + " (near " + near + ") in \"" +
                   std::string(source_) + "\"");
}

Expr TokenCursor::parse_sum() {
  Expr lhs = parse_product();
  while (true) {
    if (accept_symbol("+")) {
      lhs = make_binary(ExprNode::Op::kAdd, lhs, parse_product());
    } else if (accept_symbol("-")) {
      lhs = make_binary(ExprNode::Op::kSub, lhs, parse_product());
    } else {
      return lhs;
    }
  }
}

Expr TokenCursor::parse_product() {
  Expr lhs = parse_unary();
  while (true) {
    if (accept_symbol("*")) {
      lhs = make_binary(ExprNode::Op::kMul, lhs, parse_unary());
    } else if (at_symbol("/") && !at_symbol("/", 1)) {
      next();
      lhs = make_binary(ExprNode::Op::kDiv, lhs, parse_unary());
    } else {
      return lhs;
    }
  }
}

Expr TokenCursor::parse_unary() {
  if (accept_symbol("-")) return make_neg(parse_unary());
  return parse_power();
}

Expr TokenCursor::parse_power() {
  Expr base = parse_atom();
  if (accept_symbol("^")) {
    Integer e = expect_number();
    if (!e.fits_ulong_p()) fail("exponent too large");
    return make_pow(base, e.get_ui());
  }
  return base;
}

Expr TokenCursor::parse_atom() {
  const Token& t = peek();
  if (t.kind == Token::Kind::kNumber) return make_num(Integer(next().text));
  if (t.kind == Token::Kind::kIdent) return make_name(next().text);
  if (accept_symbol("(")) {
    Expr inner = parse_sum();
    expect_symbol(")");
    return inner;
  }
  fail("expected a term");
}

Expr parse_expr(std::string_view text) {
  TokenCursor cur(text, tokenize(text));
  Expr e = cur.parse_sum();
  if (!cur.at_end()) cur.fail("trailing input");
  return e;
}

}  // namespace zariski
