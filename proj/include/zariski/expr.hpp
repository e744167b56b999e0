#pragma once

// Arithmetic expressions over ring constants and named variables, plus the
// tokenizer shared by the ring, element, formula and matrix grammars.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/poly.hpp"

namespace zariski {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Op { kNum, kName, kAdd, kSub, kMul, kDiv, kNeg, kPow };
  Op op;
  Integer num;          // kNum, non-negative
  std::string name;     // kName
  std::vector<Expr> args;
  unsigned long exponent = 0;  // kPow
};

Expr make_num(const Integer& n);
Expr make_name(std::string name);
Expr make_binary(ExprNode::Op op, Expr a, Expr b);
Expr make_neg(Expr a);
Expr make_pow(Expr a, unsigned long e);

bool expr_equal(const Expr& a, const Expr& b);
std::string format_expr(const Expr& e);
void collect_names(const Expr& e, std::set<std::string>& out);
/// Simultaneous substitution of names.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& subst);

struct Token {
  enum class Kind { kNumber, kIdent, kSymbol, kEnd };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent cursor over a token list. Grammar for expressions:
///   sum := product (('+'|'-') product)*
///   product := unary (('*'|'/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' number)?
///   atom := number | ident | '(' sum ')'
class TokenCursor {
 public:
  TokenCursor(std::string_view source, std::vector<Token> tokens)
      : source_(source), tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const;
  bool at_ident(std::string_view s, std::size_t ahead = 0) const;
  bool accept_symbol(std::string_view s);
  void expect_symbol(std::string_view s);
  std::string expect_ident();
  Integer expect_number();
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }
  [[noreturn]] void fail(const std::string& what) const;

  Expr parse_sum();

  std::size_t position() const { return index_; }
  void reset(std::size_t index) { index_ = index; }

 private:
  Expr parse_product();
  Expr parse_unary();
  Expr parse_power();
  Expr parse_atom();

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

/// Parses a complete expression.
Expr parse_expr(std::string_view text);

}  // namespace zariski
