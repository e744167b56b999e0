#pragma once

// Formulas and sequents over one sort (A~), the prime-filter predicate D(-)
// and a designated propositional parameter beta.
//
// Surface syntax (canonical printing is the inverse of parsing):
//   s = t    D(t)    true    false    beta    not phi    nabla(phi)
//   phi & psi    phi | psi    phi => psi    forall x:A. phi    exists x:A. phi
//   Or[i in 1..n](phi)  And[i in 1..n](phi)   (finite index ranges, expanded)
//   Or{phi; psi; ...}   And{phi; psi; ...}    (explicit finite families)
//   [x:A, y:A] phi |- psi
//
// `not phi` is stored as phi => false, `nabla(phi)` as (phi => beta) => beta.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/expr.hpp"

namespace zariski {

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  enum class Kind { kEq, kPred, kBeta, kTop, kBot, kAnd, kOr, kImp, kForall, kExists };
  Kind kind;
  std::vector<Expr> terms;        // kEq: two sides; kPred: the argument of D
  std::vector<Formula> children;  // kAnd/kOr: the family; kImp: antecedent, consequent; quantifiers: body
  bool indexed = false;           // kAnd/kOr: finite indexed family rather than binary
  std::string var;                // quantifiers
};

namespace fm {

Formula eq(Expr lhs, Expr rhs);
Formula pred(Expr arg);
Formula beta();
Formula top();
Formula bot();
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula big_and(std::vector<Formula> family);
Formula big_or(std::vector<Formula> family);
Formula imp(Formula a, Formula b);
Formula neg(Formula a);
Formula forall(std::string var, Formula body);
Formula exists(std::string var, Formula body);
/// (phi => beta) => beta
Formula nabla(Formula phi);
/// exists y. x*y = 1, with y chosen fresh for x
Formula invertible(Expr x);

}  // namespace fm

bool formula_equal(const Formula& a, const Formula& b);

/// Names occurring free (not bound by a quantifier).
std::set<std::string> free_names(const Formula& f);

/// Simultaneous substitution of terms for free names. Returns nullopt if a
/// substituted term would be captured by a quantifier.
std::optional<Formula> substitute(const Formula& f, const std::map<std::string, Expr>& subst);

bool is_negation(const Formula& f);
/// Matches (phi => beta) => beta and returns phi.
std::optional<Formula> match_nabla(const Formula& f);

std::string format_formula(const Formula& f);

using Context = std::vector<std::string>;

struct Sequent {
  Context context;
  Formula lhs;
  Formula rhs;
};

bool sequent_equal(const Sequent& a, const Sequent& b);
std::string format_sequent(const Sequent& s);

/// `context` lists the free variables; `constants` are names allowed free
/// without being variables (e.g. ring variables of a polynomial ring).
Formula parse_formula(std::string_view text, const Context& context = {},
                      const std::set<std::string>& constants = {});
Sequent parse_sequent(std::string_view text, const std::set<std::string>& constants = {});

/// Throws SortError / UnboundVariable when f is not well-formed in the context.
void check_well_formed(const Formula& f, const Context& context, const std::set<std::string>& constants = {});

enum class Fragment { kGeometric, kCoherent, kFirstOrder };
std::string to_string(Fragment fragment);

/// first-order: contains => or forall. coherent: geometric, quantifier-free
/// and no indexed disjunction. geometric: everything else.
Fragment classify(const Formula& f);

/// The nabla-translation: atoms and false are wrapped in nabla; true, &,
/// =>, forall commute; | and exists are wrapped after translating inside.
Formula nabla_translate(const Formula& f);

}  // namespace zariski
