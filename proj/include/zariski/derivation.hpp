#pragma once

// Derivations in the sequent calculi of geometric logic and of (finitary)
// intuitionistic first-order logic, with a rule-by-rule checker.
//
// Rule names:
//   identity, cut, substitution,
//   top-intro, and-elim-left, and-elim-right, and-intro,
//   bot-elim, or-intro-left, or-intro-right, or-elim, bigor-intro, bigor-elim,
//   exists-elim, exists-elim-inv, frobenius-or, frobenius-exists,
//   eq-refl, eq-subst,
//   bigand-elim, bigand-intro, imp-intro, imp-elim, forall-intro, forall-elim,
//   axiom
//
// Double rules are split into two names read downwards (`exists-elim`:
// from phi |-[x,y] psi infer exists y. phi |-[x] psi) and upwards (`-inv`,
// `imp-elim`, `forall-elim`).

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zariski/formula.hpp"
#include "zariski/rings.hpp"

namespace zariski {

struct RuleData {
  /// bigor-intro, bigand-elim: the chosen disjunct/conjunct; axiom: optional axiom index.
  std::optional<std::size_t> index;
  /// substitution: premise context variable -> term over the conclusion context.
  std::map<std::string, Expr> substitution;
  /// eq-subst: the variables x1..xn and y1..yn of (x = y) & phi |- phi[y/x].
  std::vector<std::string> from;
  std::vector<std::string> to;

  bool empty() const { return !index && substitution.empty() && from.empty() && to.empty(); }
};

struct DerivationNode;
using Derivation = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
  std::string rule;
  Sequent conclusion;
  std::vector<Derivation> premises;
  RuleData data;
};

Derivation make_derivation(std::string rule, Sequent conclusion, std::vector<Derivation> premises = {},
                           RuleData data = {});

const std::vector<std::string>& rule_names();

struct CheckResult {
  bool ok = true;
  /// Premise indices from the root down to the first failing node.
  std::vector<std::size_t> path;
  std::string rule;
  std::string reason;

  std::string describe() const;
};

/// Accepts iff every node instance-checks against its rule; axiom nodes must
/// match a listed axiom up to weakening of the context. Shared subderivations
/// are checked once.
CheckResult check_derivation(const std::vector<Sequent>& axioms, const Derivation& d,
                             const std::set<std::string>& constants = {});

/// Number of distinct nodes.
std::size_t derivation_size(const Derivation& d);

/// Canonical JSON: {"rule", "conclusion" (sequent text), "premises", "data"?}.
std::string derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const std::string& text, const std::set<std::string>& constants = {});

/// The prime-filter theory of Z/n, one nullary symbol D(k) per residue k:
///   D(0) |- false;  D(x+y) |- D(x) | D(y);  D(xy) |- D(x);  true |- D(1);  D(x) & D(y) |- D(xy)
/// for all residues x, y, with arguments printed as normalized residues.
std::vector<Sequent> prime_filter_theory(const Ring& ring);

/// The same axiom schemes over Z restricted to instances whose symbols all
/// lie in `symbols` (non-negative integers).
std::vector<Sequent> prime_filter_theory_restricted(const std::vector<Integer>& symbols);

}  // namespace zariski
