#pragma once

// Forward-chaining prover for finite propositional coherent theories.
//
// Axioms must have an empty context, a conjunction of atoms (or true) on the
// left and a disjunction (binary or indexed, possibly nested, possibly
// empty) of conjunctions of atoms, or false, on the right. Atoms are the
// closed atomic formulas, compared by their printed form.
//
// The search saturates an atom set under the single-conclusion axioms, then
// splits on the first applicable disjunctive axiom none of whose disjuncts
// holds yet. Saturation states do not depend on the goal and are cached for
// the lifetime of the prover, so many goals over one theory share the work.
// A saturated state with no applicable split is a model, which makes the
// decision complete.

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zariski/derivation.hpp"

namespace zariski {

class CoherentProver {
 public:
  /// Throws std::invalid_argument for axioms outside the supported shape.
  explicit CoherentProver(std::vector<Sequent> theory);

  const std::vector<Sequent>& theory() const;

  /// Decision only. The goal antecedent may be false, a conjunction of atoms
  /// or a disjunction of such; the succedent any quantifier-free coherent formula.
  bool entails(const Sequent& goal);

  /// A derivation that check_derivation accepts against theory(), or nullopt.
  std::optional<Derivation> prove(const Sequent& goal);

  /// Number of cached saturation states.
  std::size_t state_count() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

std::optional<Derivation> coherent_prove(const std::vector<Sequent>& theory, const Sequent& goal);

}  // namespace zariski
