#pragma once

// The algebraic Kripke-Joyal semantics of Spec(A): truth opens [[phi]],
// forcing f |= phi, the nabla operator on opens and forcing certificates.
//
// Compilation rules:
//   [[s = t]]   = sqrt(0 : (s - t))
//   [[D(t)]]    = D(t)
//   [[true]] = top, [[false]] = bottom, [[beta]] = the supplied open
//   & | => and the indexed families map to meet, join, heyting
//   [[exists y. a*y = c]] = sqrt((a) : (c))   (a, c free of y; c = 1 gives D(a))
//   exists/forall over a variable that does not occur: [[body]]
// Every other quantified subformula is Unknown.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zariski/formula.hpp"
#include "zariski/frame.hpp"
#include "zariski/localizations.hpp"

namespace zariski {

using Env = std::map<std::string, Elem>;

struct TruthOpen {
  std::optional<Open> value;
  /// Set when value is absent: the first subformula without a compilation rule.
  std::string unknown_reason;

  bool known() const { return value.has_value(); }
};

/// `beta` interprets the propositional parameter; formulas mentioning beta
/// without one are Unknown.
TruthOpen truth_open(const Ring& ring, const Formula& phi, const Env& env = {},
                     const std::optional<Open>& beta = std::nullopt);

enum class Decision { kTrue, kFalse, kUnknown };
std::string to_string(Decision d);

struct ForcingDecision {
  Decision decision = Decision::kUnknown;
  /// kTrue via the truth open: certificates for D(f) <= [[phi]].
  std::vector<MembershipCertificate> certificates;
  /// phi = false: the nilpotency exponent when f is nilpotent.
  std::optional<unsigned long> nilpotency;
  std::optional<Open> truth;
  std::string reason;
};

ForcingDecision forces(const Ring& ring, const Elem& f, const Formula& phi, const Env& env = {},
                       const std::optional<Open>& beta = std::nullopt);

/// Z/n: meet over all s of ((U => [[s=0]]) => [[s=0]]). Known-reduced rings: not not U.
Open nabla_open(const Ring& ring, const Open& u);

struct ForcingCertificate;
using ForcingCertPtr = std::shared_ptr<const ForcingCertificate>;

struct ForcingBranch {
  Elem g;
  /// Or nodes: the disjunct that holds on this branch.
  std::size_t choice = 0;
  /// Exists nodes: the witness numerator / (f*g)^witness_exponent.
  std::optional<Elem> witness;
  unsigned long witness_exponent = 0;
  /// Certificate for the chosen disjunct (or the body) at f*g; null for atoms.
  ForcingCertPtr sub;
};

/// Mirrors the formula: a partition f^n = f g_1 + ... + f g_m with branches
/// for | and exists, one part per conjunct for &, nothing for atoms.
struct ForcingCertificate {
  unsigned long exponent = 1;
  std::vector<ForcingBranch> branches;
  std::vector<ForcingCertPtr> parts;
};

/// True iff every partition identity holds by ring arithmetic and every leaf
/// atom holds at its localized position. Throws CertificateError when the
/// certificate does not have the shape of phi.
bool check_forcing_certificate(const Ring& ring, const Elem& f, const Formula& phi, const Env& env,
                               const ForcingCertPtr& cert);

/// Builds a certificate for f |= phi from truth opens: partitions come from
/// radical-membership identities f^k = c_1 u_1 + ... + c_m u_m, existential
/// witnesses from the quotient ideal. Covers true, false, the atoms, & and |
/// (binary and indexed), the linear exists pattern and closed => / forall.
/// nullopt when f does not force phi or phi falls outside that shape.
std::optional<ForcingCertPtr> forcing_certificate(const Ring& ring, const Elem& f, const Formula& phi,
                                                  const Env& env = {});

std::string forcing_certificate_to_json(const ForcingCertPtr& cert);
ForcingCertPtr forcing_certificate_from_json(const Ring& ring, const std::string& text);

/// Evaluates a term in A[base^-1] with variables bound to fractions.
LocalizedElem eval_local(const Ring& ring, const Expr& term, const Elem& base,
                         const std::map<std::string, LocalizedElem>& env);

}  // namespace zariski
