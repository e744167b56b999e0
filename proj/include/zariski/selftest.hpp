#pragma once

// The acceptance suite: ten criteria, each checked against the brute-force
// oracles or against hand-written golden data. Shared by the test binaries
// and the `selftest` command.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zariski/derivation.hpp"
#include "zariski/rings.hpp"

namespace zariski {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

std::string criterion_title(int id);

/// Throws std::out_of_range for ids outside 1..10.
CriterionResult run_criterion(int id, std::uint64_t seed = 20211007);

std::vector<CriterionResult> run_selftest(std::uint64_t seed = 20211007);

// ---- corpora, exposed for the unit tests ----

struct GoldenDerivation {
  std::string name;
  std::vector<Sequent> axioms;
  Derivation derivation;
};

/// Hand-written derivations covering every rule, plus the entailment
/// D(1) |- D(2) | D(3) over the prime-filter theory of Z/6 built from the
/// certificate 1 = 4 + 3.
std::vector<GoldenDerivation> golden_derivations();

/// Every single-node mutation: each node renamed to each other rule, each
/// premise dropped, and each side of each conclusion conjoined with true.
std::vector<Derivation> single_node_mutations(const Derivation& d);

enum class FormulaShape {
  kPropositional,     // D, =, inv atoms; &, |, =>, not
  kGeometric,  // D, = atoms, true, false; &, |, indexed Or
  kCoherent,   // D, =, inv atoms; &, |
};

/// A random closed formula over Z/n with constants 0..n-1.
Formula random_formula(std::mt19937_64& rng, std::uint64_t n, int depth, FormulaShape shape);

}  // namespace zariski
