#include <doctest.h>

#include <random>

#include "zariski/frame.hpp"
#include "zariski/oracles.hpp"
#include "zariski/prover.hpp"
#include "zariski/selftest.hpp"
#include "zariski/semantics.hpp"

using namespace zariski;

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

Open random_open(std::mt19937_64& rng, const Ring& ring) {
  std::vector<Elem> gens;
  for (auto k = pick(rng, 0, 2); k > 0; --k) gens.push_back(ring.from_integer(pick(rng, 0, ring.small_modulus() - 1)));
  return Open(Ideal(ring, gens));
}

}  // namespace

TEST_CASE("the frame is a Heyting algebra") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Ring ring = Ring::modular(pick(rng, 1, 48));
    Open u = random_open(rng, ring), v = random_open(rng, ring), w = random_open(rng, ring);
    CHECK(leq(meet(u, v), u));
    CHECK(leq(u, join(u, v)));
    // w <= (u => v) iff w & u <= v
    CHECK(leq(w, heyting(u, v)).has_value() == leq(meet(w, u), v).has_value());
    CHECK(open_equal(meet(u, join(v, w)), join(meet(u, v), meet(u, w))));
  }
}

TEST_CASE("radical membership agrees with the native oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = pick(rng, 1, 500);
    Ring ring = Ring::modular(n);
    std::vector<std::uint64_t> gs;
    std::vector<Elem> gens;
    for (auto k = pick(rng, 0, 3); k > 0; --k) {
      gs.push_back(pick(rng, 0, n - 1));
      gens.push_back(ring.from_integer(gs.back()));
    }
    std::uint64_t f = pick(rng, 0, n - 1);
    Ideal ideal(ring, gens);
    auto c = radical_membership(ideal, ring.from_integer(f));
    CHECK(c.has_value() == in_radical_u64(n, gs, f));
    if (c) CHECK(verify_certificate(ring.from_integer(f), ideal, *c));
  }
}

TEST_CASE("compiled truth opens agree with brute force") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = pick(rng, 2, 24);
    Ring ring = Ring::modular(n);
    Formula phi = random_formula(rng, n, 3, FormulaShape::kPropositional);
    TruthOpen t = truth_open(ring, phi);
    REQUIRE(t.known());
    CHECK_MESSAGE(open_matches_set(*t.value, brute_forcing_set(ring, phi)), format_formula(phi));
  }
}

TEST_CASE("forcing is monotone and local") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = pick(rng, 2, 30);
    Ring ring = Ring::modular(n);
    Formula phi = random_formula(rng, n, 2, FormulaShape::kPropositional);
    Elem f = ring.from_integer(pick(rng, 0, n - 1));
    Elem g = ring.from_integer(pick(rng, 0, n - 1));
    if (forces(ring, f, phi).decision == Decision::kTrue) {
      CHECK(forces(ring, f * g, phi).decision == Decision::kTrue);
    }
  }
}

TEST_CASE("prover derivations always check") {
  std::mt19937_64 rng(19);
  for (std::uint64_t n : {6, 12, 30}) {
    Ring ring = Ring::modular(n);
    auto theory = prime_filter_theory(ring);
    CoherentProver prover(theory);
    for (int i = 0; i < 40; ++i) {
      Formula lhs = random_formula(rng, n, 1, FormulaShape::kCoherent);
      Formula rhs = random_formula(rng, n, 1, FormulaShape::kCoherent);
      Sequent goal{{}, lhs, rhs};
      bool has_eq = false;
      for (const auto& f : {lhs, rhs}) has_eq = has_eq || format_formula(f).find('=') != std::string::npos;
      if (has_eq) continue;
      auto d = prover.prove(goal);
      if (d) CHECK_MESSAGE(check_derivation(theory, *d).ok, format_sequent(goal));
    }
  }
}

TEST_CASE("golden derivations check and their mutants do not") {
  auto corpus = golden_derivations();
  std::set<std::string> rules;
  for (const auto& g : corpus) {
    CHECK_MESSAGE(check_derivation(g.axioms, g.derivation).ok, g.name);
    for (const auto& m : single_node_mutations(g.derivation)) CHECK_FALSE(check_derivation(g.axioms, m).ok);
  }
}

TEST_CASE("quantifiers over Z/n agree with brute force") {
  const char* corpus[] = {
      "exists y:A. 2*y = 1 | 3*y = 1",
      "forall x:A. (not exists y:A. x*y = 1) => x = 0",
      "forall x:A. not not (x = 0) => x = 0",
      "exists x:A. not (x = 0) & x*x = 0",
      "forall x:A. exists y:A. x*y*x = x",
      "exists y:A. y*y = 2",
      "forall x:A. x = 0 | exists y:A. x*y = 1",
      "forall x:A. forall y:A. x*y = 0 => x = 0 | y = 0",
  };
  for (std::uint64_t n : {1, 2, 4, 6, 8, 9, 10, 12}) {
    Ring ring = Ring::modular(n);
    for (const char* text : corpus) {
      Formula phi = parse_formula(text);
      TruthOpen t = truth_open(ring, phi);
      REQUIRE(t.known());
      CHECK_MESSAGE(open_matches_set(*t.value, brute_forcing_set(ring, phi)), "Z/" << n << ": " << text);
    }
  }
}
