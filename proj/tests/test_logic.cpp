#include <doctest.h>

#include "zariski/derivation.hpp"
#include "zariski/errors.hpp"
#include "zariski/formula.hpp"
#include "zariski/prover.hpp"
#include "zariski/rings.hpp"

using namespace zariski;

TEST_CASE("parsing and desugaring") {
  Formula f = parse_formula("not (x = 0)", {"x"});
  CHECK(formula_equal(f, fm::imp(parse_formula("x = 0", {"x"}), fm::bot())));

  Sequent s = parse_sequent("D(2) & D(3) |- D(6)");
  CHECK(s.lhs->kind == FormulaNode::Kind::kAnd);
  CHECK(s.context.empty());

  Formula field = parse_formula("forall x:A. (not exists y:A. x*y = 1) => x = 0");
  CHECK(field->kind == FormulaNode::Kind::kForall);
  CHECK(field->children[0]->kind == FormulaNode::Kind::kImp);

  Formula family = parse_formula("Or[i in 1..3](D(i))");
  CHECK(family->kind == FormulaNode::Kind::kOr);
  CHECK(family->indexed);
  CHECK(family->children.size() == 3);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"D(2) | D(3) & D(5)", "forall x:A. exists y:A. x*y = 1", "(D(2) => D(3)) => false",
                           "Or{D(2); D(3)}", "And{true; x = 0}"}) {
    Formula f = parse_formula(text, {"x"});
    CHECK(formula_equal(parse_formula(format_formula(f), {"x"}), f));
  }
  Sequent s = parse_sequent("[x:A, y:A] x = y |- y = x");
  CHECK(sequent_equal(parse_sequent(format_sequent(s)), s));
}

TEST_CASE("ill-formed formulas") {
  CHECK_THROWS_AS(parse_formula("D(2"), ParseError);
  CHECK_THROWS_AS(parse_formula("x = 0"), UnboundVariable);
  CHECK_THROWS_AS(parse_formula("D(x)", {"x"}), std::exception);
}

TEST_CASE("fragments") {
  CHECK(classify(parse_formula("D(2) | D(3)")) == Fragment::kCoherent);
  CHECK(classify(parse_formula("(x = 0) => false", {"x"})) == Fragment::kFirstOrder);
  CHECK(classify(parse_formula("exists y:A. x*y = 1", {"x"})) == Fragment::kGeometric);
  CHECK(classify(parse_formula("Or{D(2); D(3)}")) == Fragment::kGeometric);
}

TEST_CASE("nabla translation") {
  CHECK(formula_equal(nabla_translate(fm::top()), fm::top()));
  CHECK(formula_equal(nabla_translate(parse_formula("D(2) | D(3)")),
                      fm::nabla(fm::disj(fm::nabla(parse_formula("D(2)")), fm::nabla(parse_formula("D(3)"))))));
  Formula e = parse_formula("x = y", {"x", "y"});
  Formula expected = fm::imp(fm::imp(e, fm::beta()), fm::beta());
  CHECK(formula_equal(nabla_translate(e), expected));
  CHECK(match_nabla(expected).has_value());
}

TEST_CASE("derivation checking") {
  auto id = make_derivation("identity", parse_sequent("D(2) |- D(2)"));
  CHECK(check_derivation({}, id).ok);

  auto wrong = make_derivation("or-intro-left", parse_sequent("D(2) | D(3) |- D(2)"));
  CheckResult r = check_derivation({}, wrong);
  CHECK_FALSE(r.ok);
  CHECK(r.rule == "or-intro-left");

  auto unknown = make_derivation("modus-tollens", parse_sequent("D(2) |- D(2)"));
  CHECK_FALSE(check_derivation({}, unknown).ok);
}

TEST_CASE("derivations serialize and reject malformed records") {
  auto a = make_derivation("and-elim-left", parse_sequent("D(2) & D(3) |- D(2)"));
  auto b = make_derivation("cut", parse_sequent("D(2) & D(3) |- D(2)"),
                           {make_derivation("identity", parse_sequent("D(2) & D(3) |- D(2) & D(3)")), a});
  std::string text = derivation_to_json(b);
  CHECK(derivation_to_json(derivation_from_json(text)) == text);
  CHECK(check_derivation({}, derivation_from_json(text)).ok);
  CHECK_THROWS(derivation_from_json("{\"rule\": \"identity\"}"));
}

TEST_CASE("prime-filter chain D(1) |- D(2) | D(3) in Z/6") {
  Ring z6 = make_ring("Z/6");
  auto theory = prime_filter_theory(z6);
  auto split = make_derivation("axiom", parse_sequent("D(1) |- D(4) | D(3)"));
  auto factor = make_derivation("axiom", parse_sequent("D(4) |- D(2)"));
  auto left = make_derivation("or-intro-left", parse_sequent("D(2) |- D(2) | D(3)"));
  auto right = make_derivation("or-intro-right", parse_sequent("D(3) |- D(2) | D(3)"));
  auto through = make_derivation("cut", parse_sequent("D(4) |- D(2) | D(3)"), {factor, left});
  auto cases = make_derivation("or-elim", parse_sequent("D(4) | D(3) |- D(2) | D(3)"), {through, right});
  auto chain = make_derivation("cut", parse_sequent("D(1) |- D(2) | D(3)"), {split, cases});
  CHECK(check_derivation(theory, chain).ok);
  CHECK_FALSE(check_derivation({}, chain).ok);
}

TEST_CASE("coherent prover over prime-filter theories") {
  Ring z6 = make_ring("Z/6");
  auto theory = prime_filter_theory(z6);
  CoherentProver prover(theory);
  Sequent goal = parse_sequent("true |- D(2) | D(3)");
  auto d = prover.prove(goal);
  REQUIRE(d);
  CHECK(check_derivation(theory, *d).ok);
  CHECK(sequent_equal((*d)->conclusion, goal));
  CHECK_FALSE(prover.prove(parse_sequent("D(2) |- D(3)")));
  CHECK(prover.entails(parse_sequent("D(0) |- false")));

  auto restricted = prime_filter_theory_restricted({Integer(2), Integer(3), Integer(6), Integer(1), Integer(0)});
  auto e = coherent_prove(restricted, parse_sequent("D(6) |- D(2)"));
  REQUIRE(e);
  CHECK(check_derivation(restricted, *e).ok);
}

TEST_CASE("the prover refuses non-coherent axioms") {
  CHECK_THROWS_AS(CoherentProver({parse_sequent("D(2) |- D(2) => D(3)")}), std::invalid_argument);
}
