#include <doctest.h>

#include "zariski/errors.hpp"
#include "zariski/rings.hpp"

using namespace zariski;

TEST_CASE("ring specs parse with their reducedness") {
  Ring z12 = make_ring("Z/12");
  CHECK(z12.is_modular());
  CHECK(z12.modulus() == 12);
  CHECK(z12.reducedness() == Reducedness::kKnownNonReduced);

  Ring z = make_ring("Z");
  CHECK(z.is_integers());
  CHECK(z.reducedness() == Reducedness::kKnownReduced);

  Ring q = make_ring("Q[x,y]/(x^2 - y)");
  CHECK(q.is_polynomial());
  CHECK(q.variables() == std::vector<std::string>{"x", "y"});
  CHECK(make_ring("Z/30").reducedness() == Reducedness::kKnownReduced);
}

TEST_CASE("malformed ring specs are rejected") {
  CHECK_THROWS_AS(make_ring("Z/0"), std::exception);
  CHECK_THROWS_AS(make_ring("W"), std::exception);
  CHECK_THROWS_AS(make_ring("Q[x]/(y)"), std::exception);
}

TEST_CASE("arithmetic") {
  Ring z12 = make_ring("Z/12");
  CHECK((z12.from_integer(6) * z12.from_integer(6)).is_zero());

  Ring z6 = make_ring("Z/6");
  CHECK((z6.from_integer(2) * z6.from_integer(2) + z6.from_integer(3)).is_one());

  Ring q = make_ring("Q[x,y]/(x^2 - y)");
  CHECK(pow(q.variable("x"), 2) == q.variable("y"));
  CHECK(q.parse_elem("x^3") == q.parse_elem("x*y"));
  CHECK(z6.parse_elem("-1") == z6.from_integer(5));
}

TEST_CASE("elements of different rings do not mix") {
  Ring a = make_ring("Z/6");
  Ring b = make_ring("Z/4");
  CHECK_THROWS_AS(a.from_integer(1) + b.from_integer(1), RingMismatch);
}

TEST_CASE("nilpotency witnesses") {
  Ring z12 = make_ring("Z/12");
  CHECK(is_nilpotent(z12.from_integer(6)) == std::optional<unsigned long>(2));
  CHECK_FALSE(is_nilpotent(z12.from_integer(2)).has_value());
  CHECK_FALSE(is_nilpotent(Ring::integers().from_integer(5)).has_value());
  CHECK(is_nilpotent(Ring::integers().zero()) == std::optional<unsigned long>(1));
  Ring z1 = make_ring("Z/1");
  CHECK(is_nilpotent(z1.one()) == std::optional<unsigned long>(1));
  CHECK(z1.is_trivial());
  Ring f5 = make_ring("F5[x]/(x^3)");
  CHECK(is_nilpotent(f5.variable("x")) == std::optional<unsigned long>(3));
}

TEST_CASE("squarefree and radical of integers") {
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
  CHECK(radical_of(72) == 6);
  CHECK(bit_length(12) == 4);
}

TEST_CASE("finite rings enumerate their elements") {
  CHECK(make_ring("Z/7").elements().size() == 7);
  CHECK_THROWS(Ring::integers().elements());
}
