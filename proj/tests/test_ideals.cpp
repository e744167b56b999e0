#include <doctest.h>

#include "zariski/ideals.hpp"

using namespace zariski;

namespace {

Ideal ideal_of(const Ring& ring, std::initializer_list<const char*> gens) {
  std::vector<Elem> out;
  for (const char* g : gens) out.push_back(ring.parse_elem(g));
  return Ideal(ring, out);
}

}  // namespace

TEST_CASE("Groebner bases carry their transformation") {
  Ring q = make_ring("Q[x,y]");
  Ideal i = ideal_of(q, {"x^2 - y", "y^2"});
  auto g = ideal_groebner_basis(i);
  CHECK(ideal_equal(g.basis, i));
  for (std::size_t k = 0; k < g.basis.size(); ++k) {
    Elem sum = q.zero();
    for (std::size_t j = 0; j < i.size(); ++j) sum = sum + g.transformation[k][j] * i.generators()[j];
    CHECK(sum == g.basis.generators()[k]);
  }

  Ring qx = make_ring("Q[x]");
  auto h = ideal_groebner_basis(ideal_of(qx, {"x^2 + x", "x^2"}));
  bool has_x = false;
  for (const auto& e : h.basis.generators()) has_x = has_x || e == qx.variable("x");
  CHECK(has_x);

  auto empty = ideal_groebner_basis(Ideal(qx, {}));
  CHECK(empty.basis.size() == 0);
}

TEST_CASE("ideal membership certificates") {
  Ring z = Ring::integers();
  Ideal i = ideal_of(z, {"2", "3"});
  auto c = ideal_membership(i, z.one());
  REQUIRE(c);
  CHECK(c->exponent == 1);
  CHECK(verify_certificate(z.one(), i, *c));

  Ring q = make_ring("Q[x,y]");
  Ideal j = ideal_of(q, {"x^2 - y", "y^2"});
  Elem x4 = q.parse_elem("x^4");
  auto d = ideal_membership(j, x4);
  REQUIRE(d);
  CHECK(verify_certificate(x4, j, *d));

  Ring z6 = make_ring("Z/6");
  CHECK_FALSE(ideal_membership(ideal_of(z6, {"2"}), z6.from_integer(3)));
}

TEST_CASE("radical membership certificates") {
  Ring qx = make_ring("Q[x]");
  Ideal i = ideal_of(qx, {"x^2"});
  auto c = radical_membership(i, qx.variable("x"));
  REQUIRE(c);
  CHECK(c->exponent == 2);
  CHECK(verify_certificate(qx.variable("x"), i, *c));

  Ring z12 = make_ring("Z/12");
  Ideal four = ideal_of(z12, {"4"});
  auto d = radical_membership(four, z12.from_integer(2));
  REQUIRE(d);
  CHECK(d->exponent == 2);

  Ring z = Ring::integers();
  CHECK_FALSE(radical_membership(ideal_of(z, {"6"}), z.from_integer(2)));
  CHECK(radical_membership(ideal_of(z, {"2", "3"}), z.one()));
}

TEST_CASE("a tampered certificate is rejected") {
  Ring z6 = make_ring("Z/6");
  Ideal i = ideal_of(z6, {"2", "3"});
  auto c = radical_membership(i, z6.one());
  REQUIRE(c);
  auto bad = *c;
  bad.cofactors[0].u = bad.cofactors[0].u + z6.one();
  CHECK_FALSE(verify_certificate(z6.one(), i, bad));
  auto back = certificate_from_json(z6, certificate_to_json(*c));
  CHECK(verify_certificate(z6.one(), i, back));
}

TEST_CASE("quotients and annihilators") {
  Ring z6 = make_ring("Z/6");
  CHECK(ideal_equal(ideal_quotient(Ideal(z6, {}), ideal_of(z6, {"2"})), ideal_of(z6, {"3"})));
  Ring z = Ring::integers();
  CHECK(ideal_equal(ideal_quotient(ideal_of(z, {"6"}), ideal_of(z, {"2"})), ideal_of(z, {"3"})));
  Ideal i = ideal_of(z, {"4", "6"});
  CHECK(ideal_equal(ideal_quotient(i, ideal_of(z, {"1"})), i));

  Ring z12 = make_ring("Z/12");
  CHECK(ideal_equal(annihilator(z12.from_integer(3)), ideal_of(z12, {"4"})));
  CHECK(ideal_equal(annihilator_saturation(z12.from_integer(3)), ideal_of(z12, {"4"})));
  Ring z4 = make_ring("Z/4");
  CHECK(ideal_equal(annihilator(z4.from_integer(2)), ideal_of(z4, {"2"})));
  CHECK(ideal_equal(annihilator_saturation(z4.from_integer(2)), ideal_of(z4, {"1"})));
  CHECK(ideal_equal(annihilator(z.from_integer(5)), Ideal(z, {})));
}

TEST_CASE("principal generators of Z/n ideals") {
  Ring z12 = make_ring("Z/12");
  CHECK(principal_generator(ideal_of(z12, {"8", "6"})) == 2);
  CHECK(principal_generator(Ideal(z12, {})) % 12 == 0);
  CHECK(principal_generator(ideal_of(Ring::integers(), {"-4", "6"})) == 2);
}
