#include <doctest.h>

#include "zariski/frame.hpp"
#include "zariski/localizations.hpp"

using namespace zariski;

namespace {

Open d(const Ring& ring, long f) { return basic_open(ring.from_integer(f)); }

}  // namespace

TEST_CASE("equality in a localization") {
  Ring z12 = make_ring("Z/12");
  Elem two = z12.from_integer(2);
  auto e = loc_equal(loc_constant(two, z12.from_integer(3)), loc_constant(two, z12.zero()));
  CHECK(e.equal);
  CHECK(e.witness == std::optional<unsigned long>(2));

  Ring z = Ring::integers();
  CHECK_FALSE(loc_equal(loc_constant(z.from_integer(5), z.from_integer(3)), loc_constant(z.from_integer(5), z.zero())).equal);

  Ring z4 = make_ring("Z/4");
  CHECK(loc_equal(loc_constant(z4.from_integer(2), z4.one()), loc_constant(z4.from_integer(2), z4.zero())).equal);
}

TEST_CASE("units of a localization") {
  Ring z12 = make_ring("Z/12");
  CHECK(loc_invertible(loc_constant(z12.from_integer(2), z12.from_integer(2))));
  Ring z6 = make_ring("Z/6");
  auto inv = loc_invertible(loc_constant(z6.one(), z6.from_integer(5)));
  REQUIRE(inv);
  auto prod = loc_mul(inv->inverse, loc_constant(z6.one(), z6.from_integer(5)));
  CHECK(loc_equal(prod, loc_constant(z6.one(), z6.one())).equal);
  Ring z = Ring::integers();
  CHECK_FALSE(loc_invertible(loc_constant(z.one(), z.from_integer(2))));
}

TEST_CASE("localized arithmetic") {
  Ring z = Ring::integers();
  Elem two = z.from_integer(2);
  LocalizedElem half(two, z.one(), 1);
  auto one = loc_add(half, half);
  CHECK(loc_equal(one, loc_constant(two, z.one())).equal);
  CHECK(loc_equal(loc_sub(one, half), half).equal);
  CHECK(loc_equal(loc_neg(loc_neg(half)), half).equal);
}

TEST_CASE("basic opens") {
  Ring z = Ring::integers();
  CHECK(open_equal(d(z, 6), Open(Ideal(z, {z.from_integer(6)}))));
  Ring z4 = make_ring("Z/4");
  CHECK(open_equal(d(z4, 2), Open::bottom(z4)));
  CHECK(open_equal(d(z4, 1), Open::top(z4)));
}

TEST_CASE("order and lattice operations") {
  Ring z = Ring::integers();
  CHECK_FALSE(leq(d(z, 2), d(z, 6)));
  auto c = leq(d(z, 6), d(z, 2));
  REQUIRE(c);
  CHECK(verify_certificate(z.from_integer(6), d(z, 2).support(), (*c)[0]));
  CHECK(open_equal(meet(d(z, 2), d(z, 3)), d(z, 6)));
  CHECK(open_equal(join(d(z, 2), d(z, 3)), Open::top(z)));

  Ring z6 = make_ring("Z/6");
  CHECK(open_equal(negation(d(z6, 2)), d(z6, 3)));
  CHECK(open_equal(heyting(d(z6, 2), d(z6, 3)), d(z6, 3)));
  CHECK(open_equal(heyting(d(z6, 2), d(z6, 2)), Open::top(z6)));
}

TEST_CASE("density") {
  Ring z = Ring::integers();
  CHECK(is_dense(d(z, 2)));
  Ring z6 = make_ring("Z/6");
  CHECK_FALSE(is_dense(d(z6, 2)));
  CHECK(is_dense(Open::top(z6)));
}

TEST_CASE("the frame of Z/n has one open per squarefree divisor of the radical") {
  CHECK(all_opens(make_ring("Z/12")).size() == 4);
  CHECK(all_opens(make_ring("Z/30")).size() == 8);
  CHECK(all_opens(make_ring("Z/1")).size() == 1);
}
