#include <doctest.h>

#include "zariski/apps.hpp"
#include "zariski/errors.hpp"

using namespace zariski;

TEST_CASE("matrix parsing") {
  Ring z6 = make_ring("Z/6");
  Matrix m = parse_matrix(z6, "2, 3; 1, 0");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
  CHECK(m.str() == "[[2, 3], [1, 0]]");
  CHECK(parse_matrix(z6, "[[2, 3], [1, 0]]").str() == m.str());
  Matrix e = parse_matrix(z6, "[[]]");
  CHECK(e.rows() == 1);
  CHECK(e.cols() == 0);
  CHECK_THROWS(parse_matrix(z6, "1, 2; 3"));
}

TEST_CASE("minors") {
  Ring z6 = make_ring("Z/6");
  CHECK(ideal_equal(minors(parse_matrix(z6, "2; 3"), 1), Ideal(z6, {z6.one()})));
  CHECK(ideal_equal(minors(parse_matrix(z6, "2, 3"), 0), Ideal(z6, {z6.one()})));
  Ring z = Ring::integers();
  CHECK(ideal_equal(minors(parse_matrix(z, "1, 0; 0, 1"), 2), Ideal(z, {z.one()})));
  CHECK(determinant(parse_matrix(z, "2, 7, 1; 3, 1, 4; 5, 9, 2")).integer() == 52);
  CHECK_THROWS_AS(minors(parse_matrix(z, "1, 2"), 2), std::out_of_range);
}

TEST_CASE("McCoy regularity") {
  Ring z6 = make_ring("Z/6");
  Matrix a = parse_matrix(z6, "2; 3");
  auto ra = mccoy_regularity(a);
  CHECK(ra.regular());
  CHECK(verify_mccoy(a, ra));

  Matrix b = parse_matrix(z6, "2");
  auto rb = mccoy_regularity(b);
  REQUIRE(rb.witness);
  CHECK(*rb.witness == z6.from_integer(3));
  CHECK(verify_mccoy(b, rb));

  Ring z = Ring::integers();
  Matrix c = parse_matrix(z, "2");
  CHECK(mccoy_regularity(c).regular());
}

TEST_CASE("the trivializer") {
  Ring z1 = make_ring("Z/1");
  auto out = richman_harness(Matrix(z1, 1, 2));
  REQUIRE(out.certificate);
  CHECK(verify_triviality(*out.certificate));

  Ring z6 = make_ring("Z/6");
  auto k = richman_harness(parse_matrix(z6, "1, 0"));
  REQUIRE(k.kernel);
  CHECK_FALSE(k.certificate);
  for (const auto& x : mat_vec(parse_matrix(z6, "1, 0"), *k.kernel)) CHECK(x.is_zero());
}

TEST_CASE("a lying injectivity oracle is caught") {
  Ring z6 = make_ring("Z/6");
  InjectivityOracle liar = [&](const Matrix&, const std::vector<Elem>& v) {
    std::vector<MembershipCertificate> out(v.size());
    for (auto& c : out) c.exponent = 1;
    return std::optional<std::vector<MembershipCertificate>>(out);
  };
  CHECK_THROWS_AS(richman_trivializer(parse_matrix(z6, "1, 0"), liar), CertificateError);
}

TEST_CASE("triviality certificates survive serialization and reject tampering") {
  auto cert = trivial_ring_certificate(make_ring("Q[x]/(1)"));
  CHECK(verify_triviality(cert));
  CHECK(verify_triviality(triviality_from_json(triviality_to_json(cert))));
  Ring z6 = make_ring("Z/6");
  TrivialityCertificate forged{z6, {}, {}, {}, {}};
  forged.unit.exponent = 1;
  CHECK_FALSE(verify_triviality(forged));
}

TEST_CASE("localizations of Z/n") {
  Ring z12 = make_ring("Z/12");
  Ring l = localize_modular(z12, z12.from_integer(2));
  CHECK(l.modulus() == 3);
  Elem x = l.from_integer(2);
  Elem lifted = lift_from_localization(z12, x);
  CHECK(to_localization(l, lifted) == x);
  CHECK((lifted.integer() % 4) == 0);
}

TEST_CASE("generic freeness") {
  Ring z6 = make_ring("Z/6");
  Matrix m = parse_matrix(z6, "2");
  auto out = generic_freeness_simple(m);
  REQUIRE(out.free);
  CHECK(verify_freeness(m, *out.free));
  CHECK_FALSE(is_nilpotent(out.free->f));

  Matrix free = parse_matrix(z6, "[[]]");
  auto f = generic_freeness_simple(free);
  REQUIRE(f.free);
  CHECK(f.free->f.is_one());
  CHECK(f.free->rank == 1);
  CHECK(verify_freeness(free, *f.free));

  auto t = generic_freeness_simple(Matrix(make_ring("Z/1"), 1, 1));
  REQUIRE(t.trivial);
  CHECK(verify_triviality(*t.trivial));
}

TEST_CASE("a wrong freeness witness is rejected") {
  Ring z6 = make_ring("Z/6");
  Matrix m = parse_matrix(z6, "2");
  auto out = generic_freeness_simple(m);
  REQUIRE(out.free);
  FreenessWitness w = *out.free;
  w.rank += 1;
  w.basis.push_back(w.basis.empty() ? std::vector<Elem>{w.localized.one()} : w.basis.back());
  CHECK_FALSE(verify_freeness(m, w));
}
