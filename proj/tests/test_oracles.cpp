#include <doctest.h>

#include "zariski/oracles.hpp"
#include "zariski/semantics.hpp"

using namespace zariski;

namespace {

std::set<std::vector<std::uint64_t>> filter_sets(const Ring& ring) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& p : enumerate_prime_filters(ring)) out.insert(p.elements());
  return out;
}

}  // namespace

TEST_CASE("prime filters of small rings") {
  CHECK(filter_sets(make_ring("Z/6")) == std::set<std::vector<std::uint64_t>>{{1, 2, 4, 5}, {1, 3, 5}});
  CHECK(filter_sets(make_ring("Z/4")) == std::set<std::vector<std::uint64_t>>{{1, 3}});
  CHECK(filter_sets(make_ring("Z/1")).empty());
}

TEST_CASE("the fast enumeration agrees with the subset search") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    auto fast = enumerate_prime_filters(make_ring("Z/" + std::to_string(n)));
    auto slow = enumerate_prime_filters_exhaustive(n);
    std::set<std::vector<std::uint64_t>> a, b;
    for (const auto& p : fast) a.insert(p.elements());
    for (const auto& p : slow) b.insert(p.elements());
    CHECK_MESSAGE(a == b, "n = " << n);
  }
}

TEST_CASE("semantic entailment") {
  Ring z6 = make_ring("Z/6");
  auto e = [&](long f, std::vector<long> gs) {
    std::vector<Elem> v;
    for (long g : gs) v.push_back(z6.from_integer(g));
    return semantic_entails(z6, z6.from_integer(f), v);
  };
  CHECK(e(1, {2, 3}));
  CHECK_FALSE(e(2, {3}));
  CHECK(e(0, {}));
}

TEST_CASE("brute-force truth opens") {
  Ring z6 = make_ring("Z/6");
  CHECK(open_equal(brute_truth_open(z6, parse_formula("not (2 = 0)")), basic_open(z6.from_integer(2))));
  Ring z12 = make_ring("Z/12");
  CHECK(open_equal(brute_truth_open(z12, fm::bot()), Open::bottom(z12)));
  CHECK(open_equal(brute_truth_open(z12, fm::top()), Open::top(z12)));
  auto forced = brute_forcing_set(z12, fm::bot());
  CHECK(forced[0]);
  CHECK(forced[6]);
  CHECK_FALSE(forced[2]);
}

TEST_CASE("native radical test") {
  CHECK(in_radical_u64(12, {4}, 2));
  CHECK_FALSE(in_radical_u64(12, {4}, 3));
  CHECK(in_radical_u64(6, {2, 3}, 1));
}
