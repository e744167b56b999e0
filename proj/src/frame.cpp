#include "zariski/frame.hpp"

#include <algorithm>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

std::vector<Elem> dedup_nonzero(const std::vector<Elem>& gens) {
  std::vector<Elem> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

void same_ring(const Open& u, const Open& v) {
  if (u.ring() != v.ring()) throw RingMismatch("opens of different spectra");
}

}  // namespace

Open::Open(Ideal support) : support_(Ideal(support.ring(), dedup_nonzero(support.generators()))) {}

Open Open::top(const Ring& ring) { return Open(Ideal(ring, {ring.one()})); }
Open Open::bottom(const Ring& ring) { return Open(Ideal(ring, {})); }

std::string Open::str() const {
  if (support_.generators().empty()) return "D(0)";
  std::string out = "D(";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ", ";
    out += support_.generators()[i].str();
  }
  return out + ")";
}

Open basic_open(const Elem& f) { return Open(Ideal(f.ring(), {f})); }

std::optional<std::vector<MembershipCertificate>> leq(const Open& u, const Open& v) {
  same_ring(u, v);
  std::vector<MembershipCertificate> certs;
  certs.reserve(u.support().size());
  for (const auto& g : u.support().generators()) {
    auto c = radical_membership(v.support(), g);
    if (!c) return std::nullopt;
    certs.push_back(std::move(*c));
  }
  return certs;
}

bool open_equal(const Open& u, const Open& v) { return leq(u, v).has_value() && leq(v, u).has_value(); }

Open join(const Open& u, const Open& v) {
  same_ring(u, v);
  std::vector<Elem> gens = u.support().generators();
  gens.insert(gens.end(), v.support().generators().begin(), v.support().generators().end());
  return Open(Ideal(u.ring(), std::move(gens)));
}

Open meet(const Open& u, const Open& v) {
  same_ring(u, v);
  std::vector<Elem> gens;
  for (const auto& a : u.support().generators()) {
    for (const auto& b : v.support().generators()) gens.push_back(a * b);
  }
  return Open(Ideal(u.ring(), std::move(gens)));
}

Open join_all(const Ring& ring, const std::vector<Open>& opens) {
  Open acc = Open::bottom(ring);
  for (const auto& o : opens) acc = join(acc, o);
  return acc;
}

Open meet_all(const Ring& ring, const std::vector<Open>& opens) {
  Open acc = Open::top(ring);
  for (const auto& o : opens) acc = meet(acc, o);
  return acc;
}

Open heyting(const Open& u, const Open& v, bool v_support_radical) {
  same_ring(u, v);
  const Ring& ring = u.ring();
  if (ring.is_polynomial()) {
    bool radical = v_support_radical ||
                   (v.support().generators().empty() && ring.reducedness() == Reducedness::kKnownReduced);
    if (!radical) {
      throw UnsupportedRing("Heyting implication over " + ring.describe() +
                            " needs the radical of " + v.str() + ", which is not computed");
    }
    return Open(ideal_quotient(v.support(), u.support()));
  }
  Integer d = principal_generator(v.support());
  Integer r = radical_of(d);
  Ideal rad = r == 0 ? Ideal(ring, {}) : Ideal(ring, {ring.from_integer(r)});
  return Open(ideal_quotient(rad, u.support()));
}

Open negation(const Open& u) { return heyting(u, Open::bottom(u.ring())); }

bool is_dense(const Open& u) { return leq(negation(u), Open::bottom(u.ring())).has_value(); }

std::vector<Open> all_opens(const Ring& ring) {
  if (!ring.is_modular()) throw UnsupportedRing("frame enumeration needs Z/n, got " + ring.describe());
  std::vector<Open> out;
  const Integer& n = ring.modulus();
  for (Integer d = 1; d <= n; ++d) {
    if (n % d == 0 && is_squarefree(d)) {
      out.push_back(d == n ? Open::bottom(ring) : Open(Ideal(ring, {ring.from_integer(d)})));
    }
  }
  return out;
}

}  // namespace zariski
