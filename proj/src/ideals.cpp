#include "zariski/ideals.hpp"

#include <algorithm>
#include <json.hpp>

#include "zariski/errors.hpp"
#include "zariski/groebner.hpp"

namespace zariski {

Ideal::Ideal(Ring ring, std::vector<Elem> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.ring() != ring_) throw RingMismatch("ideal generator from " + g.ring().describe());
  }
}

std::string Ideal::str() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].str();
  }
  return out + ")";
}

std::string MembershipCertificate::describe(const Elem& f, const Ideal& ideal) const {
  std::string out = "(" + f.str() + ")^" + std::to_string(exponent) + " = ";
  if (cofactors.empty()) return out + "0";
  for (std::size_t k = 0; k < cofactors.size(); ++k) {
    if (k) out += " + ";
    out += "(" + cofactors[k].u.str() + ")*(" + ideal.generators().at(cofactors[k].index).str() + ")";
  }
  return out;
}

bool verify_certificate(const Elem& f, const Ideal& ideal, const MembershipCertificate& cert) {
  if (f.ring() != ideal.ring() || cert.exponent == 0) return false;
  Elem rhs = ideal.ring().zero();
  for (const auto& c : cert.cofactors) {
    if (c.index >= ideal.size() || c.u.ring() != ideal.ring()) return false;
    rhs = rhs + c.u * ideal.generators()[c.index];
  }
  return pow(f, cert.exponent) == rhs;
}

namespace {

// Bezout data: d = sum coeffs[i] * values[i], d = gcd(values) >= 0.
struct Bezout {
  Integer d{0};
  std::vector<Integer> coeffs;
};

Bezout bezout(const std::vector<Integer>& values) {
  Bezout b;
  b.coeffs.assign(values.size(), Integer(0));
  for (std::size_t i = 0; i < values.size(); ++i) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.d.get_mpz_t(), values[i].get_mpz_t());
    for (std::size_t k = 0; k < i; ++k) b.coeffs[k] *= s;
    b.coeffs[i] = t;
    b.d = g;
  }
  if (b.d < 0) {
    b.d = -b.d;
    for (auto& c : b.coeffs) c = -c;
  }
  return b;
}

std::vector<Integer> integer_generators(const Ideal& ideal) {
  std::vector<Integer> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.generators()) out.push_back(g.integer());
  return out;
}

std::optional<MembershipCertificate> integer_membership(const Ideal& ideal, const Elem& f) {
  const Ring& r = ideal.ring();
  MembershipCertificate cert;
  if (f.is_zero()) return cert;
  Bezout b = bezout(integer_generators(ideal));
  Integer d = b.d;
  if (r.is_modular()) d = gcd(d, r.modulus());
  if (d == 0 || f.integer() % d != 0) return std::nullopt;
  if (r.is_modular() && b.d != d) {
    // gcd(gens) = d only after adjoining n; redo Bezout including n and drop its cofactor
    std::vector<Integer> vals = integer_generators(ideal);
    vals.push_back(r.modulus());
    b = bezout(vals);
    b.coeffs.pop_back();
  }
  Integer q = f.integer() / d;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    Integer u = q * b.coeffs[i];
    if (r.is_modular()) {
      // u*g only matters modulo n/gcd(g, n)
      Integer period = r.modulus() / gcd(ideal.generators()[i].integer(), r.modulus());
      mpz_mod(u.get_mpz_t(), u.get_mpz_t(), period.get_mpz_t());
    }
    if (u == 0) continue;
    cert.cofactors.push_back({r.from_integer(u), i});
  }
  return cert;
}

// Generators of the ideal plus the relation basis, as free polynomials.
std::vector<Polynomial> lifted_inputs(const Ideal& ideal) {
  std::vector<Polynomial> inputs;
  for (const auto& g : ideal.generators()) inputs.push_back(g.poly());
  for (const auto& r : ideal.ring().relation_basis()) inputs.push_back(r);
  return inputs;
}

std::optional<MembershipCertificate> certificate_from_reduction(const Ideal& ideal,
                                                                const TrackedReduction& red,
                                                                unsigned long exponent) {
  if (!red.remainder.is_zero()) return std::nullopt;
  MembershipCertificate cert;
  cert.exponent = exponent;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    Elem u = ideal.ring().from_polynomial(red.cofactors[i]);
    if (!u.is_zero()) cert.cofactors.push_back({u, i});
  }
  return cert;
}

std::optional<MembershipCertificate> polynomial_membership(const Ideal& ideal, const Elem& f) {
  if (f.is_zero()) return MembershipCertificate{};
  const auto& ctx = ideal.ring().poly_context();
  TrackedBasis gb = groebner_basis(ctx, lifted_inputs(ideal));
  return certificate_from_reduction(ideal, reduce_tracked(ctx, f.poly(), gb), 1);
}

std::optional<MembershipCertificate> polynomial_radical_membership(const Ideal& ideal, const Elem& f) {
  if (f.is_zero()) return MembershipCertificate{};
  const Ring& ring = ideal.ring();
  const auto& ctx = ring.poly_context();
  const std::size_t nv = ctx.nvars();
  // Rabinowitsch: 1 in I + R + (1 - t f) over K[x, t], t the last variable.
  PolyContext ext(ctx.field(), nv + 1);
  std::vector<Polynomial> inputs;
  for (const auto& p : lifted_inputs(ideal)) inputs.push_back(ext.adopt(p));
  Polynomial tf = ext.mul(ext.variable(nv), ext.adopt(f.poly()));
  inputs.push_back(ext.sub(ext.one(), tf));
  TrackedBasis gb = groebner_basis(ext, inputs);
  TrackedReduction red = reduce_tracked(ext, ext.one(), gb);
  if (!red.remainder.is_zero()) return std::nullopt;

  // Substitute t = 1/f and clear denominators with f^n, n >= every t-degree.
  std::uint32_t n = 1;
  for (std::size_t j = 0; j + 1 < inputs.size(); ++j) n = std::max(n, ext.degree_in(red.cofactors[j], nv));
  std::vector<Polynomial> fpow(n + 1);
  fpow[0] = ctx.one();
  for (std::uint32_t k = 1; k <= n; ++k) fpow[k] = ctx.mul(fpow[k - 1], f.poly());

  // Prefer a smaller exponent when f^k already lies in I + R.
  TrackedBasis base = groebner_basis(ctx, lifted_inputs(ideal));
  for (std::uint32_t k = 1; k < n; ++k) {
    auto cert = certificate_from_reduction(ideal, reduce_tracked(ctx, fpow[k], base), k);
    if (cert) return cert;
  }

  MembershipCertificate cert;
  cert.exponent = n;
  for (std::size_t j = 0; j < ideal.size(); ++j) {
    Polynomial acc;
    for (const auto& term : red.cofactors[j].terms) {
      std::uint32_t e = term.mono[nv];
      Monomial m(term.mono.begin(), term.mono.end() - 1);
      acc = ctx.add(acc, ctx.mul(ctx.monomial(m, term.coeff), fpow[n - e]));
    }
    Elem u = ring.from_polynomial(acc);
    if (!u.is_zero()) cert.cofactors.push_back({u, j});
  }
  return cert;
}

}  // namespace

GroebnerResult ideal_groebner_basis(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  if (!ring.is_polynomial()) throw UnsupportedRing("Gröbner bases need a polynomial ring, got " + ring.describe());
  const auto& ctx = ring.poly_context();
  TrackedBasis gb = groebner_basis(ctx, lifted_inputs(ideal));
  std::vector<Elem> basis;
  std::vector<std::vector<Elem>> transform;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    Elem b = ring.from_polynomial(gb.basis[i]);
    if (b.is_zero()) continue;
    basis.push_back(b);
    std::vector<Elem> row;
    for (std::size_t j = 0; j < ideal.size(); ++j) row.push_back(ring.from_polynomial(gb.transform[i][j]));
    transform.push_back(std::move(row));
  }
  return {Ideal(ring, std::move(basis)), std::move(transform)};
}

std::optional<MembershipCertificate> ideal_membership(const Ideal& ideal, const Elem& f) {
  if (f.ring() != ideal.ring()) throw RingMismatch("element and ideal in different rings");
  std::optional<MembershipCertificate> cert =
      ideal.ring().is_polynomial() ? polynomial_membership(ideal, f) : integer_membership(ideal, f);
  if (cert && !verify_certificate(f, ideal, *cert)) {
    throw CertificateError("internal: membership certificate failed to verify");
  }
  return cert;
}

std::optional<MembershipCertificate> radical_membership(const Ideal& ideal, const Elem& f) {
  if (f.ring() != ideal.ring()) throw RingMismatch("element and ideal in different rings");
  const Ring& ring = ideal.ring();
  std::optional<MembershipCertificate> cert;
  if (ring.is_polynomial()) {
    cert = polynomial_radical_membership(ideal, f);
  } else {
    if (f.is_zero()) return MembershipCertificate{};
    Integer d = principal_generator(ideal);
    Integer bound_base = ring.is_modular() ? ring.modulus() : d;
    if (ring.is_integers() && d == 0) return std::nullopt;  // f != 0 is not nilpotent in Z
    unsigned long cap = exponent_cap(std::max(1UL, bit_length(bound_base)));
    Elem power = f;
    for (unsigned long k = 1; k <= cap; ++k) {
      auto c = integer_membership(ideal, power);
      if (c) {
        c->exponent = k;
        cert = std::move(c);
        break;
      }
      power = power * f;
    }
  }
  if (cert && !verify_certificate(f, ideal, *cert)) {
    throw CertificateError("internal: radical certificate failed to verify");
  }
  return cert;
}

Integer principal_generator(const Ideal& ideal) {
  const Ring& r = ideal.ring();
  if (r.is_polynomial()) throw UnsupportedRing("not a principal ideal ring: " + r.describe());
  Integer d = r.is_modular() ? r.modulus() : Integer(0);
  for (const auto& g : ideal.generators()) d = gcd(d, g.integer());
  return d;
}

Ideal normalized(const Ideal& ideal) {
  const Ring& r = ideal.ring();
  if (r.is_polynomial()) return ideal;
  Integer d = principal_generator(ideal);
  if (d == 0 || (r.is_modular() && d == r.modulus())) return Ideal(r, {});
  return Ideal(r, {r.from_integer(d)});
}

namespace {

// Free-ring generators of I + R, reduced and nonzero.
std::vector<Polynomial> free_generators(const Ideal& ideal) {
  std::vector<Polynomial> out;
  for (auto& p : lifted_inputs(ideal)) {
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

PolyContext shifted_context(const PolyContext& ctx) {
  MonomialOrder elim;
  elim.eliminate = 1;
  return PolyContext(ctx.field(), ctx.nvars() + 1, elim);
}

Polynomial shift_in(const PolyContext& ext, const Polynomial& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms) {
    Monomial m(t.mono.size() + 1, 0);
    std::copy(t.mono.begin(), t.mono.end(), m.begin() + 1);
    terms.push_back({std::move(m), t.coeff});
  }
  return ext.canonical(std::move(terms));
}

std::optional<Polynomial> shift_out(const PolyContext& ctx, const Polynomial& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms) {
    if (t.mono[0] != 0) return std::nullopt;
    terms.push_back({Monomial(t.mono.begin() + 1, t.mono.end()), t.coeff});
  }
  return ctx.canonical(std::move(terms));
}

// I ∩ J in the free ring, by eliminating t from tI + (1 - t)J.
std::vector<Polynomial> intersect(const PolyContext& ctx, const std::vector<Polynomial>& a,
                                  const std::vector<Polynomial>& b) {
  PolyContext ext = shifted_context(ctx);
  Polynomial t = ext.variable(0);
  Polynomial one_minus_t = ext.sub(ext.one(), t);
  std::vector<Polynomial> inputs;
  for (const auto& p : a) inputs.push_back(ext.mul(t, shift_in(ext, p)));
  for (const auto& p : b) inputs.push_back(ext.mul(one_minus_t, shift_in(ext, p)));
  TrackedBasis gb = groebner_basis(ext, inputs, false);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    if (auto p = shift_out(ctx, g)) out.push_back(std::move(*p));
  }
  return out;
}

// (Q : h) = (Q ∩ (h)) / h
std::vector<Polynomial> quotient_by_element(const PolyContext& ctx, const std::vector<Polynomial>& q,
                                            const Polynomial& h) {
  std::vector<Polynomial> out;
  for (const auto& g : intersect(ctx, q, {h})) {
    auto e = ctx.exact_quotient(g, h);
    if (!e) throw CertificateError("internal: intersection element not divisible");
    out.push_back(std::move(*e));
  }
  return out;
}

Ideal polynomial_quotient(const Ideal& i, const Ideal& j) {
  const Ring& ring = i.ring();
  const auto& ctx = ring.poly_context();
  std::vector<Polynomial> base = free_generators(i);
  std::optional<std::vector<Polynomial>> acc;
  for (const auto& h : j.generators()) {
    if (h.is_zero()) continue;
    auto part = quotient_by_element(ctx, base, h.poly());
    acc = acc ? intersect(ctx, *acc, part) : part;
  }
  if (!acc) return Ideal(ring, {ring.one()});
  std::vector<Elem> gens;
  for (const auto& p : *acc) {
    Elem e = ring.from_polynomial(p);
    if (e.is_zero()) continue;
    if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  if (i.ring() != j.ring()) throw RingMismatch("ideal quotient across rings");
  const Ring& r = i.ring();
  if (r.is_polynomial()) return polynomial_quotient(i, j);
  Integer a = principal_generator(i);
  Integer b = principal_generator(j);
  Integer zero_mark = r.is_modular() ? r.modulus() : Integer(0);
  if (b == zero_mark) return Ideal(r, {r.one()});
  if (a == 0) return Ideal(r, {});
  return normalized(Ideal(r, {r.from_integer(Integer(a / gcd(a, b)))}));
}

Ideal annihilator(const Elem& x) {
  return ideal_quotient(Ideal(x.ring(), {}), Ideal(x.ring(), {x}));
}

Ideal annihilator_saturation(const Elem& x) {
  Ideal current = annihilator(x);
  Elem power = x;
  while (true) {
    power = power * x;
    Ideal next = annihilator(power);
    if (ideal_equal(current, next)) return normalized(current);
    current = std::move(next);
  }
}

bool ideal_contains(const Ideal& i, const Ideal& j) {
  for (const auto& g : j.generators()) {
    if (!ideal_membership(i, g)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) { return ideal_contains(a, b) && ideal_contains(b, a); }

std::string certificate_to_json(const MembershipCertificate& cert) {
  nlohmann::json j;
  j["exponent"] = cert.exponent;
  j["cofactors"] = nlohmann::json::array();
  for (const auto& c : cert.cofactors) j["cofactors"].push_back({{"cofactor", c.u.str()}, {"index", c.index}});
  return j.dump();
}

MembershipCertificate certificate_from_json(const Ring& ring, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  if (!j.is_object() || !j.contains("exponent") || !j.contains("cofactors") || !j["exponent"].is_number_unsigned() ||
      !j["cofactors"].is_array()) {
    throw ParseError("certificate: expected {\"exponent\": n, \"cofactors\": [...]}");
  }
  MembershipCertificate cert;
  cert.exponent = j["exponent"].get<unsigned long>();
  for (const auto& c : j["cofactors"]) {
    if (!c.contains("cofactor") || !c.contains("index") || !c["cofactor"].is_string() ||
        !c["index"].is_number_unsigned()) {
      throw ParseError("certificate: malformed cofactor record");
    }
    cert.cofactors.push_back({ring.parse_elem(c["cofactor"].get<std::string>()), c["index"].get<std::size_t>()});
  }
  return cert;
}

}  // namespace zariski
