#include "zariski/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zariski {

CoeffField CoeffField::prime(const Integer& p) {
  if (p < 2) throw std::invalid_argument("prime field characteristic must be >= 2");
  return CoeffField(p);
}

Rational CoeffField::normalize(const Rational& c) const {
  if (is_rational()) {
    Rational r(c);
    r.canonicalize();
    return r;
  }
  // a/b -> a * b^{-1} mod p
  Integer num = c.get_num();
  Integer den = c.get_den();
  Integer r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
  if (den != 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), characteristic_.get_mpz_t()) == 0) {
      throw std::domain_error("denominator divisible by the field characteristic");
    }
    r = r * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), characteristic_.get_mpz_t());
  }
  return Rational(r);
}

Rational CoeffField::inv(const Rational& a) const {
  Rational n = normalize(a);
  if (n == 0) throw std::domain_error("division by zero");
  if (is_rational()) return Rational(1) / n;
  Integer r;
  Integer num = n.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), characteristic_.get_mpz_t());
  return Rational(r);
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  const std::size_t k = std::min(eliminate, n);
  if (k > 0) {
    if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
  }
  return grevlex_range(a, b, k, n);
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms.size() != other.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].mono != other.terms[i].mono || terms[i].coeff != other.terms[i].coeff) {
      return false;
    }
  }
  return true;
}

std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

Polynomial PolyContext::constant(const Rational& c) const {
  Rational n = field_.normalize(c);
  Polynomial p;
  if (n != 0) p.terms.push_back({Monomial(nvars_, 0), n});
  return p;
}

Polynomial PolyContext::variable(std::size_t i) const {
  Monomial m(nvars_, 0);
  m.at(i) = 1;
  return monomial(m, Rational(1));
}

Polynomial PolyContext::monomial(const Monomial& m, const Rational& c) const {
  Rational n = field_.normalize(c);
  Polynomial p;
  if (n != 0) p.terms.push_back({m, n});
  return p;
}

Polynomial PolyContext::canonical(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
    return order_.compare(a.mono, b.mono) > 0;
  });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mono == t.mono) {
      out.terms.back().coeff = field_.add(out.terms.back().coeff, t.coeff);
      if (out.terms.back().coeff == 0) out.terms.pop_back();
      continue;
    }
    Rational c = field_.normalize(t.coeff);
    if (c != 0) out.terms.push_back({std::move(t.mono), std::move(c)});
  }
  return out;
}

Polynomial PolyContext::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size()) {
      out.terms.push_back(b.terms[j++]);
    } else {
      int c = order_.compare(a.terms[i].mono, b.terms[j].mono);
      if (c > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (c < 0) {
        out.terms.push_back(b.terms[j++]);
      } else {
        Rational s = field_.add(a.terms[i].coeff, b.terms[j].coeff);
        if (s != 0) out.terms.push_back({a.terms[i].mono, s});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

Polynomial PolyContext::neg(const Polynomial& a) const {
  Polynomial out = a;
  for (auto& t : out.terms) t.coeff = field_.neg(t.coeff);
  return out;
}

Polynomial PolyContext::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolyContext::scale(const Polynomial& a, const Rational& c) const {
  Rational n = field_.normalize(c);
  if (n == 0) return {};
  Polynomial out = a;
  for (auto& t : out.terms) t.coeff = field_.mul(t.coeff, n);
  return out;
}

Polynomial PolyContext::mul_term(const Polynomial& a, const Monomial& m, const Rational& c) const {
  Rational n = field_.normalize(c);
  if (n == 0) return {};
  Polynomial out;
  out.terms.reserve(a.terms.size());
  // monomial orders are compatible with multiplication, so order is preserved
  for (const auto& t : a.terms) out.terms.push_back({monomial_mul(t.mono, m), field_.mul(t.coeff, n)});
  return out;
}

Polynomial PolyContext::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial acc;
  for (const auto& t : b.terms) acc = add(acc, mul_term(a, t.mono, t.coeff));
  return acc;
}

Polynomial PolyContext::pow(const Polynomial& a, unsigned long e) const {
  Polynomial result = one();
  Polynomial base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Polynomial PolyContext::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.terms.front().coeff));
}

Polynomial PolyContext::adopt(const Polynomial& a) const {
  std::vector<Term> terms;
  terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    Monomial m(nvars_, 0);
    for (std::size_t i = 0; i < std::min(nvars_, t.mono.size()); ++i) m[i] = t.mono[i];
    for (std::size_t i = nvars_; i < t.mono.size(); ++i) {
      if (t.mono[i] != 0) throw std::invalid_argument("adopt: polynomial uses a dropped variable");
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return canonical(std::move(terms));
}

PolyContext::Division PolyContext::divide(const Polynomial& a,
                                          const std::vector<Polynomial>& divisors) const {
  Division out;
  out.quotients.assign(divisors.size(), Polynomial{});
  Polynomial p = a;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lead = p.terms.front();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero()) continue;
      const Term& gl = g.terms.front();
      if (!divides(gl.mono, lead.mono)) continue;
      Monomial m = monomial_div(lead.mono, gl.mono);
      Rational c = field_.mul(lead.coeff, field_.inv(gl.coeff));
      out.quotients[i] = add(out.quotients[i], monomial(m, c));
      p = sub(p, mul_term(g, m, c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lead);
      p.terms.erase(p.terms.begin());
    }
  }
  out.remainder.terms = std::move(rem);
  return out;
}

std::optional<Polynomial> PolyContext::exact_quotient(const Polynomial& a, const Polynomial& b) const {
  if (b.is_zero()) {
    if (a.is_zero()) return Polynomial{};
    return std::nullopt;
  }
  auto d = divide(a, {b});
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients.front();
}

std::uint32_t PolyContext::degree_in(const Polynomial& a, std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : a.terms) d = std::max(d, t.mono.at(var));
  return d;
}

std::string format_rational(const Rational& c) {
  Rational r(c);
  r.canonicalize();
  return r.get_str();
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += format_rational(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += format_rational(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace zariski
