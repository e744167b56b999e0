#include "zariski/localizations.hpp"

#include "zariski/errors.hpp"

namespace zariski {

LocalizedElem::LocalizedElem(Elem base, Elem numerator, unsigned long exponent)
    : base_(std::move(base)), numerator_(std::move(numerator)), exponent_(exponent) {
  if (base_.ring() != numerator_.ring()) throw RingMismatch("numerator and base in different rings");
}

std::string LocalizedElem::str() const {
  return "(" + numerator_.str() + ") / (" + base_.str() + ")^" + std::to_string(exponent_);
}

namespace {

void same_base(const LocalizedElem& a, const LocalizedElem& b) {
  if (a.base() != b.base()) {
    throw RingMismatch("localizations at different bases: " + a.base().str() + " vs " + b.base().str());
  }
}

}  // namespace

LocalizedElem loc_add(const LocalizedElem& a, const LocalizedElem& b) {
  same_base(a, b);
  const Elem& f = a.base();
  return {f, a.numerator() * pow(f, b.exponent()) + b.numerator() * pow(f, a.exponent()),
          a.exponent() + b.exponent()};
}

LocalizedElem loc_neg(const LocalizedElem& a) { return {a.base(), -a.numerator(), a.exponent()}; }

LocalizedElem loc_sub(const LocalizedElem& a, const LocalizedElem& b) { return loc_add(a, loc_neg(b)); }

LocalizedElem loc_mul(const LocalizedElem& a, const LocalizedElem& b) {
  same_base(a, b);
  return {a.base(), a.numerator() * b.numerator(), a.exponent() + b.exponent()};
}

LocalizedElem loc_constant(const Elem& base, const Elem& value) { return {base, value, 0}; }

LocalizedElem rebase(const LocalizedElem& a, const Elem& factor) {
  return {a.base() * factor, a.numerator() * pow(factor, a.exponent()), a.exponent()};
}

LocEquality loc_equal(const LocalizedElem& a, const LocalizedElem& b) {
  same_base(a, b);
  const Elem& f = a.base();
  Elem diff = a.numerator() * pow(f, b.exponent()) - b.numerator() * pow(f, a.exponent());
  if (diff.is_zero()) return {true, 0};
  auto cert = radical_membership(annihilator(diff), f);
  if (!cert) return {false, std::nullopt};
  unsigned long n = cert->exponent;
  if (!(pow(f, n) * diff).is_zero()) throw CertificateError("internal: localization witness failed");
  return {true, n};
}

std::optional<LocInverse> loc_invertible(const LocalizedElem& x) {
  const Elem& f = x.base();
  Ideal principal(f.ring(), {x.numerator()});
  auto cert = radical_membership(principal, f);
  if (!cert) return std::nullopt;
  Elem u = f.ring().zero();
  for (const auto& c : cert->cofactors) u = u + c.u;
  LocalizedElem inv(f, u * pow(f, x.exponent()), cert->exponent);
  if (!loc_equal(loc_mul(x, inv), loc_constant(f, f.ring().one())).equal) {
    throw CertificateError("internal: constructed inverse does not invert");
  }
  return LocInverse{std::move(inv), std::move(*cert)};
}

}  // namespace zariski
