#include "zariski/rings.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "zariski/errors.hpp"
#include "zariski/groebner.hpp"
#include "zariski/ideals.hpp"

namespace zariski {

struct Ring::Data {
  RingKind kind = RingKind::kIntegers;
  Integer modulus{0};
  PolyContext ctx{CoeffField::rationals(), 0};
  std::vector<std::string> variables;
  std::vector<Polynomial> relation_basis;
  Reducedness reducedness = Reducedness::kKnownReduced;
  bool trivial = false;
  std::string text;
};

std::string to_string(Reducedness r) {
  switch (r) {
    case Reducedness::kKnownReduced:
      return "known-reduced";
    case Reducedness::kKnownNonReduced:
      return "known-non-reduced";
    case Reducedness::kUnknown:
      return "unknown";
  }
  return "unknown";
}

unsigned long bit_length(const Integer& n) {
  if (n == 0) return 0;
  return static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

Integer radical_of(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return 0;
  Integer r = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r *= p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r *= m;
  return r;
}

bool is_squarefree(const Integer& n) {
  Integer m = abs(n);
  return m != 0 && radical_of(m) == m;
}

Ring Ring::integers() {
  static const Ring z = [] {
    auto d = std::make_shared<Data>();
    d->kind = RingKind::kIntegers;
    d->text = "Z";
    return Ring(d);
  }();
  return z;
}

Ring Ring::modular(const Integer& n) {
  if (n < 1) throw ParseError("modulus must be at least 1");
  auto d = std::make_shared<Data>();
  d->kind = RingKind::kModular;
  d->modulus = n;
  d->trivial = (n == 1);
  d->reducedness = is_squarefree(n) ? Reducedness::kKnownReduced : Reducedness::kKnownNonReduced;
  d->text = "Z/" + n.get_str();
  return Ring(d);
}

Ring Ring::polynomial(const CoeffField& field, std::vector<std::string> variables,
                      const std::vector<Polynomial>& relations, Reducedness asserted) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'");
  }
  auto d = std::make_shared<Data>();
  d->kind = RingKind::kPolynomial;
  d->ctx = PolyContext(field, variables.size());
  d->variables = std::move(variables);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) {
    Polynomial p = d->ctx.adopt(r);
    if (!p.is_zero()) rels.push_back(std::move(p));
  }
  if (!rels.empty()) d->relation_basis = groebner_basis(d->ctx, rels, false).basis;
  d->trivial = d->relation_basis.size() == 1 && total_degree(d->relation_basis[0].terms[0].mono) == 0;
  if (d->relation_basis.empty() || d->trivial) {
    d->reducedness = Reducedness::kKnownReduced;
  } else {
    d->reducedness = asserted;
  }

  std::string text = field.is_rational() ? "Q" : "F" + field.characteristic().get_str();
  text += "[";
  for (std::size_t i = 0; i < d->variables.size(); ++i) {
    if (i) text += ",";
    text += d->variables[i];
  }
  text += "]";
  if (!d->relation_basis.empty()) {
    text += "/(";
    for (std::size_t i = 0; i < d->relation_basis.size(); ++i) {
      if (i) text += ", ";
      text += format_polynomial(d->relation_basis[i], d->variables);
    }
    text += ")";
  }
  d->text = std::move(text);
  return Ring(d);
}

RingKind Ring::kind() const { return data_->kind; }
const Integer& Ring::modulus() const { return data_->modulus; }

std::uint64_t Ring::small_modulus() const {
  if (!is_modular() || !data_->modulus.fits_ulong_p()) throw UnsupportedRing("expected a small Z/n");
  return data_->modulus.get_ui();
}

const PolyContext& Ring::poly_context() const { return data_->ctx; }
const std::vector<std::string>& Ring::variables() const { return data_->variables; }
const std::vector<Polynomial>& Ring::relation_basis() const { return data_->relation_basis; }
Reducedness Ring::reducedness() const { return data_->reducedness; }
bool Ring::is_trivial() const { return data_->trivial; }
const std::string& Ring::describe() const { return data_->text; }

bool Ring::operator==(const Ring& other) const {
  return data_ == other.data_ || data_->text == other.data_->text;
}

Elem Ring::zero() const { return from_integer(0); }
Elem Ring::one() const { return from_integer(1); }

Elem Ring::from_integer(const Integer& n) const {
  if (is_polynomial()) return Elem(*this, data_->ctx.constant(Rational(n)));
  return Elem(*this, n);
}

Elem Ring::from_polynomial(const Polynomial& p) const {
  if (!is_polynomial()) throw UnsupportedRing("not a polynomial ring: " + describe());
  return Elem(*this, p);
}

std::optional<std::size_t> Ring::variable_index(const std::string& name) const {
  auto it = std::find(data_->variables.begin(), data_->variables.end(), name);
  if (it == data_->variables.end()) return std::nullopt;
  return static_cast<std::size_t>(it - data_->variables.begin());
}

Elem Ring::variable(const std::string& name) const {
  auto idx = variable_index(name);
  if (!idx) throw UnboundVariable("unknown ring variable '" + name + "' in " + describe());
  return Elem(*this, data_->ctx.variable(*idx));
}

namespace {

Elem divide_by_constant(const Elem& a, const Elem& b) {
  const Ring& r = a.ring();
  if (b.is_zero()) throw ParseError("division by zero");
  switch (r.kind()) {
    case RingKind::kIntegers: {
      if (a.integer() % b.integer() != 0) throw ParseError("inexact division in Z");
      return r.from_integer(a.integer() / b.integer());
    }
    case RingKind::kModular: {
      Integer inv;
      Integer bv = b.integer();
      if (mpz_invert(inv.get_mpz_t(), bv.get_mpz_t(), r.modulus().get_mpz_t()) == 0) {
        throw ParseError("divisor " + b.str() + " is not a unit in " + r.describe());
      }
      return a * r.from_integer(inv);
    }
    case RingKind::kPolynomial: {
      const auto& p = b.poly();
      if (p.terms.size() != 1 || total_degree(p.terms[0].mono) != 0) {
        throw ParseError("division only by nonzero constants in " + r.describe());
      }
      const auto& ctx = r.poly_context();
      return r.from_polynomial(ctx.scale(a.poly(), ctx.field().inv(p.terms[0].coeff)));
    }
  }
  throw ParseError("unsupported division");
}

}  // namespace

Elem Ring::eval(const Expr& e, const std::map<std::string, Elem>& env) const {
  switch (e->op) {
    case ExprNode::Op::kNum:
      return from_integer(e->num);
    case ExprNode::Op::kName: {
      auto it = env.find(e->name);
      if (it != env.end()) {
        if (it->second.ring() != *this) throw RingMismatch("environment value from another ring");
        return it->second;
      }
      return variable(e->name);
    }
    case ExprNode::Op::kAdd:
      return eval(e->args[0], env) + eval(e->args[1], env);
    case ExprNode::Op::kSub:
      return eval(e->args[0], env) - eval(e->args[1], env);
    case ExprNode::Op::kMul:
      return eval(e->args[0], env) * eval(e->args[1], env);
    case ExprNode::Op::kDiv:
      return divide_by_constant(eval(e->args[0], env), eval(e->args[1], env));
    case ExprNode::Op::kNeg:
      return -eval(e->args[0], env);
    case ExprNode::Op::kPow:
      return pow(eval(e->args[0], env), e->exponent);
  }
  throw ParseError("bad expression");
}

Elem Ring::parse_elem(std::string_view text) const { return eval(parse_expr(text)); }

std::vector<Elem> Ring::elements() const {
  if (!is_modular()) throw UnsupportedRing("ring is not finite: " + describe());
  std::vector<Elem> out;
  std::uint64_t n = small_modulus();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(from_integer(Integer(i)));
  return out;
}

Ring make_ring(std::string_view spec, Reducedness asserted) {
  TokenCursor cur(spec, tokenize(spec));
  std::string head = cur.expect_ident();
  if (head == "Z" && !cur.at_symbol("[")) {
    if (cur.at_end()) return Ring::integers();
    cur.expect_symbol("/");
    Integer n = cur.expect_number();
    if (!cur.at_end()) cur.fail("trailing input after modulus");
    return Ring::modular(n);
  }
  CoeffField field = CoeffField::rationals();
  if (head == "Q") {
    field = CoeffField::rationals();
  } else if (head.size() > 1 && head[0] == 'F' &&
             std::all_of(head.begin() + 1, head.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    Integer p(head.substr(1));
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
      throw UnsupportedRing("unsupported coefficient field " + head + " (F<p> needs p prime)");
    }
    field = CoeffField::prime(p);
  } else {
    throw UnsupportedRing("unsupported coefficient field '" + head + "'");
  }
  cur.expect_symbol("[");
  std::vector<std::string> vars;
  if (!cur.at_symbol("]")) {
    vars.push_back(cur.expect_ident());
    while (cur.accept_symbol(",")) vars.push_back(cur.expect_ident());
  }
  cur.expect_symbol("]");
  Ring free_ring = Ring::polynomial(field, vars, {});
  std::vector<Polynomial> relations;
  if (cur.accept_symbol("/")) {
    cur.expect_symbol("(");
    if (!cur.at_symbol(")")) {
      relations.push_back(free_ring.eval(cur.parse_sum()).poly());
      while (cur.accept_symbol(",")) relations.push_back(free_ring.eval(cur.parse_sum()).poly());
    }
    cur.expect_symbol(")");
  }
  if (!cur.at_end()) cur.fail("trailing input");
  if (relations.empty()) return free_ring;
  return Ring::polynomial(field, vars, relations, asserted);
}

Elem::Elem(Ring ring, Integer value) : ring_(std::move(ring)) {
  switch (ring_.kind()) {
    case RingKind::kIntegers:
      integer_ = std::move(value);
      break;
    case RingKind::kModular:
      mpz_mod(integer_.get_mpz_t(), value.get_mpz_t(), ring_.modulus().get_mpz_t());
      break;
    case RingKind::kPolynomial:
      poly_ = normal_form(ring_.poly_context(), ring_.poly_context().constant(Rational(value)),
                          ring_.relation_basis());
      break;
  }
}

Elem::Elem(Ring ring, Polynomial value) : ring_(std::move(ring)) {
  if (!ring_.is_polynomial()) throw UnsupportedRing("polynomial payload for " + ring_.describe());
  poly_ = normal_form(ring_.poly_context(), value, ring_.relation_basis());
}

bool Elem::is_zero() const {
  if (ring_.is_polynomial()) return poly_.is_zero();
  return integer_ == 0;
}

bool Elem::is_one() const { return *this == ring_.one(); }

std::string Elem::str() const {
  if (ring_.is_polynomial()) return format_polynomial(poly_, ring_.variables());
  return integer_.get_str();
}

bool Elem::operator==(const Elem& other) const {
  if (ring_ != other.ring_) return false;
  if (ring_.is_polynomial()) return poly_ == other.poly_;
  return integer_ == other.integer_;
}

namespace {

void same_ring(const Elem& a, const Elem& b) {
  if (a.ring() != b.ring()) {
    throw RingMismatch("elements of " + a.ring().describe() + " and " + b.ring().describe());
  }
}

}  // namespace

Elem add(const Elem& a, const Elem& b) {
  same_ring(a, b);
  if (a.ring().is_polynomial()) {
    return Elem(a.ring(), a.ring().poly_context().add(a.poly(), b.poly()));
  }
  return Elem(a.ring(), Integer(a.integer() + b.integer()));
}

Elem sub(const Elem& a, const Elem& b) {
  same_ring(a, b);
  if (a.ring().is_polynomial()) {
    return Elem(a.ring(), a.ring().poly_context().sub(a.poly(), b.poly()));
  }
  return Elem(a.ring(), Integer(a.integer() - b.integer()));
}

Elem mul(const Elem& a, const Elem& b) {
  same_ring(a, b);
  if (a.ring().is_polynomial()) {
    return Elem(a.ring(), a.ring().poly_context().mul(a.poly(), b.poly()));
  }
  return Elem(a.ring(), Integer(a.integer() * b.integer()));
}

Elem neg(const Elem& a) {
  if (a.ring().is_polynomial()) return Elem(a.ring(), a.ring().poly_context().neg(a.poly()));
  return Elem(a.ring(), Integer(-a.integer()));
}

Elem pow(const Elem& a, unsigned long e) {
  const Ring& r = a.ring();
  if (r.is_modular()) {
    Integer out;
    mpz_powm_ui(out.get_mpz_t(), a.integer().get_mpz_t(), e, r.modulus().get_mpz_t());
    return Elem(r, out);
  }
  if (r.is_integers()) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), a.integer().get_mpz_t(), e);
    return Elem(r, out);
  }
  Elem result = r.one();
  Elem base = a;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Elem arith(const Ring& ring, ArithOp op, const std::vector<Elem>& args, unsigned long exponent) {
  for (const auto& a : args) {
    if (a.ring() != ring) throw RingMismatch("argument from " + a.ring().describe());
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("wrong number of arguments");
  };
  switch (op) {
    case ArithOp::kAdd:
      need(2);
      return args[0] + args[1];
    case ArithOp::kMul:
      need(2);
      return args[0] * args[1];
    case ArithOp::kSub:
      need(2);
      return args[0] - args[1];
    case ArithOp::kNeg:
      need(1);
      return -args[0];
    case ArithOp::kPow:
      need(1);
      return pow(args[0], exponent);
  }
  throw std::invalid_argument("unknown op");
}

unsigned long exponent_cap(unsigned long analytic) {
  if (const char* env = std::getenv("ZARISKI_EXPONENT_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return analytic;
}

std::optional<unsigned long> is_nilpotent(const Elem& f) {
  const Ring& r = f.ring();
  std::optional<unsigned long> found;
  switch (r.kind()) {
    case RingKind::kIntegers:
      if (f.is_zero()) found = 1;
      break;
    case RingKind::kModular: {
      unsigned long cap = exponent_cap(std::max(1UL, bit_length(r.modulus())));
      Elem p = f;
      for (unsigned long k = 1; k <= cap; ++k) {
        if (p.is_zero()) {
          found = k;
          break;
        }
        p = p * f;
      }
      break;
    }
    case RingKind::kPolynomial: {
      if (f.is_zero()) {
        found = 1;
        break;
      }
      auto cert = radical_membership(Ideal(r, {}), f);
      if (cert) found = cert->exponent;
      break;
    }
  }
  if (found && !f.is_zero() && r.reducedness() == Reducedness::kKnownReduced) {
    throw ReducednessViolation(r.describe() + " was asserted reduced but " + f.str() + "^" +
                               std::to_string(*found) + " = 0");
  }
  return found;
}

}  // namespace zariski
