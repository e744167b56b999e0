#pragma once

// Sparse multivariate polynomials with exact coefficients over Q or F_p.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zariski {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient field of a polynomial ring: the rationals or a prime field F_p.
class CoeffField {
 public:
  static CoeffField rationals() { return CoeffField(Integer(0)); }
  static CoeffField prime(const Integer& p);

  bool is_rational() const { return characteristic_ == 0; }
  const Integer& characteristic() const { return characteristic_; }

  /// Canonical representative; in F_p an integer in [0, p).
  Rational normalize(const Rational& c) const;
  Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
  Rational neg(const Rational& a) const { return normalize(-a); }
  Rational inv(const Rational& a) const;

  bool operator==(const CoeffField& other) const = default;

 private:
  explicit CoeffField(Integer p) : characteristic_(std::move(p)) {}
  Integer characteristic_;
};

using Monomial = std::vector<std::uint32_t>;

/// Degree-reverse-lexicographic order, optionally refined into an
/// elimination order whose first `eliminate` variables form a leading block.
struct MonomialOrder {
  std::size_t eliminate = 0;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Terms strictly descending in the owning context's order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial& other) const;
};

std::uint32_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Arithmetic context: coefficient field, variable count and monomial order.
class PolyContext {
 public:
  PolyContext(CoeffField field, std::size_t nvars, MonomialOrder order = {})
      : field_(std::move(field)), nvars_(nvars), order_(order) {}

  const CoeffField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  Polynomial zero() const { return {}; }
  Polynomial constant(const Rational& c) const;
  Polynomial one() const { return constant(Rational(1)); }
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Monomial& m, const Rational& c) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Polynomial& a, const Rational& c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, const Rational& c) const;
  Polynomial pow(const Polynomial& a, unsigned long e) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic(const Polynomial& a) const;

  /// Re-sorts terms of a polynomial built under another order or variable count.
  /// Variables are mapped index-to-index; extra variables get exponent 0.
  Polynomial adopt(const Polynomial& a) const;

  /// Sorts and merges an arbitrary term list.
  Polynomial canonical(std::vector<Term> terms) const;

  /// Multivariate division: a = sum quotients[i] * divisors[i] + remainder,
  /// with no term of the remainder divisible by any leading monomial.
  struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
  };
  Division divide(const Polynomial& a, const std::vector<Polynomial>& divisors) const;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) const;

  /// Highest exponent of variable `var` occurring in `a`.
  std::uint32_t degree_in(const Polynomial& a, std::size_t var) const;

 private:
  CoeffField field_;
  std::size_t nvars_;
  MonomialOrder order_;
};

std::string format_rational(const Rational& c);

/// Canonical text: descending terms, coefficients in lowest terms, e.g. "x^2 - 1/2*y + 3".
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace zariski
