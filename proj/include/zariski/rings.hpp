#pragma once

// Presentations of computable commutative rings and exact element arithmetic.
//
//   Z                      the integers
//   Z/n                    integers modulo n (n = 1 is the trivial ring)
//   K[x1,...,xk]/(g1,...)  polynomial quotient over K = Q or F_p
//
// Elements are kept in a unique normal form, so ring equality of two elements
// is payload equality. Polynomial quotients reduce modulo a reduced Gröbner
// basis of the relation ideal (degree-reverse-lexicographic order), computed
// once when the ring is built.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zariski/expr.hpp"
#include "zariski/poly.hpp"

namespace zariski {

enum class RingKind { kIntegers, kModular, kPolynomial };
enum class Reducedness { kKnownReduced, kKnownNonReduced, kUnknown };

std::string to_string(Reducedness r);

class Elem;

class Ring {
 public:
  static Ring integers();
  static Ring modular(const Integer& n);
  /// `relations` are polynomials in `ctx` variables; `asserted` only matters
  /// when the relation list is nonempty (a bare polynomial ring is a domain).
  static Ring polynomial(const CoeffField& field, std::vector<std::string> variables,
                         const std::vector<Polynomial>& relations,
                         Reducedness asserted = Reducedness::kUnknown);

  RingKind kind() const;
  bool is_integers() const { return kind() == RingKind::kIntegers; }
  bool is_modular() const { return kind() == RingKind::kModular; }
  bool is_polynomial() const { return kind() == RingKind::kPolynomial; }
  bool is_finite() const { return is_modular(); }

  /// Z/n: the modulus n. Otherwise 0.
  const Integer& modulus() const;
  /// Z/n with n fitting in 64 bits.
  std::uint64_t small_modulus() const;

  const PolyContext& poly_context() const;
  const std::vector<std::string>& variables() const;
  const std::vector<Polynomial>& relation_basis() const;

  Reducedness reducedness() const;
  bool is_trivial() const;

  Elem zero() const;
  Elem one() const;
  Elem from_integer(const Integer& n) const;
  Elem from_polynomial(const Polynomial& p) const;
  Elem variable(const std::string& name) const;
  std::optional<std::size_t> variable_index(const std::string& name) const;

  /// Evaluates an expression; names resolve first through `env`, then to ring variables.
  Elem eval(const Expr& e, const std::map<std::string, Elem>& env = {}) const;
  Elem parse_elem(std::string_view text) const;

  /// Every element of a finite ring, in the order 0, 1, ..., n-1.
  std::vector<Elem> elements() const;

  /// Canonical text, e.g. "Z/12" or "Q[x,y]/(x^2 - y)".
  const std::string& describe() const;

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

  struct Data;

 private:
  explicit Ring(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
  friend class Elem;
};

/// Parses the ring grammar: `Z`, `Z/<n>`, `<field>[<vars>]`, `<field>[<vars>]/(<g1>, ..., <gk>)`
/// with `<field>` one of `Q` or `F<p>`.
Ring make_ring(std::string_view spec, Reducedness asserted = Reducedness::kUnknown);

class Elem {
 public:
  Elem(Ring ring, Integer value);
  Elem(Ring ring, Polynomial value);

  const Ring& ring() const { return ring_; }
  /// Z and Z/n payload; residues lie in [0, n).
  const Integer& integer() const { return integer_; }
  const Polynomial& poly() const { return poly_; }

  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  bool operator==(const Elem& other) const;
  bool operator!=(const Elem& other) const { return !(*this == other); }

 private:
  Ring ring_;
  Integer integer_;
  Polynomial poly_;
};

Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem mul(const Elem& a, const Elem& b);
Elem neg(const Elem& a);
Elem pow(const Elem& a, unsigned long e);

inline Elem operator+(const Elem& a, const Elem& b) { return add(a, b); }
inline Elem operator-(const Elem& a, const Elem& b) { return sub(a, b); }
inline Elem operator*(const Elem& a, const Elem& b) { return mul(a, b); }
inline Elem operator-(const Elem& a) { return neg(a); }

enum class ArithOp { kAdd, kMul, kNeg, kSub, kPow };

/// Generic dispatcher; `pow` takes the exponent as its final argument.
Elem arith(const Ring& ring, ArithOp op, const std::vector<Elem>& args, unsigned long exponent = 0);

/// Search bound for exponents n with f^n in an ideal: an override from the
/// ZARISKI_EXPONENT_CAP environment variable, else `analytic`.
unsigned long exponent_cap(unsigned long analytic);

/// Least k >= 1 found with f^k = 0, or nullopt. Exact for every ring kind;
/// polynomial quotients delegate to radical membership in the zero ideal.
/// Throws ReducednessViolation if the ring was asserted reduced and f is a
/// nonzero nilpotent.
std::optional<unsigned long> is_nilpotent(const Elem& f);

/// Number of bits of |n| (0 for n = 0).
unsigned long bit_length(const Integer& n);

/// Product of the distinct prime factors of |n| (trial division; 0 for 0).
Integer radical_of(const Integer& n);

bool is_squarefree(const Integer& n);

}  // namespace zariski
