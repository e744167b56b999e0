#pragma once

// Finitely generated ideals and certificate-producing (radical) membership.
//
// A MembershipCertificate for f in sqrt(g_1, ..., g_k) is an identity
//   f^n = u_1 g_{i_1} + ... + u_m g_{i_m}
// that anyone can re-check with ring arithmetic alone (verify_certificate).

#include <optional>
#include <string>
#include <vector>

#include "zariski/rings.hpp"

namespace zariski {

class Ideal {
 public:
  Ideal(Ring ring, std::vector<Elem> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// "(g1, g2)"; the zero ideal prints as "(0)".
  std::string str() const;

 private:
  Ring ring_;
  std::vector<Elem> generators_;
};

struct MembershipCertificate {
  struct Cofactor {
    Elem u;
    std::size_t index;
  };
  unsigned long exponent = 1;
  std::vector<Cofactor> cofactors;

  /// "f^n = u1*(g_i1) + ..." for human output.
  std::string describe(const Elem& f, const Ideal& ideal) const;
};

/// Independent check: f^n - sum u_k g_{i_k} normalizes to zero.
bool verify_certificate(const Elem& f, const Ideal& ideal, const MembershipCertificate& cert);

struct GroebnerResult {
  Ideal basis;
  /// basis[i] = sum_j transformation[i][j] * input[j]
  std::vector<std::vector<Elem>> transformation;
};

/// Reduced Gröbner basis of a polynomial-kind ideal with cofactor tracking.
/// Throws UnsupportedRing for Z and Z/n.
GroebnerResult ideal_groebner_basis(const Ideal& ideal);

/// Certificate with exponent 1 when f lies in the ideal.
std::optional<MembershipCertificate> ideal_membership(const Ideal& ideal, const Elem& f);

/// Certificate when f lies in the radical of the ideal. The exponent is the
/// first one found, not necessarily the least.
std::optional<MembershipCertificate> radical_membership(const Ideal& ideal, const Elem& f);

/// (I : J) = {x : xJ in I}.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);

/// (0 : x)
Ideal annihilator(const Elem& x);

/// (0 : x^infinity), iterating (0 : x^k) until two successive ideals agree.
Ideal annihilator_saturation(const Elem& x);

/// j is a subset of i, by generator membership.
bool ideal_contains(const Ideal& i, const Ideal& j);
bool ideal_equal(const Ideal& a, const Ideal& b);

/// Z and Z/n are principal ideal rings: the gcd of the generators (and the
/// modulus), with 0 standing for the zero ideal of Z and n for that of Z/n.
Integer principal_generator(const Ideal& ideal);

/// Z/n and Z: the ideal rewritten with its single principal generator
/// (empty list for the zero ideal). Other kinds: unchanged.
Ideal normalized(const Ideal& ideal);

/// Structured text record {"exponent": n, "cofactors": [{"cofactor": "...", "index": i}, ...]}.
std::string certificate_to_json(const MembershipCertificate& cert);
MembershipCertificate certificate_from_json(const Ring& ring, const std::string& text);

}  // namespace zariski
