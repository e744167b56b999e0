#pragma once

#include <optional>
#include <string>

#include "zariski/ideals.hpp"
#include "zariski/rings.hpp"

namespace zariski {

/// numerator / base^exponent in A[base^-1]. No canonical form: equality is
/// the semantic test loc_equal.
class LocalizedElem {
 public:
  LocalizedElem(Elem base, Elem numerator, unsigned long exponent = 0);

  const Ring& ring() const { return base_.ring(); }
  const Elem& base() const { return base_; }
  const Elem& numerator() const { return numerator_; }
  unsigned long exponent() const { return exponent_; }

  /// "num / base^k"
  std::string str() const;

 private:
  Elem base_;
  Elem numerator_;
  unsigned long exponent_;
};

LocalizedElem loc_add(const LocalizedElem& a, const LocalizedElem& b);
LocalizedElem loc_sub(const LocalizedElem& a, const LocalizedElem& b);
LocalizedElem loc_mul(const LocalizedElem& a, const LocalizedElem& b);
LocalizedElem loc_neg(const LocalizedElem& a);
LocalizedElem loc_constant(const Elem& base, const Elem& value);

/// The same fraction viewed in A[(base*factor)^-1]:
/// a / f^k = a g^k / (fg)^k.
LocalizedElem rebase(const LocalizedElem& a, const Elem& factor);

struct LocEquality {
  bool equal = false;
  /// N with base^N * (cross-multiplied difference) = 0.
  std::optional<unsigned long> witness;
};

/// a = b in A[f^-1] iff f^N (a_num f^{e_b} - b_num f^{e_a}) = 0 for some N,
/// decided as f in sqrt(0 : difference). Throws RingMismatch on different bases.
LocEquality loc_equal(const LocalizedElem& a, const LocalizedElem& b);

struct LocInverse {
  LocalizedElem inverse;
  /// base^n = u * numerator
  MembershipCertificate certificate;
};

/// x is invertible in A[f^-1] iff f in sqrt((numerator)). The inverse is
/// u f^e / f^n, and x * inverse = 1 is re-checked before returning.
std::optional<LocInverse> loc_invertible(const LocalizedElem& x);

}  // namespace zariski
