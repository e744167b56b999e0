#pragma once

// The frame Rad(A) of radical ideals, i.e. the opens of Spec(A).
//
// An Open carries a finite generator list G and denotes sqrt(G). Opens are
// compared extensionally (mutual radical membership), never by their lists.

#include <optional>
#include <string>
#include <vector>

#include "zariski/ideals.hpp"

namespace zariski {

class Open {
 public:
  explicit Open(Ideal support);

  static Open top(const Ring& ring);
  static Open bottom(const Ring& ring);

  const Ring& ring() const { return support_.ring(); }
  const Ideal& support() const { return support_; }

  /// "D(g1, ..., gk)": the join of the basic opens D(gi); bottom is "D(0)".
  std::string str() const;

 private:
  Ideal support_;
};

Open basic_open(const Elem& f);

/// Present iff u <= v; one certificate per generator of u, each against v's support.
std::optional<std::vector<MembershipCertificate>> leq(const Open& u, const Open& v);
bool open_equal(const Open& u, const Open& v);

Open join(const Open& u, const Open& v);
Open meet(const Open& u, const Open& v);
Open join_all(const Ring& ring, const std::vector<Open>& opens);
Open meet_all(const Ring& ring, const std::vector<Open>& opens);

/// Largest C with C ∧ u <= v, with support (sqrt(support v) : support u).
/// Exact for Z and Z/n. For polynomial rings the radical of v's support is
/// not computed: pass `v_support_radical` when it is known radical (the
/// bottom of a known-reduced ring always is); otherwise UnsupportedRing.
Open heyting(const Open& u, const Open& v, bool v_support_radical = false);

Open negation(const Open& u);
bool is_dense(const Open& u);

/// Z/n: the whole finite frame, one open D(d) for each squarefree divisor d
/// of n, in increasing order of d. Throws UnsupportedRing for other kinds.
std::vector<Open> all_opens(const Ring& ring);

}  // namespace zariski
