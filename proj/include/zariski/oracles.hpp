#pragma once

// Brute-force ground truth over finite rings Z/n. Everything here uses native
// 64-bit modular arithmetic and its own term evaluator; it shares no
// arithmetic, ideal or frame code with the certified algorithms it checks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zariski/formula.hpp"
#include "zariski/frame.hpp"

namespace zariski {

struct PrimeFilter {
  std::uint64_t modulus = 0;
  std::vector<bool> members;

  bool contains(std::uint64_t x) const { return members[x % modulus]; }
  std::vector<std::uint64_t> elements() const;
  std::string str() const;
};

/// The four prime-filter axioms checked literally on a subset of Z/n.
bool is_prime_filter(std::uint64_t n, const std::vector<bool>& members);

/// All prime filters of Z/n. Candidates are the complements of the ideals
/// (d), d | n (the complement of a prime filter is always an ideal), each
/// checked against the axioms. Throws UnsupportedRing for infinite rings.
std::vector<PrimeFilter> enumerate_prime_filters(const Ring& ring);

/// Search over all 2^n subsets; only for n <= 20.
std::vector<PrimeFilter> enumerate_prime_filters_exhaustive(std::uint64_t n);

/// Every prime filter containing f contains some g_i.
bool semantic_entails(const Ring& ring, const Elem& f, const std::vector<Elem>& gs);

/// h in sqrt(gens) in Z/n, decided by searching h^k, k <= bit length of n.
bool in_radical_u64(std::uint64_t n, const std::vector<std::uint64_t>& gens, std::uint64_t h);

struct BruteOptions {
  /// Environment: free variables bound to residues.
  std::map<std::string, std::uint64_t> env;
  /// Generators of the open interpreting beta.
  std::optional<std::vector<std::uint64_t>> beta;
};

/// forced[h] iff h |= phi, by the clauses of the algebraic Kripke-Joyal
/// semantics evaluated literally: partitions f^k = f g_1 + ... + f g_m with
/// k <= bit length of n and any number of summands, quantifiers and
/// implications over all g in A, local witnesses a / (fg)^E for all a in A.
std::vector<bool> brute_forcing_set(const Ring& ring, const Formula& phi, const BruteOptions& options = {});

/// The join of the basic opens D(h) over all forced h.
Open brute_truth_open(const Ring& ring, const Formula& phi, const BruteOptions& options = {});

/// Extensional comparison of an open with a forced set: h in sqrt(support) iff forced[h].
bool open_matches_set(const Open& u, const std::vector<bool>& forced);

}  // namespace zariski
