#pragma once

// Constructive algorithms on matrices over finite rings, each returning a
// certificate that re-verifies by ring arithmetic: the injective-matrix
// trivializer, McCoy regularity of the ideal of maximal minors, and simple
// generic freeness of a finitely presented module.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zariski/ideals.hpp"

namespace zariski {

class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Elem& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem e);
  bool is_zero() const;
  /// "[[a, b], [c, d]]"
  std::string str() const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

/// Rows separated by ';', entries by ',' ("2, 3; 1, 0"), or the nested form
/// "[[2, 3], [1, 0]]", where "[[]]" is one row with no columns.
Matrix parse_matrix(const Ring& ring, const std::string& text);

/// M * v
std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& v);

/// Fraction-free Bareiss over Z, cofactor expansion elsewhere.
Elem determinant(const Matrix& square);

/// Ideal of all m x m minors; m = 0 gives the unit ideal. Throws
/// std::out_of_range when m > min(rows, cols).
Ideal minors(const Matrix& m, std::size_t size);

/// A nonzero vector v with M v = 0, by enumerating the finite ring.
std::optional<std::vector<Elem>> kernel_vector(const Matrix& m);

// ---- 1 = 0 ----

struct TrivialityCertificate {
  /// An entry shown nilpotent: 1 = 0 in A[entry^-1] (the localized
  /// certificate), hence entry^exponent = 0 in A.
  struct Step {
    std::size_t row = 0;
    std::size_t col = 0;
    Elem entry;
    unsigned long exponent = 1;
    std::shared_ptr<const TrivialityCertificate> localized;
  };

  Ring ring;
  std::vector<Step> steps;
  /// The vector handed to the injectivity oracle, and its answer: one
  /// certificate of v_i in (0) per component. Empty when no oracle was used.
  std::vector<Elem> kernel_vector;
  std::vector<MembershipCertificate> oracle_answer;
  /// 1 in sqrt(0)
  MembershipCertificate unit;
};

/// Re-checks every nilpotency step, every oracle answer and the final
/// identity 1^k = 0, recursively through localized certificates.
bool verify_triviality(const TrivialityCertificate& cert);

std::string triviality_to_json(const TrivialityCertificate& cert);
TrivialityCertificate triviality_from_json(const std::string& text);

/// The certificate of 1 = 0 for a trivial ring.
TrivialityCertificate trivial_ring_certificate(const Ring& ring);

// ---- localizations of Z/n ----

/// A[f^-1] for A = Z/n is Z/m, m the largest divisor of n coprime to f.
Ring localize_modular(const Ring& ring, const Elem& f);
/// Image of x in the localization Z/m of Z/n.
Elem to_localization(const Ring& localized, const Elem& x);
/// The lift X of x in Z/m to Z/n with X = 0 modulo n/m.
Elem lift_from_localization(const Ring& ring, const Elem& x);

// ---- injective wide matrices ----

/// Given v with M v = 0, certificates of v_i in (0), or nullopt when the
/// oracle cannot certify.
using InjectivityOracle =
    std::function<std::optional<std::vector<MembershipCertificate>>(const Matrix&, const std::vector<Elem>&)>;

/// An oracle that answers honestly by testing v = 0.
InjectivityOracle zero_test_oracle();

/// For an injective M over a reduced Z/n with more columns than rows,
/// derives 1 = 0. The oracle is consulted only on vectors with a verified
/// M v = 0; an answer that does not verify raises CertificateError.
TrivialityCertificate richman_trivializer(const Matrix& m, const InjectivityOracle& oracle);

struct RichmanOutcome {
  std::optional<std::vector<Elem>> kernel;  // the matrix is not injective
  std::optional<TrivialityCertificate> certificate;
};

/// Enumerates the kernel first; only a genuinely injective matrix reaches
/// the trivializer.
RichmanOutcome richman_harness(const Matrix& m);

// ---- McCoy ----

struct McCoyResult {
  Ideal minors;
  /// x != 0 with x * minors = 0
  std::optional<Elem> witness;
  /// Finite rings: 1 in minors, so x * minors = 0 forces x = 0.
  std::optional<MembershipCertificate> unit_certificate;
  /// Z: index of a nonzero minor; Z is a domain.
  std::optional<std::size_t> nonzero_minor;

  bool regular() const { return !witness.has_value(); }
};

/// Regularity of the ideal of cols x cols minors. Z and Z/n only.
McCoyResult mccoy_regularity(const Matrix& m);
bool verify_mccoy(const Matrix& m, const McCoyResult& result);

// ---- simple generic freeness ----

struct FreenessWitness {
  Elem f;
  /// A[f^-1]
  Ring localized;
  std::size_t rank = 0;
  /// Basis vectors of coker(M)[f^-1] as elements of the localized free module.
  std::vector<std::vector<Elem>> basis;
};

struct GenericFreenessResult {
  std::optional<FreenessWitness> free;
  std::optional<TrivialityCertificate> trivial;
};

/// M presents coker(M) with rows() generators and cols() relations, over a
/// reduced Z/n. Returns a non-nilpotent f with coker(M)[f^-1] free, or 1 = 0.
GenericFreenessResult generic_freeness_simple(const Matrix& presentation);

/// Enumerates the localized module and checks that the basis maps
/// bijectively onto it.
bool verify_freeness(const Matrix& presentation, const FreenessWitness& witness);

}  // namespace zariski
