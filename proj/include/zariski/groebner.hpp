#pragma once

// Buchberger's algorithm with cofactor tracking.

#include <vector>

#include "zariski/poly.hpp"

namespace zariski {

/// A reduced Gröbner basis together with the matrix expressing each basis
/// element over the input generators: basis[i] = sum_j transform[i][j] * inputs[j].
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> transform;
  std::size_t input_count = 0;
  bool tracked = true;
};

/// Sugar-strategy pair selection with the product and chain criteria.
/// Basis elements are monic and listed in order of discovery.
TrackedBasis groebner_basis(const PolyContext& ctx, const std::vector<Polynomial>& inputs,
                            bool track = true);

struct TrackedReduction {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // over the original inputs
};

/// Normal form of f with respect to the basis, and (if the basis is tracked)
/// cofactors with f - remainder = sum_j cofactors[j] * inputs[j].
TrackedReduction reduce_tracked(const PolyContext& ctx, const Polynomial& f, const TrackedBasis& gb);

/// Normal form only.
Polynomial normal_form(const PolyContext& ctx, const Polynomial& f, const std::vector<Polynomial>& basis);

}  // namespace zariski
