#pragma once

#include <vector>

#include "ut4/int.hpp"

namespace ut4 {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major; a lattice is the row span

IntMat identity_matrix(size_t n);
IntMat transpose(const IntMat& m, size_t cols);
IntMat matmul(const IntMat& a, const IntMat& b, size_t inner, size_t cols);

// Row-style Hermite normal form: U * M = H with U unimodular. Nonzero rows of H
// come first, pivots are positive and strictly move right, entries above a
// pivot lie in [0, pivot).
struct RowEchelon {
  IntMat H;
  IntMat U;
  size_t rank = 0;
  std::vector<size_t> pivots;
};
RowEchelon hnf(const IntMat& m, size_t cols, bool with_transform = false);

// Basis (HNF rows) of the row span.
IntMat lattice_basis(const IntMat& m, size_t cols);
// Integer basis of {x : x * M = 0}.
IntMat left_kernel(const IntMat& m, size_t cols);
// Basis of the intersection of two row lattices in Z^cols.
IntMat lattice_intersection(const IntMat& a, const IntMat& b, size_t cols);
// (Q-span) ∩ Z^cols.
IntMat saturation(const IntMat& m, size_t cols);
// Coordinates of v in the HNF basis, or false when v is outside the lattice.
bool lattice_coords(const IntMat& basis, const std::vector<size_t>& pivots, const IntVec& v,
                    IntVec& coords);
// Index of sub in super when both have the same rank (0 if ranks differ).
Int lattice_index(const IntMat& super, const IntMat& sub, size_t cols);

// Smith normal form: P * M * Q = D with D diagonal (d_i | d_{i+1}).
struct Smith {
  IntMat P, Q, D;
  std::vector<Int> diag;
};
Smith smith(const IntMat& m, size_t rows, size_t cols);

// Reduce v modulo an HNF lattice to its canonical representative.
IntVec reduce_mod(const IntMat& basis, const std::vector<size_t>& pivots, IntVec v);

}  // namespace ut4
