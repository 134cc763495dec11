#pragma once

#include "cmk/integer_matrix.hpp"

#include <vector>

namespace cmk {

// U * M * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... > 0.
struct SNFDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  // Nonzero diagonal entries of D, in order.
  std::vector<Integer> diagonal() const;
  std::size_t rank() const { return diagonal().size(); }
};

SNFDecomposition smith_normal_form(const IntegerMatrix &m);

// Column Hermite form H = M * V, V unimodular. The first `rank` columns of H
// are in echelon form: pivot rows strictly increase, pivots are positive,
// and entries to the left of a pivot lie in [0, pivot). Remaining columns
// of H are zero, and the matching columns of V span ker M.
struct HermiteDecomposition {
  IntegerMatrix H;
  IntegerMatrix V;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

HermiteDecomposition column_hermite_form(const IntegerMatrix &m);

// Z-basis of {x : M x = 0}, one basis vector per column (cols(M) x k).
IntegerMatrix kernel_lattice(const IntegerMatrix &m);

// Z-basis of the column span of M in column Hermite form (rows(M) x rank).
// Two matrices span the same lattice iff their image_lattice is equal.
IntegerMatrix image_lattice(const IntegerMatrix &m);

std::size_t rank(const IntegerMatrix &m);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix &m);

} // namespace cmk
