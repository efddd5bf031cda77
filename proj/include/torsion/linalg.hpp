#pragma once

#include <cstddef>
#include <vector>

#include "torsion/matrix.hpp"

namespace torsion {

/// Exact rank by fraction-free (Bareiss) row reduction.
std::size_t rank_of(const RationalMatrix& m);

/// Indices of the pivot columns of the row-echelon form, i.e. the leftmost
/// maximal linearly independent set of columns, in increasing order.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

/// Exact determinant of a square matrix; the 0×0 determinant is 1.
Rational determinant(const RationalMatrix& m);

}  // namespace torsion
