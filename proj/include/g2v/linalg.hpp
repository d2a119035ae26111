#pragma once

#include "g2v/rational.hpp"

#include <utility>
#include <vector>

namespace g2v {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Canonical nullspace basis of a sparse matrix with `cols` columns.
// Elimination is exact with deterministic pivoting (first nonzero column,
// rows in the order given); the returned basis is the unique reduced
// echelon basis of the nullspace: vectors sorted by the position of their
// leading coordinate, leading coordinate 1, zeros above and below other
// leading positions.
std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows,
                                             int cols);

}  // namespace g2v
