#pragma once

#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

/// Per-vertex tree counts: x (outgoing) lies in the kernel of L1, y
/// (incoming) in the kernel of L2.
struct TreeVector {
  Mode mode = Mode::Outgoing;
  std::vector<Rational> entries;
  bool all_zero = true;
};

TreeVector tree_vector(const Digraph& g, Mode mode);

/// L1 x = 0 and L2 y = 0, exactly.
bool verify_kernel(const Digraph& g);

/// Full cofactor matrix, C(i,j) = (-1)^(i+j) M_ij.
Matrix cofactor_matrix(const Matrix& l);

/// True iff cofactors agree down every column. Throws
/// Error(ColumnSumsNonzero) if l is not square with zero column sums.
bool verify_cofactor_constancy(const Matrix& l);

/// Tree vector normalized to sum 1.
struct StationaryVector {
  std::vector<Rational> entries;
};

/// Throws Error(ZeroVector) when no vertex roots a spanning tree in `mode`.
StationaryVector stationary(const Digraph& g, Mode mode);

}  // namespace arbor
