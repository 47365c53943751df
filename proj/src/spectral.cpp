#include "arbor/spectral.hpp"

#include <algorithm>

#include "arbor/error.hpp"
#include "arbor/incidence.hpp"
#include "arbor/matrix_tree.hpp"

namespace arbor {

TreeVector tree_vector(const Digraph& g, Mode mode) {
  const LaplacianPair lp = laplacians(g);
  const Which which = mode == Mode::Outgoing ? Which::L1 : Which::L2;
  TreeVector v;
  v.mode = mode;
  v.entries.reserve(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    v.entries.push_back(det(reduced_laplacian(lp, which, VertexId{i})));
  }
  v.all_zero = std::all_of(v.entries.begin(), v.entries.end(),
                           [](const Rational& x) { return x == 0; });
  return v;
}

bool verify_kernel(const Digraph& g) {
  const LaplacianPair lp = laplacians(g);
  const auto is_zero = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  };
  return is_zero(multiply(lp.l1, tree_vector(g, Mode::Outgoing).entries)) &&
         is_zero(multiply(lp.l2, tree_vector(g, Mode::Incoming).entries));
}

Matrix cofactor_matrix(const Matrix& l) {
  if (!l.is_square()) throw Error(ErrorKind::NotSquare, "cofactor_matrix: not square");
  Matrix c(l.rows(), l.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) c(i, j) = cofactor(l, i, j);
  }
  return c;
}

bool verify_cofactor_constancy(const Matrix& l) {
  if (!l.is_square()) throw Error(ErrorKind::ColumnSumsNonzero, "matrix is not square");
  for (const Rational& s : l.column_sums()) {
    if (s != 0) throw Error(ErrorKind::ColumnSumsNonzero, "column sum " + to_string(s) + " != 0");
  }
  const Matrix c = cofactor_matrix(l);
  for (std::size_t j = 0; j < c.cols(); ++j) {
    for (std::size_t i = 1; i < c.rows(); ++i) {
      if (c(i, j) != c(0, j)) return false;
    }
  }
  return true;
}

StationaryVector stationary(const Digraph& g, Mode mode) {
  const TreeVector v = tree_vector(g, mode);
  if (v.all_zero) {
    throw Error(ErrorKind::ZeroVector,
                "no vertex roots an " + std::string(to_string(mode)) + " spanning tree");
  }
  Rational total = 0;
  for (const Rational& x : v.entries) total += x;
  StationaryVector s;
  s.entries.reserve(v.entries.size());
  for (const Rational& x : v.entries) s.entries.push_back(x / total);
  return s;
}

}  // namespace arbor
