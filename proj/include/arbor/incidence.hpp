#pragma once

#include <optional>
#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

/// q x p, row k has a single 1 in the column of edge k's head.
/// Weighted graphs scale row k by sqrt(w_k); that factor is never stored, it
/// only appears through paired_product() with the edge weights.
Matrix incidence_in(const Digraph& g);

/// p x q, column k has a single 1 in the row of edge k's tail.
Matrix incidence_out(const Digraph& g);

/// Floating rendering of the sqrt-weighted incidence matrices, for display
/// only. Row-major, same shapes as the exact patterns.
std::vector<std::vector<double>> approx_weighted_incidence_in(const Digraph& g);
std::vector<std::vector<double>> approx_weighted_incidence_out(const Digraph& g);

struct GramProducts {
  Matrix d_in;
  Matrix a_v;
  Matrix d_out;
};

/// Degree and adjacency matrices accumulated edge by edge.
GramProducts gram_products(const Digraph& g);

struct LaplacianPair {
  Matrix l1;  // D_in - A_v
  Matrix l2;  // D_out - A_v^T
  Matrix d_in;
  Matrix d_out;
  Matrix a_v;
};

LaplacianPair laplacians(const Digraph& g);

enum class Which { L1 = 1, L2 = 2 };

Matrix reduced_laplacian(const LaplacianPair& lp, Which which, VertexId root);

/// Individual identities checked by verify_factorization, for reporting.
struct FactorizationCheck {
  std::string name;
  bool holds = false;
};

/// D_in = N^T W N, A_v = M W N, D_out = M W M^T, L1 = (N^T - M) W N,
/// L2 = (M - N^T) W M^T and their reduced forms at `root` (every vertex when
/// absent). W = diag(weights), the product of the two sqrt-weighted factors.
std::vector<FactorizationCheck> factorization_checks(const Digraph& g,
                                                     std::optional<VertexId> root);

bool verify_factorization(const Digraph& g, std::optional<VertexId> root = std::nullopt);

}  // namespace arbor
