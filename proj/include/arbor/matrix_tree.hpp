#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/matrix.hpp"

namespace arbor {

inline constexpr std::uint64_t kDefaultSubsetCap = 1'000'000;

struct TreeSum {
  VertexId root;
  Mode mode = Mode::Outgoing;
  Rational value;
};

/// Number (or total weight) of spanning trees rooted at `root`, as the
/// determinant of the reduced L1 (outgoing) or L2 (incoming).
TreeSum count_trees(const Digraph& g, VertexId root, Mode mode);

/// Product of the weights of the edges in s (1 for the empty set).
Rational subset_weight(const Digraph& g, const EdgeSubset& s);

struct TreeReport {
  std::vector<EdgeSubset> trees;  // lexicographic
  Rational total_weight;
  std::uint64_t subsets_examined = 0;
};

/// Classifies every (p-1)-subset of edges. Throws CapExceededError when
/// C(q, p-1) > cap.
TreeReport enumerate_trees(const Digraph& g, VertexId root, Mode mode,
                           std::uint64_t cap = kDefaultSubsetCap);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct BinetCauchyTerm {
  EdgeSubset subset;
  TreeClassification classification;
  Rational term_value;  // det(B[S] C[S])
  // Exposed only for unweighted graphs, where both factors are rational.
  std::optional<Rational> det_b;
  std::optional<Rational> det_c;
};

struct BinetCauchyExpansion {
  std::vector<BinetCauchyTerm> terms;
  Rational sum;
};

/// Factors of the reduced Laplacian, over the non-root vertices in ascending
/// order. Outgoing: B = (N^r)^T - M^r, C = N^r. Incoming: B = M^r - (N^r)^T,
/// C = (M^r)^T. The reduced Laplacian equals B W C.
struct ReducedFactors {
  Matrix b;  // (p-1) x q
  Matrix c;  // q x (p-1)
};

ReducedFactors reduced_factors(const Digraph& g, VertexId root, Mode mode);

/// One term det(B[S] W[S] C[S]) of the expansion, with its classification.
BinetCauchyTerm binet_cauchy_term(const Digraph& g, const ReducedFactors& f, VertexId root,
                                  Mode mode, const EdgeSubset& s);

/// Every term of det(B W C) = sum_S det(B[S] W[S] C[S]). Throws
/// CapExceededError when C(q, p-1) > cap.
BinetCauchyExpansion binet_cauchy_expansion(const Digraph& g, VertexId root, Mode mode,
                                            std::uint64_t cap = kDefaultSubsetCap);

/// D = M^r[S] N^r[S]: D(i,j) = 1 iff a tree edge joins the i-th to the j-th
/// non-root vertex. Throws Error(NotATree) unless `tree` classifies as a tree
/// in `mode`.
Matrix tree_internal_adjacency(const Digraph& g, const EdgeSubset& tree, VertexId root,
                               Mode mode = Mode::Outgoing);

/// D^(p-1) = 0 for the internal adjacency of `tree`.
bool check_nilpotency(const Digraph& g, const EdgeSubset& tree, VertexId root,
                      Mode mode = Mode::Outgoing);

}  // namespace arbor
