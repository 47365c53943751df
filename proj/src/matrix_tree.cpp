#include "arbor/matrix_tree.hpp"

#include <algorithm>

#include "arbor/error.hpp"
#include "arbor/incidence.hpp"

namespace arbor {

namespace {

void check_root(const Digraph& g, VertexId root) {
  if (root.index >= g.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "root index " + std::to_string(root.index) + " out of range");
  }
}

// Number of (p-1)-subsets, checked against the cap.
std::uint64_t checked_subset_count(const Digraph& g, std::uint64_t cap) {
  const Integer count = binomial(g.edge_count(), g.vertex_count() - 1);
  if (count > Integer(std::to_string(cap))) throw CapExceededError(count.get_str(), cap);
  return std::stoull(count.get_str());
}

}  // namespace

TreeSum count_trees(const Digraph& g, VertexId root, Mode mode) {
  check_root(g, root);
  const LaplacianPair lp = laplacians(g);
  const Which which = mode == Mode::Outgoing ? Which::L1 : Which::L2;
  return {root, mode, det(reduced_laplacian(lp, which, root))};
}

Rational subset_weight(const Digraph& g, const EdgeSubset& s) {
  Rational w = 1;
  for (std::size_t id : s) w *= g.edge(id).weight;
  return w;
}

TreeReport enumerate_trees(const Digraph& g, VertexId root, Mode mode, std::uint64_t cap) {
  check_root(g, root);
  TreeReport report;
  report.subsets_examined = checked_subset_count(g, cap);
  for_each_subset(g.edge_count(), g.vertex_count() - 1, [&](const std::vector<std::size_t>& ids) {
    EdgeSubset s(ids);
    if (classify_spanning_tree(g, s, root, mode).is_tree()) {
      report.total_weight += subset_weight(g, s);
      report.trees.push_back(std::move(s));
    }
  });
  return report;
}

ReducedFactors reduced_factors(const Digraph& g, VertexId root, Mode mode) {
  check_root(g, root);
  const Matrix nr = delete_col(incidence_in(g), root.index);
  const Matrix mr = delete_row(incidence_out(g), root.index);
  const Matrix nrt = transpose(nr);
  if (mode == Mode::Outgoing) return {nrt - mr, nr};
  return {mr - nrt, transpose(mr)};
}

BinetCauchyTerm binet_cauchy_term(const Digraph& g, const ReducedFactors& f, VertexId root,
                                  Mode mode, const EdgeSubset& s) {
  const std::size_t n = f.b.rows();
  if (f.c.rows() != g.edge_count() || f.b.cols() != g.edge_count() || f.c.cols() != n) {
    throw Error(ErrorKind::ShapeMismatch, "factors do not match the graph");
  }
  if (s.size() != n) {
    throw Error(ErrorKind::WrongSubsetSize, "subset size must equal the number of non-root vertices");
  }
  BinetCauchyTerm term;
  term.subset = s;
  term.classification = classify_spanning_tree(g, s, root, mode);

  // B[S] W[S] C[S], accumulated over the nonzeros of column k of B and row k
  // of C for each selected edge k.
  Matrix product(n, n);
  for (std::size_t k : s) {
    const Rational& w = g.edge(k).weight;
    for (std::size_t i = 0; i < n; ++i) {
      if (f.b(i, k) == 0) continue;
      const Rational left = f.b(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) {
        if (f.c(k, j) != 0) product(i, j) += left * f.c(k, j);
      }
    }
  }
  term.term_value = det(product);
  if (!g.weighted()) {
    term.det_b = det(select(f.b, std::nullopt, s.ids()));
    term.det_c = det(select(f.c, s.ids(), std::nullopt));
  }
  return term;
}

BinetCauchyExpansion binet_cauchy_expansion(const Digraph& g, VertexId root, Mode mode,
                                            std::uint64_t cap) {
  check_root(g, root);
  BinetCauchyExpansion out;
  out.terms.reserve(checked_subset_count(g, cap));
  const ReducedFactors f = reduced_factors(g, root, mode);
  for_each_subset(g.edge_count(), g.vertex_count() - 1, [&](const std::vector<std::size_t>& ids) {
    out.terms.push_back(binet_cauchy_term(g, f, root, mode, EdgeSubset(ids)));
    out.sum += out.terms.back().term_value;
  });
  return out;
}

Matrix tree_internal_adjacency(const Digraph& g, const EdgeSubset& tree, VertexId root,
                               Mode mode) {
  check_root(g, root);
  const TreeClassification c = classify_spanning_tree(g, tree, root, mode);
  if (!c.is_tree()) {
    throw Error(ErrorKind::NotATree, to_string(tree) + " is not a spanning tree: " + describe(g, c));
  }
  const Matrix nr = delete_col(incidence_in(g), root.index);
  const Matrix mr = delete_row(incidence_out(g), root.index);
  return select(mr, std::nullopt, tree.ids()) * select(nr, tree.ids(), std::nullopt);
}

bool check_nilpotency(const Digraph& g, const EdgeSubset& tree, VertexId root, Mode mode) {
  const Matrix d = tree_internal_adjacency(g, tree, root, mode);
  return power_is_zero(d, std::max<std::size_t>(1, g.vertex_count() - 1));
}

}  // namespace arbor
