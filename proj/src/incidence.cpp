#include "arbor/incidence.hpp"

#include <cmath>

#include "arbor/error.hpp"

namespace arbor {

Matrix incidence_in(const Digraph& g) {
  Matrix n(g.edge_count(), g.vertex_count());
  for (const Edge& e : g.edges()) n(e.id, e.to.index) = 1;
  return n;
}

Matrix incidence_out(const Digraph& g) {
  Matrix m(g.vertex_count(), g.edge_count());
  for (const Edge& e : g.edges()) m(e.from.index, e.id) = 1;
  return m;
}

namespace {

std::vector<std::vector<double>> sqrt_scaled(const Matrix& pattern, const Digraph& g,
                                             bool edges_on_rows) {
  std::vector<std::vector<double>> out(pattern.rows(), std::vector<double>(pattern.cols()));
  for (std::size_t i = 0; i < pattern.rows(); ++i) {
    for (std::size_t j = 0; j < pattern.cols(); ++j) {
      if (pattern(i, j) == 0) continue;
      const Edge& e = g.edge(edges_on_rows ? i : j);
      out[i][j] = std::sqrt(e.weight.get_d());
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> approx_weighted_incidence_in(const Digraph& g) {
  return sqrt_scaled(incidence_in(g), g, true);
}

std::vector<std::vector<double>> approx_weighted_incidence_out(const Digraph& g) {
  return sqrt_scaled(incidence_out(g), g, false);
}

GramProducts gram_products(const Digraph& g) {
  const std::size_t p = g.vertex_count();
  GramProducts out{Matrix(p, p), Matrix(p, p), Matrix(p, p)};
  for (const Edge& e : g.edges()) {
    out.d_in(e.to.index, e.to.index) += e.weight;
    out.d_out(e.from.index, e.from.index) += e.weight;
    out.a_v(e.from.index, e.to.index) = e.weight;
  }
  return out;
}

LaplacianPair laplacians(const Digraph& g) {
  GramProducts gp = gram_products(g);
  LaplacianPair lp;
  lp.l1 = gp.d_in - gp.a_v;
  lp.l2 = gp.d_out - transpose(gp.a_v);
  lp.d_in = std::move(gp.d_in);
  lp.d_out = std::move(gp.d_out);
  lp.a_v = std::move(gp.a_v);
  return lp;
}

Matrix reduced_laplacian(const LaplacianPair& lp, Which which, VertexId root) {
  return delete_row_col(which == Which::L1 ? lp.l1 : lp.l2, root.index);
}

std::vector<FactorizationCheck> factorization_checks(const Digraph& g,
                                                     std::optional<VertexId> root) {
  const LaplacianPair lp = laplacians(g);
  const std::vector<Rational> w = g.weights();
  const Matrix n = incidence_in(g);
  const Matrix m = incidence_out(g);
  const Matrix nt = transpose(n);
  const Matrix mt = transpose(m);

  std::vector<FactorizationCheck> checks;
  auto check = [&](std::string name, const Matrix& lhs, const Matrix& rhs) {
    checks.push_back({std::move(name), lhs == rhs});
  };
  check("D_in = N_in^T N_in", lp.d_in, paired_product(nt, w, n));
  check("A_v = M_out N_in", lp.a_v, paired_product(m, w, n));
  check("D_out = M_out M_out^T", lp.d_out, paired_product(m, w, mt));
  check("L1 = (N_in^T - M_out) N_in", lp.l1, paired_product(nt - m, w, n));
  check("L2 = (M_out - N_in^T) M_out^T", lp.l2, paired_product(m - nt, w, mt));

  std::vector<std::size_t> roots;
  if (root) {
    if (root->index >= g.vertex_count()) {
      throw Error(ErrorKind::IndexOutOfRange, "root index out of range");
    }
    roots.push_back(root->index);
  } else {
    for (std::size_t r = 0; r < g.vertex_count(); ++r) roots.push_back(r);
  }
  for (std::size_t r : roots) {
    const Matrix nr = delete_col(n, r);
    const Matrix mr = delete_row(m, r);
    const Matrix nrt = transpose(nr);
    const Matrix mrt = transpose(mr);
    const std::string at = " at root " + g.label(VertexId{r});
    check("L1^r = ((N_in^r)^T - M_out^r) N_in^r" + at,
          reduced_laplacian(lp, Which::L1, VertexId{r}), paired_product(nrt - mr, w, nr));
    check("L2^r = (M_out^r - (N_in^r)^T) (M_out^r)^T" + at,
          reduced_laplacian(lp, Which::L2, VertexId{r}), paired_product(mr - nrt, w, mrt));
  }
  return checks;
}

bool verify_factorization(const Digraph& g, std::optional<VertexId> root) {
  for (const FactorizationCheck& c : factorization_checks(g, root)) {
    if (!c.holds) return false;
  }
  return true;
}

}  // namespace arbor
