#include "arbor/battery.hpp"

#include <algorithm>

#include "arbor/incidence.hpp"
#include "arbor/spectral.hpp"

namespace arbor {

namespace {

constexpr Mode kModes[] = {Mode::Outgoing, Mode::Incoming};

std::string at(const Digraph& g, std::size_t r, Mode mode) {
  return "root " + g.label(VertexId{r}) + " " + std::string(to_string(mode));
}

CheckResult factorization(const Digraph& g) {
  CheckResult out{"incidence factorization (full and reduced, every root)", true, ""};
  for (const FactorizationCheck& c : factorization_checks(g, std::nullopt)) {
    if (!c.holds) {
      out.passed = false;
      out.detail = "fails: " + c.name;
      break;
    }
  }
  return out;
}

CheckResult column_sums(const Digraph& g) {
  const LaplacianPair lp = laplacians(g);
  Matrix ones(1, g.vertex_count());
  for (std::size_t j = 0; j < g.vertex_count(); ++j) ones(0, j) = 1;
  const Matrix ones_b = ones * (transpose(incidence_in(g)) - incidence_out(g));
  const auto zero = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  };
  CheckResult out{"Laplacian column sums vanish", true, ""};
  if (!zero(lp.l1.column_sums())) {
    out = {out.name, false, "L1 has a nonzero column sum"};
  } else if (!zero(lp.l2.column_sums())) {
    out = {out.name, false, "L2 has a nonzero column sum"};
  } else if (!ones_b.is_zero()) {
    out = {out.name, false, "ones row does not annihilate N_in^T - M_out"};
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_all(const Digraph& g, std::uint64_t cap) {
  std::vector<CheckResult> results;
  results.push_back(factorization(g));
  results.push_back(column_sums(g));

  CheckResult oracle{"determinant equals enumerated tree weight", true, ""};
  CheckResult terms{"Binet-Cauchy terms: tree weight or zero, sum equals determinant", true, ""};
  CheckResult nilpotent{"tree adjacency D satisfies D^(p-1) = 0", true, ""};
  std::size_t trees_seen = 0;
  for (Mode mode : kModes) {
    for (std::size_t r = 0; r < g.vertex_count(); ++r) {
      const VertexId root{r};
      const Rational value = count_trees(g, root, mode).value;
      const TreeReport report = enumerate_trees(g, root, mode, cap);
      if (oracle.passed && value != report.total_weight) {
        oracle.passed = false;
        oracle.detail = at(g, r, mode) + ": det " + to_string(value) + " vs enumerated " +
                        to_string(report.total_weight);
      }
      const BinetCauchyExpansion bc = binet_cauchy_expansion(g, root, mode, cap);
      for (const BinetCauchyTerm& t : bc.terms) {
        const Rational expected =
            t.classification.is_tree() ? subset_weight(g, t.subset) : Rational(0);
        if (terms.passed && t.term_value != expected) {
          terms.passed = false;
          terms.detail = at(g, r, mode) + ", subset " + to_string(t.subset) + ": term " +
                         to_string(t.term_value) + ", expected " + to_string(expected);
        }
      }
      if (terms.passed && bc.sum != value) {
        terms.passed = false;
        terms.detail = at(g, r, mode) + ": term sum " + to_string(bc.sum) + " vs det " +
                       to_string(value);
      }
      for (const EdgeSubset& tree : report.trees) {
        ++trees_seen;
        if (nilpotent.passed && !check_nilpotency(g, tree, root, mode)) {
          nilpotent.passed = false;
          nilpotent.detail = at(g, r, mode) + ", tree " + to_string(tree);
        }
      }
    }
  }
  if (nilpotent.passed) nilpotent.detail = std::to_string(trees_seen) + " trees checked";
  results.push_back(std::move(oracle));
  results.push_back(std::move(terms));
  results.push_back(std::move(nilpotent));

  results.push_back({"L1 x = 0 and L2 y = 0", verify_kernel(g), ""});

  const LaplacianPair lp = laplacians(g);
  CheckResult cofactors{"cofactors constant down each column (L1, L2)", true, ""};
  if (!verify_cofactor_constancy(lp.l1)) cofactors = {cofactors.name, false, "L1"};
  else if (!verify_cofactor_constancy(lp.l2)) cofactors = {cofactors.name, false, "L2"};
  results.push_back(std::move(cofactors));

  CheckResult positive{"strong connectivity implies positive x and y", true, ""};
  if (!is_strongly_connected(g)) {
    positive.detail = "not strongly connected; nothing to check";
  } else {
    for (Mode mode : kModes) {
      const TreeVector v = tree_vector(g, mode);
      for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (positive.passed && v.entries[i] <= 0) {
          positive.passed = false;
          positive.detail = at(g, i, mode) + " has tree weight " + to_string(v.entries[i]);
        }
      }
    }
  }
  results.push_back(std::move(positive));
  return results;
}

}  // namespace arbor
