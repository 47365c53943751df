#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/matrix_tree.hpp"

namespace arbor {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every structural identity on one graph: incidence factorizations,
/// zero column sums, determinant vs. enumeration for all roots and both modes,
/// Binet-Cauchy term dichotomy, nilpotency of tree adjacency, kernel vectors,
/// cofactor constancy and positivity under strong connectivity.
/// Throws CapExceededError when brute force would exceed `cap` subsets.
std::vector<CheckResult> verify_all(const Digraph& g, std::uint64_t cap = kDefaultSubsetCap);

}  // namespace arbor
