#pragma once

#include <vector>

#include "adc/cell.hpp"

namespace adc {

// All vectors over the degree-n basis with coefficients in [0, bound].
// Throws when the search space is unreasonably large.
std::vector<ChainVector> bounded_vectors(const AugmentedComplex& K, int degree,
                                         const Int& bound);

// All cells of (nu K)_n, found by level-by-level backtracking over vectors
// with coefficients in [0, bound]. For loop-free unital bases the default
// bound 1 is exhaustive (every component of a nu-cell is a sum of distinct
// basis elements); for other bases completeness is relative to the bound.
std::vector<Cell> enumerate_cells(const AugmentedComplex& K, int n,
                                  const Int& bound = 1);

} // namespace adc
