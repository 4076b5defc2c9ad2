#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adc/cell.hpp"
#include "adc/errors.hpp"

namespace adc {

// Coefficients of the unique expression of a double sequence as an integer
// combination of atoms (the atoms form a basis of the group of double
// sequences). Zero coefficients are omitted.
std::map<std::string, Int> atom_expansion(const Cell& x);

// Multiset of basis elements of dimension > r in the atom expansion of x,
// sorted by (dimension, id). Throws CellError when some coefficient above
// level r is negative, i.e. when x is not congruent to a sum of atoms there.
std::vector<std::string> atom_list_mod(const Cell& x, int r);

// Smallest r >= -1 such that x is congruent to zero or a single atom modulo
// the cells of dimension at most r+1.
int decomposition_index(const Cell& x);

// Tree of #_r-compositions with atoms at the leaves.
struct CompositionTree {
  int level = -1;     // -1 marks a leaf
  std::string atom;   // leaf payload
  std::vector<CompositionTree> factors;

  bool is_leaf() const { return level < 0; }
  friend bool operator==(const CompositionTree&, const CompositionTree&) = default;
};

// One round of factorization at the decomposition index r: returns the
// factors x_1 #_r ... #_r x_k = x together with the basis element each factor
// is congruent to, ordered by the level-r witness order.
std::vector<std::pair<Cell, std::string>> decompose_step(const Cell& x);

// Full recursive factorization into a composition tree evaluating to x.
CompositionTree decompose_full(const Cell& x);

Cell evaluate(const AugmentedComplex& K, const CompositionTree& tree);

// Leaf multiset, sorted by (dimension in no particular order, id); callers
// compare as multisets.
std::vector<std::string> tree_leaves(const CompositionTree& tree);

// Rendering like "<01> #0 <12>", parentheses reflecting tree shape.
std::string to_word(const CompositionTree& tree);
CompositionTree parse_word(const std::string& word);

} // namespace adc
