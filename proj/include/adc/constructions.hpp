#pragma once

#include <map>
#include <string>
#include <vector>

#include "adc/cell.hpp"
#include "adc/decompose.hpp"

namespace adc {

// Chain complex of the standard p-simplex: basis elements are the strictly
// increasing vertex tuples, boundary is the alternating face sum.
AugmentedComplex simplex(int p);

// Finite run of dimensions starting and ending at 0 whose adjacent entries
// differ by exactly 1; positions become basis elements.
struct DimensionSequence {
  std::vector<int> dims;
};

AugmentedComplex from_dimension_sequence(const DimensionSequence& seq);

AugmentedComplex globe(int p);
// free #_n-composable pair / triple of p-dimensional elements
AugmentedComplex composable_pair(int p, int n);
AugmentedComplex composable_triple(int p, int n);
// free quadruple in the interchange configuration (x #_n y) #_m (x' #_n y'),
// m < n
AugmentedComplex interchange_quad(int p, int n, int m);

// id of a tensor basis element; components containing the tensor mark are
// parenthesized
std::string tensor_id(const std::string& a, const std::string& b);

// Tensor product of based complexes: basis pairs, graded Leibniz boundary,
// multiplicative augmentation.
AugmentedComplex tensor(const AugmentedComplex& K, const AugmentedComplex& L);

// p-fold tensor power of the 1-dimensional globe.
AugmentedComplex cube(int p);

// The order on tensor basis pairs induced by strong-loop-freeness witnesses
// of the factors: pairs sort by the first component, then by the second,
// reversed when the first component has odd dimension. Validates its inputs
// and its output.
std::vector<std::string> tensor_order_witness(const AugmentedComplex& K,
                                              const AugmentedComplex& L,
                                              const std::vector<std::string>& ordK,
                                              const std::vector<std::string>& ordL);

enum class HomVariant { standard, prime };

// Internal hom complex: ambient coordinate groups indexed by basis pairs
// (plus an augmentation coordinate in degree 0), with predicate-defined
// submonoid (entrywise nonnegative matrices) and, in degree 0, the chain-map
// subgroup.
AugmentedComplex hom(const AugmentedComplex& K, const AugmentedComplex& L,
                     HomVariant variant = HomVariant::standard);
AugmentedComplex hom_prime(const AugmentedComplex& K, const AugmentedComplex& L);

// 0-cells of nu applied to a hom complex, searched with the coefficient
// bound.
std::vector<Cell> hom_zero_cells(const AugmentedComplex& H, const Int& bound);

// degree-preserving assignment of images to basis elements
using Morphism = std::map<std::string, ChainVector>;

Morphism identity_morphism(const AugmentedComplex& K);

// Reads the underlying morphism off a 0-cell of a hom complex.
Morphism morphism_of_hom_zero_cell(const Cell& x);

// All morphisms K -> L whose image coefficients are bounded; complete
// relative to the bound.
std::vector<Morphism> enumerate_morphisms(const AugmentedComplex& K,
                                          const AugmentedComplex& L,
                                          const Int& bound = 1);

// Generators-and-relations description of nu K for loop-free unital K: the
// atoms generate; every atom is fixed by d at its own dimension and its
// sources/targets one level down are spelled out as composition words.
struct Presentation {
  struct Generator {
    std::string id;
    int dim = 0;
  };
  struct Relation {
    std::string id;
    Sign sign = Sign::minus;
    CompositionTree word; // d^sign_{dim-1} <id> = word
  };

  std::vector<Generator> generators;
  std::vector<Relation> relations;

  const Relation* boundary_word(const std::string& id, Sign sign) const;
  std::string to_text() const;
};

Presentation presentation(const AugmentedComplex& K);

} // namespace adc
