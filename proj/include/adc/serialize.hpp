#pragma once

#include <json.hpp>

#include "adc/cell.hpp"
#include "adc/errors.hpp"

namespace adc {

// Integers emit as JSON numbers, falling back to decimal strings outside the
// double-safe range; both forms parse.
nlohmann::json int_to_json(const Int& value);
Int int_from_json(const nlohmann::json& j);

nlohmann::json chain_to_json(const ChainVector& v);
ChainVector chain_from_json(int degree, const nlohmann::json& j);

// Complex documents carry "basis" (id arrays per degree), "boundary" and
// "augmentation" keyed by id, and a "submonoid" field ("cone", or a hom
// descriptor embedding the source and target documents).
nlohmann::json complex_to_json(const AugmentedComplex& K);
AugmentedComplex complex_from_json(const nlohmann::json& j);

nlohmann::json cell_to_json(const Cell& x);
// throws ParseError on malformed documents, CellError on sequences that are
// not cells
Cell cell_from_json(const AugmentedComplex& K, const nlohmann::json& j);

} // namespace adc
