#pragma once

#include "cdx/element.hpp"

#include "json.hpp"

namespace cdx {

/// Insertion-ordered JSON everywhere: report bytes must be reproducible, so
/// key order is fixed by construction order, never by hashing.
using ordered_json = nlohmann::ordered_json;

/// {"level": n, "coeffs": ["p/q", ...]} with coefficients in canonical
/// lowest terms.
ordered_json element_to_json(const Element& e);
Element element_from_json(const ordered_json& j);

ordered_json coeffs_to_json(const Element& e); ///< bare coefficient array
std::vector<Scalar> coeffs_from_json(const ordered_json& j);

} // namespace cdx
