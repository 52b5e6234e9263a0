#pragma once

#include "cdx/element.hpp"

#include <optional>
#include <vector>

namespace cdx {

using RatMatrix = std::vector<std::vector<Scalar>>;

/// Rank over the rationals, exact Gaussian elimination (no pivoting
/// heuristics needed; pivots are exact nonzero tests).
int rat_rank(RatMatrix m);

/// Rows = coefficient vectors of the elements (all must share a level).
RatMatrix rows_from_elements(const std::vector<Element>& es);

int span_rank(const std::vector<Element>& es);

/// Coefficients c with sum c_i basis_i = target, or nullopt when target is
/// outside the span. When the basis is linearly independent the coefficients
/// are unique.
std::optional<std::vector<Scalar>> express_in_span(const std::vector<Element>& basis,
                                                   const Element& target);

bool in_span(const std::vector<Element>& basis, const Element& target);

/// True when the two families span the same subspace.
bool same_span(const std::vector<Element>& a, const std::vector<Element>& b);

} // namespace cdx
