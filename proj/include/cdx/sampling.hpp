#pragma once

#include "cdx/element.hpp"
#include "cdx/rng.hpp"

#include <array>
#include <utility>

namespace cdx {

enum class Subspace {
    full,        ///< whole algebra
    pure,        ///< trace zero (no e_0 component)
    doubly_pure, ///< trace zero and no e_0~ component (both halves pure)
};

/// Exact rational point on the unit circle, built from Pythagorean triples so
/// r^2 + s^2 = 1 holds identically.
std::pair<Scalar, Scalar> unit_circle_point(Rng& rng);

/// Exact rational point on S^3 (product of circle points).
std::array<Scalar, 4> unit_sphere4_point(Rng& rng);

/// Generic rational vector, small numerators/denominators, possibly zero.
Element random_element(int level, Rng& rng, long max_num = 9, long max_den = 4);

Element random_nonzero(int level, Rng& rng, long max_num = 9, long max_den = 4);

/// Generic (not unit) vector constrained to the subspace.
Element random_in_subspace(int level, Subspace sub, Rng& rng, long max_num = 9, long max_den = 4);

/// Exact unit vector: a signed basis vector pushed through a chain of seeded
/// rational Givens rotations confined to the subspace's coordinates.
Element unit_vector(int level, Subspace sub, Rng& rng);

/// Exact orthonormal pair (same rotation chain applied to two distinct basis
/// vectors), confined to the subspace.
std::pair<Element, Element> orthonormal_pair(int level, Subspace sub, Rng& rng);

/// Exact orthonormal doubly pure pair (a,b) that additionally satisfies
/// a~ _|_ b: the rotation chain commutes with the tilde map (it only uses
/// rotations that are complex-linear for the structure i*x = x~), so the
/// extra orthogonality survives from the seed pair.
std::pair<Element, Element> w_compatible_pair(int level, Rng& rng);

} // namespace cdx
