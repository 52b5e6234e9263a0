#pragma once

#include "cdx/element.hpp"
#include "cdx/report.hpp"

#include <array>

namespace cdx {

/// Ordered pair (a,b) of same-level elements; the raw material for frame
/// predicates and zero-divisor work.
struct FramePair {
    Element a;
    Element b;

    FramePair(Element a_, Element b_);
    int level() const { return a.level(); }
};

bool is_pure(const Element& x);        ///< trace zero
bool is_doubly_pure(const Element& x); ///< pure with pure second half (level >= 2)

/// e_0~ of A_n, the basis vector at index 2^(n-1).
Element e0_tilde(int level);

/// The quaternion frame H_a = span{e0, a~, a, e0~} for a doubly pure unit a.
/// Rejects inputs whose norm is not exactly 1.
struct QuatBasis {
    std::array<Element, 4> vecs; ///< {e0, a~, a, e0~}
};
QuatBasis quat_basis(const Element& a);

/// All 16 products of the frame against the level-2 table under
/// e0 -> vecs[0], e1 -> vecs[1], e2 -> vecs[2], e3 -> vecs[3].
Report quat_table_check(const QuatBasis& q);

/// Orthogonal split b = c + d with c in H_a and d in H_a-perp.
/// Requires a doubly pure and nonzero (not necessarily unit).
struct HSplit {
    Element c;
    Element d;
};
HSplit project_H(const Element& a, const Element& b);

bool in_V(const FramePair& p);        ///< pure, unit, orthogonal
bool in_V_doubly(const FramePair& p); ///< as above with both doubly pure
bool in_W(const FramePair& p);        ///< V_doubly and b _|_ H_a (i.e. a~ _|_ b too)

/// H_n(a,b) = 2<a,b> - 2i<a~,b> for doubly pure a,b at level >= 3.
ComplexScalar hermitian(const Element& a, const Element& b);

/// eps = (e0~, 0) of A_{n+1} for pair level n >= 2: the basis vector at
/// index 2^(n-1) one level up.
Element epsilon(int pair_level);
Element epsilon_tilde(int pair_level);

/// True when alpha lies in H_eps-perp, i.e. both halves are doubly pure.
bool in_H_eps_perp(const Element& alpha);

/// The octonion frame O_alpha = {e0, eps~, eps, e0~, alpha~, alpha*eps,
/// eps~*alpha, alpha} for nonzero alpha in H_eps-perp at level >= 4.
/// Pairwise orthogonality of the eight vectors is re-verified exactly.
struct OctBasis {
    std::array<Element, 8> vecs;
};
OctBasis oct_basis(const Element& alpha);

enum class FrameVariant { V, V_doubly, W };

/// Exact rank of the Jacobian of the defining equations at p, with the
/// ambient coordinates restricted to the variant's subspace. Full rank (3,
/// 3, 4) certifies the expected manifold dimension at that point.
int constraint_jacobian_rank(const FramePair& p, FrameVariant variant);

/// Ambient dimension minus constraint count for a full-rank point.
int variant_dim(int level, FrameVariant variant);

} // namespace cdx
