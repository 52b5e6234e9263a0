#pragma once

#include "cdx/frames.hpp"
#include "cdx/report.hpp"
#include "cdx/rng.hpp"

#include <vector>

namespace cdx {

/// (r,s) with r^2 + s^2 = 1 exactly; construction rejects anything else.
struct CircleParam {
    Scalar r, s;
    CircleParam(Scalar r_, Scalar s_);

    static CircleParam identity() { return {Scalar(1), Scalar(0)}; }
    static CircleParam random(Rng& rng);
    CircleParam compose(const CircleParam& o) const; ///< angle addition
    bool is_identity() const { return r == 1 && s == 0; }
};

struct TorusParam {
    CircleParam first, second;
    static TorusParam identity() { return {CircleParam::identity(), CircleParam::identity()}; }
    static TorusParam random(Rng& rng);
    bool is_identity() const { return first.is_identity() && second.is_identity(); }
};

/// (r,s,q,p) on the unit 3-sphere, exact.
struct SphereParam {
    Scalar r, s, q, p;
    SphereParam(Scalar r_, Scalar s_, Scalar q_, Scalar p_);

    static SphereParam identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}; }
    static SphereParam random(Rng& rng);
    bool is_identity() const { return r == 1 && s == 0 && q == 0 && p == 0; }
};

/// g.(a,b) = (ra - sb, sa + rb); rotates the frame, preserves V and W.
/// With enforce set, rejects pairs outside V.
FramePair s1_act(const CircleParam& g, const FramePair& p, bool enforce = false);

/// g.(a,b) = (r1 a + s1 a~, r2 b + q2 b~); preserves W and zero products.
/// With enforce set, rejects pairs that are neither W members nor
/// zero-divisor pairs with doubly pure halves.
FramePair t2_act(const TorusParam& g, const FramePair& p, bool enforce = false);

/// alpha.g = r alpha + s alpha eps~ + q alpha eps + p alpha~ for alpha in
/// H_eps-perp (rejected otherwise). Norm preserving, stays in H_eps-perp.
Element s3_act(const SphereParam& g, const Element& alpha);

/// The same action spelled out on the halves:
/// (ra - s b~ + q a~ - pb, rb - s a~ - q b~ + pa). Kept as an independent
/// route so tests can hold the two against each other.
Element s3_act_coordinate_form(const SphereParam& g, const Element& alpha);

/// {e0, eps~, eps, e0~} of A_{pair_level+1}.
std::vector<Element> h_eps_basis(int pair_level);

/// The dot action u.alpha = r alpha + s alpha eps~ + q alpha eps + p alpha~
/// for u = r e0 + s eps~ + q eps + p e0~. u must lie in span{e0, eps~, eps,
/// e0~} exactly.
Element module_act(const Element& u, const Element& alpha);

/// Verifies u.(v.alpha) = (uv).alpha for the given u, v.
Report module_check(const Element& u, const Element& v, const Element& alpha);

/// True when span(O_alpha) = span(O_beta) as 8-dimensional subspaces
/// (exact rank test on the stacked 16-vector family).
bool orbit_equiv_O(const Element& alpha, const Element& beta);

/// Compares the sphere action at g with the torus action: when g = (r,0,q,0)
/// the torus pair ((r,q),(r,-q)) must reproduce it, and when s or p is
/// nonzero no torus parameters can (decided by an exact linear solvability
/// test on the halves). alpha needs independent {a, a~, b, b~}.
Report s3_cap_T_check(const Element& alpha, const SphereParam& g);

} // namespace cdx
