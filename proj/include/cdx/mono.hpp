#pragma once

#include "cdx/frames.hpp"
#include "cdx/report.hpp"

#include <utility>
#include <vector>

namespace cdx {

/// Linear map between algebra levels, stored by columns: cols[j] is the
/// image of e_j. Exact rational entries.
struct LinearMap {
    int domain_level;
    int codomain_level;
    std::vector<Element> cols;

    LinearMap(int domain_level_, int codomain_level_, std::vector<Element> cols_);

    Element apply(const Element& x) const;

    ordered_json to_json() const; ///< column-major rational matrix
    static LinearMap from_json(const ordered_json& j);
};

/// Checks unital + multiplicative on every domain basis pair + injective
/// (exact rank), and that the columns form an orthonormal family, which
/// makes the map an isometry onto its image.
Report is_monomorphism(const LinearMap& m);

/// A_1 -> A_n, e0 -> e0, e1 -> w, for a pure unit w.
LinearMap phi_w(const Element& w);

struct AlternationFlag {
    bool alternates = false; ///< (a,a,b) = 0
    bool strong = false;     ///< additionally (a,b,b) = 0
};
AlternationFlag alternation(const Element& a, const Element& b);

/// A_2 -> A_n from an orthonormal pure pair: e0,e1,e2,e3 -> e0,a,b,ab.
/// Requires V membership and strong alternation.
LinearMap pair_to_quat_mono(const FramePair& p);

/// A_3 -> A_{n+1} on the octonion frame of alpha:
/// e0..e7 -> e0, eps~, eps, e0~, alpha~, alpha eps, eps~ alpha, alpha.
/// Requires ||alpha|| = 1 exactly and alpha in H_eps-perp.
LinearMap oct_mono_from_alpha(const Element& alpha);

/// All 64 frame products compared against (a) the level-3 table transported
/// through the frame (with the forced ||alpha||^2 scaling on cells whose
/// factors both carry alpha) and (b) the printed reference table for this
/// frame; every cell where the reference disagrees with computation is
/// recorded. Works at any radius.
Report oct_table_audit(const Element& alpha);

/// The cell positions where the printed reference table is known to
/// disagree with computation (it contradicts the tilde product rule its own
/// source states); exposed so callers can assert the discrepancy set
/// exactly.
std::vector<std::pair<int, int>> printed_table_known_mismatches();

/// Five equivalent zero-divisor conditions evaluated on one pair:
/// product of the halves is zero; the eps associator vanishes; the
/// quaternion span {e0, alpha, eps, alpha eps} closes with the right table;
/// the octonion frame closes with the right table; alpha * hat(alpha) = 0.
/// The equivalence predicts an all-true or all-false vector.
struct EquivalenceAudit {
    bool halves_product_zero = false;
    bool assoc_eps_zero = false;
    bool quat_span_ok = false;
    bool oct_frame_ok = false;
    bool alpha_hat_zero = false;

    bool all_true() const;
    bool all_false() const;
    bool consistent() const { return all_true() || all_false(); }
};

/// Requires equal-norm nonzero doubly pure halves with a _|_ b and
/// a~ _|_ b (any radius).
EquivalenceAudit theorem_audit(const FramePair& halves);

/// alpha (alpha eps) = -||alpha||^2 eps + 2 (0, (ba)~): the product identity
/// that powers the equivalences, for pairs meeting theorem_audit's
/// preconditions.
bool bridge_identity_holds(const FramePair& halves);

/// (alpha, alpha, eps) = (0, -(a, e0~, b)) for alpha = (a,b) in H_eps-perp.
bool assoc_reduction_holds(const Element& alpha);

} // namespace cdx
