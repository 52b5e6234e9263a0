#include "cdx/actions.hpp"

#include "cdx/linalg.hpp"
#include "cdx/sampling.hpp"

#include <stdexcept>

namespace cdx {

CircleParam::CircleParam(Scalar r_, Scalar s_) : r(std::move(r_)), s(std::move(s_)) {
    if (r * r + s * s != 1) throw std::invalid_argument("circle parameter off the unit circle");
}

CircleParam CircleParam::random(Rng& rng) {
    auto [r, s] = unit_circle_point(rng);
    return {r, s};
}

CircleParam CircleParam::compose(const CircleParam& o) const {
    return {r * o.r - s * o.s, r * o.s + s * o.r};
}

TorusParam TorusParam::random(Rng& rng) {
    return {CircleParam::random(rng), CircleParam::random(rng)};
}

SphereParam::SphereParam(Scalar r_, Scalar s_, Scalar q_, Scalar p_)
    : r(std::move(r_)), s(std::move(s_)), q(std::move(q_)), p(std::move(p_)) {
    if (r * r + s * s + q * q + p * p != 1)
        throw std::invalid_argument("sphere parameter off the unit 3-sphere");
}

SphereParam SphereParam::random(Rng& rng) {
    auto v = unit_sphere4_point(rng);
    return {v[0], v[1], v[2], v[3]};
}

FramePair s1_act(const CircleParam& g, const FramePair& p, bool enforce) {
    if (enforce && !in_V(p)) throw std::invalid_argument("circle action needs a V member");
    return FramePair(g.r * p.a - g.s * p.b, g.s * p.a + g.r * p.b);
}

FramePair t2_act(const TorusParam& g, const FramePair& p, bool enforce) {
    if (enforce) {
        const bool zd_pair = is_doubly_pure(p.a) && is_doubly_pure(p.b) && !p.a.is_zero() &&
                             !p.b.is_zero() && mul(p.a, p.b).is_zero();
        if (!in_W(p) && !zd_pair)
            throw std::invalid_argument("torus action needs a W member or zero-divisor pair");
    }
    return FramePair(g.first.r * p.a + g.first.s * tilde(p.a),
                     g.second.r * p.b + g.second.s * tilde(p.b));
}

Element s3_act(const SphereParam& g, const Element& alpha) {
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("sphere action needs alpha in H_eps-perp");
    const int n = alpha.level() - 1;
    Element out = g.r * alpha;
    out = out + g.s * mul(alpha, epsilon_tilde(n));
    out = out + g.q * mul(alpha, epsilon(n));
    out = out + g.p * tilde(alpha);
    return out;
}

Element s3_act_coordinate_form(const SphereParam& g, const Element& alpha) {
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("sphere action needs alpha in H_eps-perp");
    auto [a, b] = split(alpha);
    const Element at = tilde(a), bt = tilde(b);
    return make_double(g.r * a - g.s * bt + g.q * at - g.p * b,
                       g.r * b - g.s * at - g.q * bt + g.p * a);
}

std::vector<Element> h_eps_basis(int pair_level) {
    return {Element::basis(pair_level + 1, 0), epsilon_tilde(pair_level), epsilon(pair_level),
            e0_tilde(pair_level + 1)};
}

namespace {

// coefficients (r,s,q,p) of u on {e0, eps~, eps, e0~}; rejects u outside
std::array<Scalar, 4> h_eps_coords(const Element& u) {
    const int n = u.level() - 1;
    const int dim = u.dim();
    const int i_eps = 1 << (n - 1);
    const int i_e0t = dim / 2;
    const int i_epst = i_e0t + i_eps;
    std::array<Scalar, 4> c = {u[0], u[i_epst], u[i_eps], u[i_e0t]};
    for (int i = 0; i < dim; ++i) {
        if (i == 0 || i == i_eps || i == i_e0t || i == i_epst) continue;
        if (u[i] != 0) throw std::invalid_argument("module scalar must lie in H_eps");
    }
    return c;
}

} // namespace

Element module_act(const Element& u, const Element& alpha) {
    if (u.level() != alpha.level())
        throw std::invalid_argument("module action needs a common level");
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("module action needs alpha in H_eps-perp");
    auto [r, s, q, p] = h_eps_coords(u);
    const int n = alpha.level() - 1;
    Element out = r * alpha;
    out = out + s * mul(alpha, epsilon_tilde(n));
    out = out + q * mul(alpha, epsilon(n));
    out = out + p * tilde(alpha);
    return out;
}

Report module_check(const Element& u, const Element& v, const Element& alpha) {
    Report rep;
    rep.suite = "module-check";
    rep.anchor = "left module axiom over H_eps";
    CheckResult& axiom = rep.add("u(v.alpha)=(uv).alpha");
    axiom.samples = 1;
    const Element lhs = module_act(u, module_act(v, alpha));
    const Element rhs = module_act(mul(u, v), alpha);
    if (!(lhs == rhs)) {
        axiom.passed = false;
        axiom.counterexample = {{"u", element_to_json(u)},
                                {"v", element_to_json(v)},
                                {"alpha", element_to_json(alpha)},
                                {"lhs", element_to_json(lhs)},
                                {"rhs", element_to_json(rhs)}};
    }
    return rep;
}

bool orbit_equiv_O(const Element& alpha, const Element& beta) {
    const OctBasis oa = oct_basis(alpha);
    const OctBasis ob = oct_basis(beta);
    std::vector<Element> stacked(oa.vecs.begin(), oa.vecs.end());
    stacked.insert(stacked.end(), ob.vecs.begin(), ob.vecs.end());
    // each frame is orthogonal hence rank 8; equality iff the union adds
    // no direction
    return span_rank(stacked) == 8;
}

Report s3_cap_T_check(const Element& alpha, const SphereParam& g) {
    Report rep;
    rep.suite = "s3-cap-t";
    rep.anchor = "sphere and torus actions meet in the circle";
    if (!in_H_eps_perp(alpha)) throw std::invalid_argument("needs alpha in H_eps-perp");
    auto [a, b] = split(alpha);
    const Element at = tilde(a), bt = tilde(b);
    if (rat_rank(rows_from_elements({a, at, b, bt})) != 4)
        throw std::invalid_argument("needs independent {a, a~, b, b~}");

    const Element image = s3_act(g, alpha);
    auto [y1, y2] = split(image);

    // Solve (u a + v a~, t b + m b~) = image exactly; a torus element can
    // reproduce the sphere image iff both halves solve with unit parameter
    // pairs.
    const Scalar na = norm_sq(a), nb = norm_sq(b);
    const Scalar u = inner(y1, a) / na, v = inner(y1, at) / na;
    const Scalar t = inner(y2, b) / nb, m = inner(y2, bt) / nb;
    const bool solves = (u * a + v * at == y1) && (t * b + m * bt == y2) &&
                        u * u + v * v == 1 && t * t + m * m == 1;

    const bool circle_case = g.s == 0 && g.p == 0;
    CheckResult& match = rep.add("torus-reachable-iff-circle-form");
    match.samples = 1;
    if (solves != circle_case) {
        match.passed = false;
        match.counterexample = {{"alpha", element_to_json(alpha)},
                                {"g", ordered_json::array({scalar_str(g.r), scalar_str(g.s),
                                                           scalar_str(g.q), scalar_str(g.p)})},
                                {"torus_reachable", solves}};
    }

    if (circle_case) {
        CheckResult& repro = rep.add("circle-form-matches-torus-pair");
        repro.samples = 1;
        TorusParam tg{CircleParam(g.r, g.q), CircleParam(g.r, -g.q)};
        FramePair timg = t2_act(tg, FramePair(a, b));
        if (!(make_double(timg.a, timg.b) == image)) {
            repro.passed = false;
            repro.counterexample = {{"alpha", element_to_json(alpha)},
                                    {"g", ordered_json::array({scalar_str(g.r), scalar_str(g.s),
                                                               scalar_str(g.q), scalar_str(g.p)})}};
        }
    }
    return rep;
}

} // namespace cdx
