#include "cdx/frames.hpp"

#include "cdx/basis_table.hpp"
#include "cdx/linalg.hpp"

#include <stdexcept>
#include <string>

namespace cdx {

FramePair::FramePair(Element a_, Element b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a.level() != b.level())
        throw std::invalid_argument("frame pair halves must share a level");
}

bool is_pure(const Element& x) { return x[0] == 0; }

bool is_doubly_pure(const Element& x) {
    if (x.level() < 1) throw std::invalid_argument("doubly pure needs level >= 1");
    return x[0] == 0 && x[x.dim() / 2] == 0;
}

Element e0_tilde(int level) {
    if (level < 1) throw std::invalid_argument("e0~ needs level >= 1");
    return Element::basis(level, (1 << level) / 2);
}

QuatBasis quat_basis(const Element& a) {
    if (a.level() < 2) throw std::invalid_argument("quaternion frame needs level >= 2");
    if (!is_doubly_pure(a)) throw std::invalid_argument("quaternion frame needs a doubly pure");
    if (norm_sq(a) != 1) throw std::invalid_argument("quaternion frame needs ||a|| = 1 exactly");
    return QuatBasis{{Element::basis(a.level(), 0), tilde(a), a, e0_tilde(a.level())}};
}

Report quat_table_check(const QuatBasis& q) {
    Report rep;
    rep.suite = "quat-table";
    rep.anchor = "quaternion frame table";
    CheckResult& cells = rep.add("cells-match-level-2-table");
    const BasisTable& t2 = table_for(2);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            ++cells.samples;
            TableEntry e = t2.entry(i, j);
            Element expect = scale(Scalar(e.sign), q.vecs[static_cast<std::size_t>(e.index)]);
            Element actual = mul(q.vecs[static_cast<std::size_t>(i)], q.vecs[static_cast<std::size_t>(j)]);
            if (!(actual == expect) && cells.passed) {
                cells.passed = false;
                cells.counterexample = {{"row", i},
                                        {"col", j},
                                        {"actual", element_to_json(actual)},
                                        {"expected", element_to_json(expect)}};
            }
        }
    }
    return rep;
}

HSplit project_H(const Element& a, const Element& b) {
    if (a.level() != b.level()) throw std::invalid_argument("projection needs a common level");
    if (!is_doubly_pure(a) || a.is_zero())
        throw std::invalid_argument("projection needs a doubly pure and nonzero");
    const Scalar na = norm_sq(a);
    Element c = Element::zero(a.level());
    // {e0, a~, a, e0~} is an orthogonal (not orthonormal) basis of H_a.
    const Element e0 = Element::basis(a.level(), 0);
    const Element et = e0_tilde(a.level());
    const Element at = tilde(a);
    c = c + inner(b, e0) * e0;
    c = c + (inner(b, at) / na) * at;
    c = c + (inner(b, a) / na) * a;
    c = c + inner(b, et) * et;
    return {c, b - c};
}

bool in_V(const FramePair& p) {
    return is_pure(p.a) && is_pure(p.b) && norm_sq(p.a) == 1 && norm_sq(p.b) == 1 &&
           inner(p.a, p.b) == 0;
}

bool in_V_doubly(const FramePair& p) {
    return is_doubly_pure(p.a) && is_doubly_pure(p.b) && norm_sq(p.a) == 1 &&
           norm_sq(p.b) == 1 && inner(p.a, p.b) == 0;
}

bool in_W(const FramePair& p) { return in_V_doubly(p) && inner(tilde(p.a), p.b) == 0; }

ComplexScalar hermitian(const Element& a, const Element& b) {
    if (a.level() != b.level() || a.level() < 3)
        throw std::invalid_argument("hermitian form needs a common level >= 3");
    if (!is_doubly_pure(a) || !is_doubly_pure(b))
        throw std::invalid_argument("hermitian form needs doubly pure arguments");
    return {Scalar(2) * inner(a, b), Scalar(-2) * inner(tilde(a), b)};
}

Element epsilon(int pair_level) {
    if (pair_level < 2 || pair_level + 1 > kMaxLevel)
        throw std::invalid_argument("epsilon needs pair level in [2, max-1]");
    return Element::basis(pair_level + 1, 1 << (pair_level - 1));
}

Element epsilon_tilde(int pair_level) { return tilde(epsilon(pair_level)); }

bool in_H_eps_perp(const Element& alpha) {
    if (alpha.level() < 3) return false;
    auto [a, b] = split(alpha);
    return is_doubly_pure(a) && is_doubly_pure(b);
}

OctBasis oct_basis(const Element& alpha) {
    if (alpha.level() < 4)
        throw std::invalid_argument("octonion frame needs level >= 4");
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("octonion frame needs alpha in H_eps-perp");
    if (alpha.is_zero()) throw std::invalid_argument("octonion frame needs alpha nonzero");
    const int n = alpha.level() - 1;
    const Element eps = epsilon(n);
    const Element eps_t = epsilon_tilde(n);
    OctBasis basis{{Element::basis(alpha.level(), 0), eps_t, eps, e0_tilde(alpha.level()),
                    tilde(alpha), mul(alpha, eps), mul(eps_t, alpha), alpha}};
    for (int i = 0; i < 8; ++i) {
        if (basis.vecs[static_cast<std::size_t>(i)].is_zero())
            throw std::runtime_error("octonion frame degenerated at slot " + std::to_string(i));
        for (int j = i + 1; j < 8; ++j)
            if (inner(basis.vecs[static_cast<std::size_t>(i)], basis.vecs[static_cast<std::size_t>(j)]) != 0)
                throw std::runtime_error("octonion frame lost orthogonality at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return basis;
}

namespace {

std::vector<int> ambient_coords(int level, FrameVariant variant) {
    const int dim = 1 << level;
    const int h = dim / 2;
    std::vector<int> idx;
    for (int i = 1; i < dim; ++i) {
        if (variant != FrameVariant::V && i == h) continue;
        idx.push_back(i);
    }
    return idx;
}

} // namespace

int constraint_jacobian_rank(const FramePair& p, FrameVariant variant) {
    bool member = variant == FrameVariant::V         ? in_V(p)
                  : variant == FrameVariant::V_doubly ? in_V_doubly(p)
                                                      : in_W(p);
    if (!member) throw std::invalid_argument("jacobian rank is only evaluated at member points");

    const std::vector<int> idx = ambient_coords(p.level(), variant);
    const std::size_t cols = idx.size();
    const Element at = tilde(p.a);

    RatMatrix m;
    // gradients of ||a||^2-1, ||b||^2-1, <a,b>, and for W also <a~,b>,
    // as rows over the restricted (a-block, b-block) coordinates.
    auto row = [&](auto&& fa, auto&& fb) {
        std::vector<Scalar> r(2 * cols, Scalar(0));
        for (std::size_t k = 0; k < cols; ++k) {
            r[k] = fa(idx[k]);
            r[cols + k] = fb(idx[k]);
        }
        m.push_back(std::move(r));
    };
    row([&](int i) { return Scalar(2) * p.a[i]; }, [](int) { return Scalar(0); });
    row([](int) { return Scalar(0); }, [&](int i) { return Scalar(2) * p.b[i]; });
    row([&](int i) { return p.b[i]; }, [&](int i) { return p.a[i]; });
    if (variant == FrameVariant::W) {
        const int h = p.a.dim() / 2;
        // d<a~,b>/da_k = <e_k~, b>; e_k~ = e_{k+h} for k < h, else -e_{k-h}.
        row([&](int i) { return i < h ? p.b[i + h] : -p.b[i - h]; },
            [&](int i) { return at[i]; });
    }
    return rat_rank(std::move(m));
}

int variant_dim(int level, FrameVariant variant) {
    const int dim = 1 << level;
    switch (variant) {
        case FrameVariant::V: return 2 * (dim - 1) - 3;
        case FrameVariant::V_doubly: return 2 * (dim - 2) - 3;
        case FrameVariant::W: return 2 * (dim - 2) - 4;
    }
    throw std::invalid_argument("unknown variant");
}

} // namespace cdx
