#include "cdx/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace cdx {

namespace {

struct Triple {
    long p, q, h;
};

constexpr Triple kTriples[] = {
    {3, 4, 5},    {5, 12, 13},  {8, 15, 17},  {7, 24, 25},
    {20, 21, 29}, {9, 40, 41},  {12, 35, 37}, {11, 60, 61},
    {28, 45, 53}, {33, 56, 65}, {16, 63, 65}, {48, 55, 73},
};

std::pair<Scalar, Scalar> raw_circle_point(Rng& rng) {
    const Triple& t = kTriples[rng.below(std::size(kTriples))];
    Scalar r = make_scalar(t.p, t.h);
    Scalar s = make_scalar(t.q, t.h);
    if (rng.coin()) std::swap(r, s);
    if (rng.coin()) r = -r;
    if (rng.coin()) s = -s;
    return {r, s};
}

struct Givens {
    int i, j;
    Scalar r, s;
};

void rotate_coords(std::vector<Scalar>& v, const Givens& g) {
    Scalar vi = v[static_cast<std::size_t>(g.i)];
    Scalar vj = v[static_cast<std::size_t>(g.j)];
    v[static_cast<std::size_t>(g.i)] = g.r * vi - g.s * vj;
    v[static_cast<std::size_t>(g.j)] = g.s * vi + g.r * vj;
}

std::vector<int> allowed_indices(int level, Subspace sub) {
    const int dim = 1 << level;
    const int h = dim / 2;
    std::vector<int> idx;
    for (int i = 0; i < dim; ++i) {
        if (sub != Subspace::full && i == 0) continue;
        if (sub == Subspace::doubly_pure && i == h) continue;
        idx.push_back(i);
    }
    return idx;
}

int min_level(Subspace sub) {
    switch (sub) {
        case Subspace::full: return 0;
        case Subspace::pure: return 1;
        case Subspace::doubly_pure: return 2;
    }
    return 0;
}

std::vector<Givens> rotation_chain(const std::vector<int>& idx, Rng& rng) {
    std::vector<Givens> chain;
    if (idx.size() < 2) return chain;
    const std::size_t count = 2 * idx.size() + 4;
    for (std::size_t k = 0; k < count; ++k) {
        int i = idx[rng.below(idx.size())];
        int j = i;
        while (j == i) j = idx[rng.below(idx.size())];
        auto [r, s] = raw_circle_point(rng);
        chain.push_back({i, j, r, s});
    }
    return chain;
}

} // namespace

std::pair<Scalar, Scalar> unit_circle_point(Rng& rng) {
    // Compose two triple points for a denser set of angles.
    auto [r1, s1] = raw_circle_point(rng);
    auto [r2, s2] = raw_circle_point(rng);
    return {r1 * r2 - s1 * s2, r1 * s2 + s1 * r2};
}

std::array<Scalar, 4> unit_sphere4_point(Rng& rng) {
    auto [c, d] = unit_circle_point(rng);
    auto [r1, s1] = unit_circle_point(rng);
    auto [r2, s2] = unit_circle_point(rng);
    return {c * r1, c * s1, d * r2, d * s2};
}

Element random_element(int level, Rng& rng, long max_num, long max_den) {
    const int dim = 1 << level;
    std::vector<Scalar> c(static_cast<std::size_t>(dim));
    for (auto& x : c) x = make_scalar(rng.range(-max_num, max_num), rng.range(1, max_den));
    return Element(level, std::move(c));
}

Element random_nonzero(int level, Rng& rng, long max_num, long max_den) {
    for (;;) {
        Element e = random_element(level, rng, max_num, max_den);
        if (!e.is_zero()) return e;
    }
}

Element random_in_subspace(int level, Subspace sub, Rng& rng, long max_num, long max_den) {
    if (level < min_level(sub)) throw std::invalid_argument("level too small for subspace sampling");
    const int dim = 1 << level;
    const int h = dim / 2;
    for (;;) {
        Element e = random_element(level, rng, max_num, max_den);
        std::vector<Scalar> c = e.coeffs();
        if (sub != Subspace::full) c[0] = 0;
        if (sub == Subspace::doubly_pure) c[static_cast<std::size_t>(h)] = 0;
        Element out(level, std::move(c));
        if (!out.is_zero()) return out;
    }
}

Element unit_vector(int level, Subspace sub, Rng& rng) {
    if (level < min_level(sub)) throw std::invalid_argument("level too small for subspace sampling");
    std::vector<int> idx = allowed_indices(level, sub);
    std::vector<Scalar> v(std::size_t{1} << level, Scalar(0));
    v[static_cast<std::size_t>(idx[rng.below(idx.size())])] = rng.coin() ? 1 : -1;
    for (const Givens& g : rotation_chain(idx, rng)) rotate_coords(v, g);
    return Element(level, std::move(v));
}

std::pair<Element, Element> orthonormal_pair(int level, Subspace sub, Rng& rng) {
    if (level < min_level(sub)) throw std::invalid_argument("level too small for subspace sampling");
    std::vector<int> idx = allowed_indices(level, sub);
    if (idx.size() < 2) throw std::invalid_argument("subspace too small for a pair");
    int i = idx[rng.below(idx.size())];
    int j = i;
    while (j == i) j = idx[rng.below(idx.size())];

    std::vector<Scalar> a(std::size_t{1} << level, Scalar(0));
    std::vector<Scalar> b(std::size_t{1} << level, Scalar(0));
    a[static_cast<std::size_t>(i)] = rng.coin() ? 1 : -1;
    b[static_cast<std::size_t>(j)] = rng.coin() ? 1 : -1;
    for (const Givens& g : rotation_chain(idx, rng)) {
        rotate_coords(a, g);
        rotate_coords(b, g);
    }
    return {Element(level, std::move(a)), Element(level, std::move(b))};
}

std::pair<Element, Element> w_compatible_pair(int level, Rng& rng) {
    if (level < 3)
        throw std::invalid_argument("pairs with the tilde-orthogonality constraint need level >= 3");
    const int dim = 1 << level;
    const int h = dim / 2;

    // Complex lines of the doubly pure subspace: span{e_k, e_{k+h}},
    // 1 <= k < h, with i*e_k = e_{k+h}.
    std::vector<int> lines;
    for (int k = 1; k < h; ++k) lines.push_back(k);

    int la = lines[rng.below(lines.size())];
    int lb = la;
    while (lb == la) lb = lines[rng.below(lines.size())];

    std::vector<Scalar> a(static_cast<std::size_t>(dim), Scalar(0));
    std::vector<Scalar> b(static_cast<std::size_t>(dim), Scalar(0));
    a[static_cast<std::size_t>(la)] = rng.coin() ? 1 : -1;
    b[static_cast<std::size_t>(lb)] = rng.coin() ? 1 : -1;

    const std::size_t count = 2 * lines.size() + 6;
    for (std::size_t step = 0; step < count; ++step) {
        if (rng.coin()) {
            // Phase rotation on one line: multiply by an exact unit complex
            // number. Commutes with every other line.
            int k = lines[rng.below(lines.size())];
            auto [r, s] = raw_circle_point(rng);
            Givens g{k, k + h, r, s};
            rotate_coords(a, g);
            rotate_coords(b, g);
        } else {
            // Plane rotation mixing two lines, applied to both halves of each
            // line so it commutes with the tilde map.
            int k = lines[rng.below(lines.size())];
            int l = k;
            while (l == k) l = lines[rng.below(lines.size())];
            auto [r, s] = raw_circle_point(rng);
            Givens g1{k, l, r, s};
            Givens g2{k + h, l + h, r, s};
            rotate_coords(a, g1);
            rotate_coords(a, g2);
            rotate_coords(b, g1);
            rotate_coords(b, g2);
        }
    }
    return {Element(level, std::move(a)), Element(level, std::move(b))};
}

} // namespace cdx
