#include "cdx/element.hpp"

#include <span>
#include <string>

namespace cdx {

namespace {

void check_level(int level) {
    if (level < 0 || level > kMaxLevel)
        throw std::invalid_argument("level " + std::to_string(level) + " out of range [0, " +
                                    std::to_string(kMaxLevel) + "]");
}

void check_same_level(const Element& a, const Element& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("level mismatch: " + std::to_string(a.level()) + " vs " +
                                    std::to_string(b.level()) + " (use embed explicitly)");
}

using Span = std::span<const Scalar>;

std::vector<Scalar> conj_vec(Span a) {
    std::vector<Scalar> r(a.begin(), a.end());
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = -r[i];
    return r;
}

// (p1,p2)(q1,q2) = (p1 q1 - conj(q2) p2, q2 p1 + p2 conj(q1))
std::vector<Scalar> mul_vec(Span p, Span q) {
    const std::size_t n = p.size();
    if (n == 1) return {p[0] * q[0]};
    const std::size_t h = n / 2;
    Span p1 = p.first(h), p2 = p.subspan(h);
    Span q1 = q.first(h), q2 = q.subspan(h);
    std::vector<Scalar> cq1 = conj_vec(q1);
    std::vector<Scalar> cq2 = conj_vec(q2);

    std::vector<Scalar> first = mul_vec(p1, q1);
    std::vector<Scalar> t = mul_vec(cq2, p2);
    for (std::size_t i = 0; i < h; ++i) first[i] -= t[i];

    std::vector<Scalar> second = mul_vec(q2, p1);
    t = mul_vec(p2, cq1);
    for (std::size_t i = 0; i < h; ++i) second[i] += t[i];

    first.insert(first.end(), std::make_move_iterator(second.begin()),
                 std::make_move_iterator(second.end()));
    return first;
}

} // namespace

Element::Element(int level, std::vector<Scalar> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != (std::size_t{1} << level))
        throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) +
                                    " does not match level " + std::to_string(level));
}

Element Element::zero(int level) {
    check_level(level);
    return Element(level, std::vector<Scalar>(std::size_t{1} << level, Scalar(0)));
}

Element Element::basis(int level, int index) {
    check_level(level);
    if (index < 0 || index >= (1 << level))
        throw std::invalid_argument("basis index " + std::to_string(index) + " out of range at level " +
                                    std::to_string(level));
    std::vector<Scalar> c(std::size_t{1} << level, Scalar(0));
    c[static_cast<std::size_t>(index)] = 1;
    return Element(level, std::move(c));
}

bool Element::is_zero() const {
    for (const Scalar& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Element add(const Element& a, const Element& b) {
    check_same_level(a, b);
    std::vector<Scalar> c = a.coeffs();
    for (int i = 0; i < a.dim(); ++i) c[static_cast<std::size_t>(i)] += b[i];
    return Element(a.level(), std::move(c));
}

Element sub(const Element& a, const Element& b) {
    check_same_level(a, b);
    std::vector<Scalar> c = a.coeffs();
    for (int i = 0; i < a.dim(); ++i) c[static_cast<std::size_t>(i)] -= b[i];
    return Element(a.level(), std::move(c));
}

Element scale(const Scalar& c, const Element& a) {
    std::vector<Scalar> r = a.coeffs();
    for (Scalar& x : r) x *= c;
    return Element(a.level(), std::move(r));
}

Element neg(const Element& a) { return scale(Scalar(-1), a); }

Element mul(const Element& a, const Element& b) {
    check_same_level(a, b);
    return Element(a.level(), mul_vec(a.coeffs(), b.coeffs()));
}

Element conj(const Element& a) {
    // Recursively (x1,x2)- = (conj(x1), -x2), which unfolds to negating every
    // coefficient except the real one.
    return Element(a.level(), conj_vec(a.coeffs()));
}

Scalar trace(const Element& a) { return Scalar(2) * a[0]; }

Scalar inner(const Element& a, const Element& b) {
    check_same_level(a, b);
    Scalar s(0);
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Scalar norm_sq(const Element& a) { return inner(a, a); }

Element tilde(const Element& a) {
    if (a.level() < 1) throw std::invalid_argument("tilde needs level >= 1");
    const int h = a.dim() / 2;
    std::vector<Scalar> r(a.coeffs().size());
    for (int i = 0; i < h; ++i) {
        r[static_cast<std::size_t>(i)] = -a[h + i];
        r[static_cast<std::size_t>(h + i)] = a[i];
    }
    return Element(a.level(), std::move(r));
}

Element hat(const Element& a) {
    if (a.level() < 1) throw std::invalid_argument("hat needs level >= 1");
    const int h = a.dim() / 2;
    std::vector<Scalar> r(a.coeffs().size());
    for (int i = 0; i < h; ++i) {
        r[static_cast<std::size_t>(i)] = a[h + i];
        r[static_cast<std::size_t>(h + i)] = a[i];
    }
    return Element(a.level(), std::move(r));
}

Element associator(const Element& a, const Element& b, const Element& c) {
    return sub(mul(mul(a, b), c), mul(a, mul(b, c)));
}

Element make_double(const Element& a, const Element& b) {
    check_same_level(a, b);
    std::vector<Scalar> c = a.coeffs();
    c.insert(c.end(), b.coeffs().begin(), b.coeffs().end());
    return Element(a.level() + 1, std::move(c));
}

std::pair<Element, Element> split(const Element& a) {
    if (a.level() < 1) throw std::invalid_argument("split needs level >= 1");
    const int h = a.dim() / 2;
    std::vector<Scalar> lo(a.coeffs().begin(), a.coeffs().begin() + h);
    std::vector<Scalar> hi(a.coeffs().begin() + h, a.coeffs().end());
    return {Element(a.level() - 1, std::move(lo)), Element(a.level() - 1, std::move(hi))};
}

Element embed(const Element& a, int target_level) {
    check_level(target_level);
    if (target_level < a.level())
        throw std::invalid_argument("embed cannot shrink level " + std::to_string(a.level()) +
                                    " to " + std::to_string(target_level));
    std::vector<Scalar> c = a.coeffs();
    c.resize(std::size_t{1} << target_level, Scalar(0));
    return Element(target_level, std::move(c));
}

} // namespace cdx
