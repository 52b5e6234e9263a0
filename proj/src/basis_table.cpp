#include "cdx/basis_table.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cdx {

namespace {

// Levels whose construction check multiplies every basis pair through the
// full recursion. Above this the check goes through the previous table and
// the doubling cases, which pins the same property level by level.
constexpr int kDirectCheckMaxLevel = 3;

std::string cell(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

} // namespace

BasisTable::BasisTable(int level) : level_(level) {
    if (level < 0 || level > kMaxLevel)
        throw std::invalid_argument("table level " + std::to_string(level) + " out of range");
    dim_ = 1 << level;
    entries_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_));

    auto at = [&](int i, int j) -> TableEntry& {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(j)];
    };

    if (level == 0) {
        at(0, 0) = {0, 1};
        return;
    }

    // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
    // (e_i, 0)(0, e_b) = (0, e_b e_i)
    // (0, e_a)(e_j, 0) = (0, e_a conj(e_j))
    // (0, e_a)(0, e_b) = (-conj(e_b) e_a, 0)
    const BasisTable prev(level - 1);
    const int h = dim_ / 2;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            TableEntry e{};
            if (i < h && j < h) {
                TableEntry t = prev.entry(i, j);
                e = {t.index, t.sign};
            } else if (i < h) {
                TableEntry t = prev.entry(j - h, i);
                e = {static_cast<std::uint16_t>(h + t.index), t.sign};
            } else if (j < h) {
                TableEntry t = prev.entry(i - h, j);
                e = {static_cast<std::uint16_t>(h + t.index),
                     static_cast<std::int8_t>(j == 0 ? t.sign : -t.sign)};
            } else {
                TableEntry t = prev.entry(j - h, i - h);
                e = {t.index, static_cast<std::int8_t>(j == h ? -t.sign : t.sign)};
            }
            at(i, j) = e;
        }
    }

    // Structural facts forced by the product: target index is i xor j, rows 0
    // and columns 0 act as identity, squares are -e0, distinct imaginary
    // units anticommute.
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            TableEntry e = at(i, j);
            if (e.index != (i ^ j) || (e.sign != 1 && e.sign != -1))
                throw std::runtime_error("table construction broke at " + cell(i, j));
            if (i == 0 && (e.index != j || e.sign != 1))
                throw std::runtime_error("left identity broke at " + cell(i, j));
            if (j == 0 && (e.index != i || e.sign != 1))
                throw std::runtime_error("right identity broke at " + cell(i, j));
            if (i == j && i > 0 && (e.index != 0 || e.sign != -1))
                throw std::runtime_error("diagonal broke at " + cell(i, j));
            if (i != j && i > 0 && j > 0) {
                TableEntry f = at(j, i);
                if (f.index != e.index || f.sign != -e.sign)
                    throw std::runtime_error("anticommutativity broke at " + cell(i, j));
            }
        }
    }

    if (level <= kDirectCheckMaxLevel) {
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                Element p = mul(Element::basis(level, i), Element::basis(level, j));
                TableEntry e = at(i, j);
                Element expect = scale(Scalar(e.sign), Element::basis(level, e.index));
                if (!(p == expect))
                    throw std::runtime_error("table disagrees with product at " + cell(i, j));
            }
        }
    }
}

const BasisTable& table_for(int level) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BasisTable>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(level);
    if (it == cache.end())
        it = cache.emplace(level, std::make_unique<BasisTable>(level)).first;
    return *it->second;
}

Element mul_via_table(const Element& a, const Element& b) {
    if (a.level() != b.level())
        throw std::invalid_argument("level mismatch in table product");
    const BasisTable& t = table_for(a.level());
    std::vector<Scalar> c(static_cast<std::size_t>(a.dim()), Scalar(0));
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < b.dim(); ++j) {
            if (b[j] == 0) continue;
            TableEntry e = t.entry(i, j);
            if (e.sign > 0)
                c[e.index] += a[i] * b[j];
            else
                c[e.index] -= a[i] * b[j];
        }
    }
    return Element(a.level(), std::move(c));
}

} // namespace cdx
