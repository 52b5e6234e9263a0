#include "cdx/linalg.hpp"

#include <stdexcept>

namespace cdx {

int rat_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");

    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Scalar f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

RatMatrix rows_from_elements(const std::vector<Element>& es) {
    RatMatrix m;
    m.reserve(es.size());
    for (const Element& e : es) {
        if (!es.empty() && e.level() != es.front().level())
            throw std::invalid_argument("level mismatch in element family");
        m.push_back(e.coeffs());
    }
    return m;
}

int span_rank(const std::vector<Element>& es) { return rat_rank(rows_from_elements(es)); }

std::optional<std::vector<Scalar>> express_in_span(const std::vector<Element>& basis,
                                                   const Element& target) {
    if (basis.empty()) return target.is_zero() ? std::make_optional(std::vector<Scalar>{}) : std::nullopt;
    const std::size_t k = basis.size();
    const std::size_t n = static_cast<std::size_t>(target.dim());
    for (const Element& e : basis)
        if (e.level() != target.level()) throw std::invalid_argument("level mismatch in span solve");

    // Augmented system: columns are the basis vectors, last column the target.
    RatMatrix m(n, std::vector<Scalar>(k + 1, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][static_cast<int>(i)];
        m[i][k] = target[static_cast<int>(i)];
    }

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Scalar f = m[r][col] / m[row][col];
            for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (m[r][k] != 0) return std::nullopt; // inconsistent: target outside span

    std::vector<Scalar> coeffs(k, Scalar(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        std::size_t c = pivot_col_of_row[r];
        coeffs[c] = m[r][k] / m[r][c];
    }
    return coeffs;
}

bool in_span(const std::vector<Element>& basis, const Element& target) {
    return express_in_span(basis, target).has_value();
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
    RatMatrix ra = rows_from_elements(a);
    RatMatrix rb = rows_from_elements(b);
    int rank_a = rat_rank(ra);
    int rank_b = rat_rank(rb);
    if (rank_a != rank_b) return false;
    RatMatrix both = ra;
    both.insert(both.end(), rb.begin(), rb.end());
    return rat_rank(std::move(both)) == rank_a;
}

} // namespace cdx
