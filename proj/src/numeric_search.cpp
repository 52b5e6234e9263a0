#include "cdx/numeric_search.hpp"

#include "cdx/basis_table.hpp"
#include "cdx/rng.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace cdx {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<int> doubly_pure_indices(int dim) {
    std::vector<int> idx;
    for (int i = 1; i < dim; ++i)
        if (i != dim / 2) idx.push_back(i);
    return idx;
}

VectorXd float_mul(const BasisTable& t, const VectorXd& a, const VectorXd& b) {
    VectorXd c = VectorXd::Zero(a.size());
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            TableEntry e = t.entry(i, j);
            c[e.index] += e.sign * a[i] * b[j];
        }
    }
    return c;
}

// bottom right singular vector and value
std::pair<VectorXd, double> least_singular(const MatrixXd& m) {
    Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    return {svd.matrixV().col(sv.size() - 1), sv[sv.size() - 1]};
}

VectorXd expand(const VectorXd& reduced, const std::vector<int>& idx, int dim) {
    VectorXd full = VectorXd::Zero(dim);
    for (std::size_t k = 0; k < idx.size(); ++k) full[idx[k]] = reduced[static_cast<int>(k)];
    return full;
}

} // namespace

NumericSearchResult search_numeric(int level, std::uint64_t seed, double tol, int max_iter) {
    if (level < 2 || level > kMaxLevel) throw std::invalid_argument("numeric search level out of range");
    const BasisTable& table = table_for(level);
    const int dim = 1 << level;
    const std::vector<int> idx = doubly_pure_indices(dim);
    const int red = static_cast<int>(idx.size());

    Rng rng(seed);
    VectorXd a = VectorXd::Zero(dim);
    for (int k : idx) a[k] = rng.real() * 2.0 - 1.0;
    a.normalize();

    VectorXd b = VectorXd::Zero(dim);
    NumericSearchResult res;
    res.seed = seed;

    double residual = 1.0;
    int iters_done = 0;
    for (int it = 0; it < max_iter; ++it) {
        iters_done = it + 1;
        // columns of x -> a*x over the doubly pure coordinates
        MatrixXd la(dim, red);
        for (int c = 0; c < red; ++c) {
            VectorXd col = VectorXd::Zero(dim);
            for (int i = 0; i < dim; ++i) {
                if (a[i] == 0.0) continue;
                TableEntry e = table.entry(i, idx[static_cast<std::size_t>(c)]);
                col[e.index] += e.sign * a[i];
            }
            la.col(c) = col;
        }
        auto [vb, sb] = least_singular(la);
        b = expand(vb, idx, dim);
        residual = sb;
        if (residual < tol) break;

        // columns of x -> x*b
        MatrixXd rb(dim, red);
        for (int c = 0; c < red; ++c) {
            VectorXd col = VectorXd::Zero(dim);
            for (int j = 0; j < dim; ++j) {
                if (b[j] == 0.0) continue;
                TableEntry e = table.entry(idx[static_cast<std::size_t>(c)], j);
                col[e.index] += e.sign * b[j];
            }
            rb.col(c) = col;
        }
        auto [va, sa] = least_singular(rb);
        a = expand(va, idx, dim);
        residual = sa;
        if (residual < tol) break;
    }

    res.iterations = iters_done;
    res.residual = float_mul(table, a, b).norm();
    res.converged = res.residual < tol;
    res.a.assign(a.data(), a.data() + dim);
    res.b.assign(b.data(), b.data() + dim);
    return res;
}

namespace {

Scalar round_to_rational(double x, long max_den) {
    long best_num = 0, best_den = 1;
    double best_err = std::abs(x);
    for (long den = 1; den <= max_den; ++den) {
        long num = std::lround(x * static_cast<double>(den));
        double err = std::abs(x - static_cast<double>(num) / static_cast<double>(den));
        if (err < best_err - 1e-15) {
            best_err = err;
            best_num = num;
            best_den = den;
        }
    }
    return make_scalar(best_num, best_den);
}

std::optional<ZeroDivisorCert> try_close(const std::vector<double>& a, const std::vector<double>& b,
                                         int level, long max_den, std::uint64_t seed, double factor) {
    std::vector<Scalar> ca, cb;
    ca.reserve(a.size());
    cb.reserve(b.size());
    for (double x : a) ca.push_back(round_to_rational(x * factor, max_den));
    for (double x : b) cb.push_back(round_to_rational(x * factor, max_den));
    try {
        return ZeroDivisorCert(FramePair(Element(level, std::move(ca)), Element(level, std::move(cb))),
                               seed, "numeric", 0);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

std::optional<ZeroDivisorCert> close_to_cert(const std::vector<double>& a,
                                             const std::vector<double>& b, int level,
                                             long max_den, std::uint64_t seed) {
    if (a.size() != (std::size_t{1} << level) || b.size() != a.size())
        throw std::invalid_argument("float pair size does not match level");
    if (auto c = try_close(a, b, level, max_den, seed, 1.0)) return c;
    return try_close(a, b, level, max_den, seed, std::sqrt(2.0));
}

} // namespace cdx
