#include "cdx/hopf_zero.hpp"

#include "cdx/basis_table.hpp"
#include "cdx/linalg.hpp"

#include <stdexcept>

namespace cdx {

HopfValue hopf(const Element& x, const Element& y) {
    if (x.level() != y.level()) throw std::invalid_argument("hopf needs a common level");
    return {scale(Scalar(2), mul(x, y)), norm_sq(y) - norm_sq(x)};
}

Scalar hopf_norm_sq(const HopfValue& v) { return norm_sq(v.first) + v.second * v.second; }

bool in_Xr(const FramePair& p, const Scalar& radius_sq) {
    if (radius_sq <= 0) throw std::invalid_argument("radius^2 must be positive");
    return !p.a.is_zero() && !p.b.is_zero() && norm_sq(p.a) == radius_sq &&
           norm_sq(p.b) == radius_sq && mul(p.a, p.b).is_zero();
}

FramePair rescale_X(const FramePair& p, const Scalar& factor) {
    if (factor == 0) throw std::invalid_argument("rescale factor must be nonzero");
    return FramePair(factor * p.a, factor * p.b);
}

FramePair normalize_to_X(const FramePair& p) {
    if (p.a.is_zero() || p.b.is_zero() || !mul(p.a, p.b).is_zero())
        throw std::invalid_argument("normalize_to_X needs a zero-divisor pair with nonzero halves");
    auto na = exact_sqrt(norm_sq(p.a));
    auto nb = exact_sqrt(norm_sq(p.b));
    if (!na || !nb)
        throw std::invalid_argument(
            "pair norms have no exact rational square root; keep the pair at its natural "
            "radius and test with in_Xr instead");
    return FramePair(scale(1 / *na, p.a), scale(1 / *nb, p.b));
}

ZeroDivisorCert::ZeroDivisorCert(FramePair pair, std::uint64_t seed, std::string method, int support)
    : pair_(std::move(pair)),
      residual_(mul(pair_.a, pair_.b)),
      nsq_a_(norm_sq(pair_.a)),
      nsq_b_(norm_sq(pair_.b)),
      seed_(seed),
      method_(std::move(method)),
      support_(support) {
    const Element& a = pair_.a;
    const Element& b = pair_.b;
    if (a.is_zero() || b.is_zero()) throw std::runtime_error("certificate with a zero half");
    if (!residual_.is_zero()) throw std::runtime_error("certificate product is not zero");
    if (!is_doubly_pure(a) || !is_doubly_pure(b))
        throw std::runtime_error("certificate halves must come out doubly pure");
    if (inner(b, a) != 0 || inner(b, tilde(a)) != 0)
        throw std::runtime_error("certificate violates b _|_ H_a");
    const Element at = tilde(a), bt = tilde(b);
    if (!mul(at, b).is_zero() || !mul(a, bt).is_zero() || !mul(at, bt).is_zero())
        throw std::runtime_error("certificate violates the tilde combination products");
}

ordered_json cert_to_json(const ZeroDivisorCert& c) {
    ordered_json j;
    j["level"] = c.pair().level();
    j["a"] = coeffs_to_json(c.pair().a);
    j["b"] = coeffs_to_json(c.pair().b);
    j["residual"] = "0";
    j["seed"] = c.seed();
    j["method"] = c.method();
    return j;
}

ZeroDivisorCert cert_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument("certificate JSON needs {level, a, b}");
    const int level = j["level"].get<int>();
    FramePair p(Element(level, coeffs_from_json(j["a"])), Element(level, coeffs_from_json(j["b"])));
    std::uint64_t seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
    std::string method = j.contains("method") ? j["method"].get<std::string>() : "unknown";
    int support = j.contains("support") ? j["support"].get<int>() : 0;
    return ZeroDivisorCert(std::move(p), seed, method, support);
}

namespace {

struct Candidate {
    std::vector<int> idx;
    std::vector<int> sign; ///< first entry always +1
};

std::vector<Candidate> signed_combinations(int dim, int support) {
    std::vector<Candidate> out;
    std::vector<int> idx(static_cast<std::size_t>(support));
    // strictly increasing index tuples
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == support) {
            const int patterns = 1 << (support - 1);
            for (int mask = 0; mask < patterns; ++mask) {
                Candidate c;
                c.idx = idx;
                c.sign.assign(static_cast<std::size_t>(support), 1);
                for (int t = 1; t < support; ++t)
                    if (mask & (1 << (t - 1))) c.sign[static_cast<std::size_t>(t)] = -1;
                out.push_back(std::move(c));
            }
            return;
        }
        for (int i = start; i < dim; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Element candidate_element(int level, const Candidate& c) {
    std::vector<Scalar> v(std::size_t{1} << level, Scalar(0));
    for (std::size_t t = 0; t < c.idx.size(); ++t)
        v[static_cast<std::size_t>(c.idx[t])] = c.sign[t];
    return Element(level, std::move(v));
}

} // namespace

std::vector<ZeroDivisorCert> search_exhaustive(int level, int support, std::uint64_t seed) {
    if (level < 1 || level > kMaxLevel) throw std::invalid_argument("search level out of range");
    if (support < 1 || support > 4)
        throw std::invalid_argument("support must be between 1 and 4 terms per side");

    const BasisTable& table = table_for(level);
    const int dim = 1 << level;
    const std::vector<Candidate> cands = signed_combinations(dim, support);

    std::vector<ZeroDivisorCert> certs;
    std::vector<int> acc(static_cast<std::size_t>(dim), 0);
    for (const Candidate& ca : cands) {
        for (const Candidate& cb : cands) {
            // integer fast path through the sign table; exact because every
            // partial product is a signed basis vector
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t s = 0; s < ca.idx.size(); ++s) {
                for (std::size_t t = 0; t < cb.idx.size(); ++t) {
                    TableEntry e = table.entry(ca.idx[s], cb.idx[t]);
                    acc[e.index] += ca.sign[s] * cb.sign[t] * e.sign;
                }
            }
            bool zero = true;
            for (int v : acc)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (!zero) continue;
            // re-verified with the recursive product inside the constructor
            certs.emplace_back(FramePair(candidate_element(level, ca), candidate_element(level, cb)),
                               seed, "exhaustive", support);
        }
    }
    return certs;
}

bool in_E(const Element& alpha) {
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("E membership is only defined inside H_eps-perp");
    return associator(alpha, alpha, epsilon(alpha.level() - 1)).is_zero();
}

bool in_P(const FramePair& halves) {
    if (!is_doubly_pure(halves.a) || !is_doubly_pure(halves.b))
        throw std::invalid_argument("P membership needs doubly pure halves");
    if (halves.a.is_zero()) return true;
    return rat_rank(rows_from_elements({halves.a, tilde(halves.a), halves.b})) <= 2;
}

Element w_map(const Element& a, const Element& b) {
    if (a.level() != b.level()) throw std::invalid_argument("w needs a common level");
    if (!is_doubly_pure(a) || !is_doubly_pure(b))
        throw std::invalid_argument("w needs doubly pure arguments");
    return associator(a, e0_tilde(a.level()), b);
}

FramePair retract(const FramePair& halves) {
    if (!is_doubly_pure(halves.a) || !is_doubly_pure(halves.b))
        throw std::invalid_argument("retraction needs doubly pure halves");
    if (in_P(halves))
        throw std::invalid_argument("retraction is undefined on complex-collinear pairs");
    if (!w_map(halves.a, halves.b).is_zero())
        throw std::invalid_argument("retraction needs the associator obstruction to vanish");
    HSplit s = project_H(halves.a, halves.b);
    FramePair out(halves.a, s.d);
    if (out.b.is_zero() || !mul(out.a, out.b).is_zero())
        throw std::runtime_error("retraction failed to land on a zero-divisor pair");
    return out;
}

FramePair retract(const Element& alpha) {
    if (!in_H_eps_perp(alpha))
        throw std::invalid_argument("retraction needs alpha in H_eps-perp");
    auto [a, b] = split(alpha);
    return retract(FramePair(std::move(a), std::move(b)));
}

} // namespace cdx
