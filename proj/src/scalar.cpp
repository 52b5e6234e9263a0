#include "cdx/scalar.hpp"

namespace cdx {

Scalar make_scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Scalar s;
    if (s.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (s.get_den() == 0)
        throw std::invalid_argument("rational literal with zero denominator: '" + text + "'");
    s.canonicalize();
    return s;
}

std::string scalar_str(const Scalar& x) { return x.get_str(); }

std::optional<Scalar> exact_sqrt(const Scalar& x) {
    if (x < 0) throw std::invalid_argument("exact_sqrt of negative value");
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Scalar r(rn, rd);
    r.canonicalize();
    return r;
}

} // namespace cdx
