#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cdx {

/// Exact rational coefficient. Always kept in canonical lowest terms with a
/// positive denominator; arithmetic never rounds.
using Scalar = mpq_class;
using BigInt = mpz_class;

/// Builds p/q in canonical form. Throws std::invalid_argument when q == 0.
Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (arbitrary precision). Rejects empty input,
/// non-numeric garbage and zero denominators.
Scalar parse_scalar(const std::string& text);

/// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string scalar_str(const Scalar& x);

/// Exact square root when x is a perfect square of a rational, std::nullopt
/// otherwise. Only defined for x >= 0.
std::optional<Scalar> exact_sqrt(const Scalar& x);

/// Complex value over exact rationals, used for the Hermitian form.
struct ComplexScalar {
    Scalar re;
    Scalar im;

    bool operator==(const ComplexScalar& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// (-im, re), multiplication by i.
inline ComplexScalar times_i(const ComplexScalar& z) { return {-z.im, z.re}; }

inline ComplexScalar conj(const ComplexScalar& z) { return {z.re, -z.im}; }

} // namespace cdx
