#pragma once

#include "cdx/hopf_zero.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cdx {

/// Outcome of one float-mode minimization run over unit doubly pure pairs.
struct NumericSearchResult {
    double residual = 0.0; ///< final ||a*b|| (float route)
    std::vector<double> a;
    std::vector<double> b;
    int iterations = 0;
    std::uint64_t seed = 0;
    bool converged = false; ///< residual < tol
};

/// Alternating least-singular-vector descent on ||a*b||: freeze one side,
/// take the bottom right singular vector of the induced linear map on the
/// doubly pure subspace, swap sides, repeat. Deterministic per seed. At
/// levels <= 3 the maps are isometries, so the residual settles at 1; from
/// level 4 on the minimum is 0 and many seeds reach it.
NumericSearchResult search_numeric(int level, std::uint64_t seed, double tol = 1e-10,
                                   int max_iter = 500);

/// Tries to close a float pair into an exact certificate: rounds the
/// coordinates (and, since exact certificates live naturally at radius
/// sqrt(2), also the coordinates scaled by sqrt(2)) to denominators up to
/// max_den and re-verifies with the rational core. Returns the certificate
/// only when the product is exactly zero.
std::optional<ZeroDivisorCert> close_to_cert(const std::vector<double>& a,
                                             const std::vector<double>& b, int level,
                                             long max_den, std::uint64_t seed);

} // namespace cdx
