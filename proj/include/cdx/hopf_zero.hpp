#pragma once

#include "cdx/frames.hpp"
#include "cdx/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cdx {

/// F(x,y) = (2xy, ||y||^2 - ||x||^2); the second slot is a scalar, kept
/// separate instead of being squeezed into a larger vector.
struct HopfValue {
    Element first;
    Scalar second;
};
HopfValue hopf(const Element& x, const Element& y);

/// ||F(x,y)||^2, for the norm identity (||x||^2 + ||y||^2)^2 at levels <= 3.
Scalar hopf_norm_sq(const HopfValue& v);

/// Membership in X at radius r: both halves nonzero with ||.||^2 equal to
/// radius_sq and an exactly zero product. Radius enters squared so the test
/// stays rational (unit-radius certificates would need sqrt(2) coordinates).
bool in_Xr(const FramePair& p, const Scalar& radius_sq);

/// Scales both halves by `factor`, moving X^r to X^{|factor| r}.
FramePair rescale_X(const FramePair& p, const Scalar& factor);

/// Divides each half by its exact norm. Errors when a norm has no rational
/// square root; such pairs should stay at their natural radius via in_Xr.
FramePair normalize_to_X(const FramePair& p);

/// A zero-divisor pair together with everything re-derived at construction:
/// nonzero halves, exactly zero product (by the recursive product), both
/// halves doubly pure, b _|_ H_a, and the combination products
/// a~b = ab~ = a~b~ = 0. Construction throws when any fact fails.
class ZeroDivisorCert {
  public:
    ZeroDivisorCert(FramePair pair, std::uint64_t seed, std::string method, int support);

    const FramePair& pair() const { return pair_; }
    const Element& residual() const { return residual_; }
    const Scalar& norm_sq_a() const { return nsq_a_; }
    const Scalar& norm_sq_b() const { return nsq_b_; }
    std::uint64_t seed() const { return seed_; }
    const std::string& method() const { return method_; }
    int support() const { return support_; }

  private:
    FramePair pair_;
    Element residual_;
    Scalar nsq_a_, nsq_b_;
    std::uint64_t seed_;
    std::string method_;
    int support_;
};

/// {"level", "a", "b", "residual", "seed", "method"}; halves as rational
/// coefficient arrays.
ordered_json cert_to_json(const ZeroDivisorCert& c);
/// Rebuilds and re-verifies; throws on any violated fact.
ZeroDivisorCert cert_from_json(const ordered_json& j);

/// Enumerates pairs of signed basis combinations with `support` terms per
/// side (indices strictly increasing, leading sign positive, so each
/// candidate appears once) and keeps those whose product is exactly zero.
/// Deterministic order; the seed is recorded for provenance only.
std::vector<ZeroDivisorCert> search_exhaustive(int level, int support, std::uint64_t seed);

/// E membership: alpha in H_eps-perp with (alpha, alpha, eps) = 0.
/// Errors when alpha is not in H_eps-perp.
bool in_E(const Element& alpha);

/// Complex-collinearity: a = 0 or b in span{a, a~}. Halves must be doubly
/// pure.
bool in_P(const FramePair& halves);

/// w(a,b) = (a, e0~, b), the associator obstruction. Doubly pure inputs.
Element w_map(const Element& a, const Element& b);

/// For alpha = (a,b) in E minus P: splits b = c + d against H_a and returns
/// (a, d), which is verified to be a zero-divisor pair. Errors on P members
/// and on elements outside E.
FramePair retract(const Element& alpha);
FramePair retract(const FramePair& halves);

} // namespace cdx
