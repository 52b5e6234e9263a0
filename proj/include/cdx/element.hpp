#pragma once

#include "cdx/scalar.hpp"

#include <utility>
#include <vector>

namespace cdx {

/// Levels above this are refused (table memory and runtime guard).
inline constexpr int kMaxLevel = 10;

/// Immutable vector in the level-n doubled algebra A_n (dimension 2^n).
/// A_0 = R; A_{n+1} = A_n x A_n with product
///     (a,b)(x,y) = (ax - conj(y)b, ya + b conj(x))
/// and conjugation (a,b)- = (conj(a), -b). All arithmetic is exact.
class Element {
  public:
    Element(int level, std::vector<Scalar> coeffs);

    static Element zero(int level);
    static Element basis(int level, int index); ///< e_index, unit basis vector

    int level() const { return level_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }
    const Scalar& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const Element& o) const = default;

  private:
    int level_;
    std::vector<Scalar> coeffs_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
Element neg(const Element& a);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator*(const Scalar& c, const Element& a) { return scale(c, a); }

/// The doubled product, computed by the recursion above. This is the source
/// of truth for multiplication; the table route must agree with it.
Element mul(const Element& a, const Element& b);

Element conj(const Element& a);

/// t(x) = x + conj(x) as a scalar: twice the e_0 coefficient.
Scalar trace(const Element& a);

/// <a,b> = trace(a * conj(b)) / 2; equals the Euclidean dot product.
Scalar inner(const Element& a, const Element& b);

Scalar norm_sq(const Element& a);

/// x~ = (-x2, x1); equals x * e0~ where e0~ is the basis vector at index
/// 2^(n-1). Applying it twice negates. Defined for level >= 1.
Element tilde(const Element& a);

/// x^ = (x2, x1), the half-swap involution. Defined for level >= 1.
Element hat(const Element& a);

/// (a,b,c) = (ab)c - a(bc).
Element associator(const Element& a, const Element& b, const Element& c);

/// Pair (a,b) -> element of the next level. ("double" is taken by the core
/// language, hence the name.)
Element make_double(const Element& a, const Element& b);

/// Splits a level n>=1 element into its two level n-1 halves.
std::pair<Element, Element> split(const Element& a);

/// Zero-pads into A_m, m >= level. Mixed-level arithmetic is refused
/// everywhere else; this is the only coercion.
Element embed(const Element& a, int target_level);

} // namespace cdx
