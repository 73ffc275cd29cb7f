#pragma once

#include "orw/coloring.hpp"
#include "orw/enumeration.hpp"
#include "orw/ordinal.hpp"

namespace orw {

/// An order-homeomorphic embedding f of gamma into itself that preserves
/// and reflects <*, node classes and component tops.
///
/// Inside component i, with base P_{i-1} and exponent e, the point
/// P_{i-1} + x (x < w^e) is sent to P_{i-1} + x' where x' adds `shift` to
/// every coefficient of x at exponents CB(x), ..., e-1.  Component tops (and
/// hence all points of finite components) are fixed.  For a large enough
/// shift the image misses every non-top point with small coefficients.
class SkeletonMap {
public:
    /// Requires shift >= 1.
    SkeletonMap(Ordinal gamma, Natural shift);

    const Ordinal& gamma() const noexcept { return gamma_; }
    Natural shift() const noexcept { return shift_; }

    /// f(x); requires x < gamma.
    Ordinal apply(const Ordinal& x) const;
    bool in_image(const Ordinal& y) const;
    /// f^{-1}(y); throws DomainError when y is not in the image.
    Ordinal preimage(const Ordinal& y) const;
    /// The image set, enumerated in increasing order.
    BoundedEnumeration image() const;

private:
    std::optional<Ordinal> try_preimage(const Ordinal& y) const;

    Ordinal gamma_;
    Natural shift_;
};

/// A skeleton whose image avoids every non-top point that occurs in an
/// override, so the induced colouring is w-homogeneous.
SkeletonMap skeleton_extract(const QuotientColoring& c);

/// c_I({a, b}) = c({f(a), f(b)}) as a quotient colouring of gamma.
QuotientColoring induced_coloring(const QuotientColoring& c, const SkeletonMap& f);

}  // namespace orw
