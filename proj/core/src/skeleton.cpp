#include "orw/skeleton.hpp"

#include <algorithm>

#include "orw/error.hpp"

namespace orw {

namespace {

Natural add_checked(Natural a, Natural b) {
    Natural out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("coefficient overflow in skeleton map");
    return out;
}

// x with `shift` added to the coefficients at exponents low..e-1.
Ordinal lift(const Ordinal& x, Exponent low, Exponent e, Natural shift) {
    std::vector<Term> terms;
    for (Exponent k = e; k-- > low;) {
        const Natural v = add_checked(x.coefficient_at(k), shift);
        terms.push_back(Term{k, v});
    }
    return Ordinal::from_terms(std::move(terms));
}

}  // namespace

SkeletonMap::SkeletonMap(Ordinal gamma, Natural shift) : gamma_(std::move(gamma)), shift_(shift) {
    if (shift_ == 0) throw DomainError("skeleton shift must be positive");
}

Ordinal SkeletonMap::apply(const Ordinal& x) const {
    if (!(x < gamma_)) throw DomainError("skeleton map: " + to_string(x) + " is not below " + to_string(gamma_));
    const Natural i = cnf_index(gamma_, x);
    const Ordinal base = partial_sum(gamma_, i - 1);
    const Exponent e = component_exponent(gamma_, i);
    if (e == 0 || x == partial_sum(gamma_, i)) return x;
    const Ordinal rest = left_subtract(base, x);
    return base + lift(rest, cb_rank(rest), e, shift_);
}

std::optional<Ordinal> SkeletonMap::try_preimage(const Ordinal& y) const {
    if (!(y < gamma_)) return std::nullopt;
    const Natural i = cnf_index(gamma_, y);
    const Exponent e = component_exponent(gamma_, i);
    if (e == 0 || y == partial_sum(gamma_, i)) return y;
    const Ordinal base = partial_sum(gamma_, i - 1);
    const Ordinal rest = left_subtract(base, y);
    if (rest.is_zero()) return std::nullopt;
    const Exponent low = cb_rank(rest);
    std::vector<Term> terms;
    for (Exponent k = e; k-- > low;) {
        const Natural v = rest.coefficient_at(k);
        if (v < shift_) return std::nullopt;
        if (v > shift_) terms.push_back(Term{k, v - shift_});
    }
    if (terms.empty()) {
        // Only the point 0 of the first component lifts to all-shift coefficients.
        if (low == 0 && i == 1) return Ordinal();
        return std::nullopt;
    }
    if (terms.back().exponent != low) return std::nullopt;
    return base + Ordinal::from_terms(std::move(terms));
}

bool SkeletonMap::in_image(const Ordinal& y) const { return try_preimage(y).has_value(); }

Ordinal SkeletonMap::preimage(const Ordinal& y) const {
    auto x = try_preimage(y);
    if (!x) throw DomainError(to_string(y) + " is not in the skeleton image");
    return *x;
}

BoundedEnumeration SkeletonMap::image() const {
    SkeletonMap self = *this;
    const Cardinality size = gamma_.is_finite() ? Cardinality::finite(gamma_.to_natural()) : Cardinality::infinite();
    return BoundedEnumeration(
        [self](const Ordinal& y) { return self.in_image(y); },
        [self](std::size_t m) {
            std::vector<Ordinal> out;
            for (const Ordinal& x : enumerate_below(self.gamma(), m)) out.push_back(self.apply(x));
            return out;
        },
        size);
}

SkeletonMap skeleton_extract(const QuotientColoring& c) {
    Natural largest = 0;
    for (const Ordinal& a : c.touched()) {
        for (const Term& t : a.terms()) largest = std::max(largest, t.coefficient);
    }
    return SkeletonMap(c.gamma(), add_checked(largest, 1));
}

QuotientColoring induced_coloring(const QuotientColoring& c, const SkeletonMap& f) {
    if (f.gamma() != c.gamma()) throw DomainError("skeleton and colouring live on different ordinals");
    QuotientColoring::Builder builder(c.gamma());
    const auto& classes = c.classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i; j < classes.size(); ++j) builder.cross(classes[i], classes[j], c.cross_at(i, j));
    }
    // f preserves classes, so only overrides between two image points survive.
    for (const auto& [pair, color] : c.overrides()) {
        if (f.in_image(pair.first) && f.in_image(pair.second)) {
            builder.override_pair(f.preimage(pair.first), f.preimage(pair.second), color);
        }
    }
    return builder.build();
}

}  // namespace orw
