#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orw/ordinal.hpp"

namespace orw {

// A natural number or "infinite" (always countable here).
class Cardinality {
public:
    static Cardinality finite(Natural n) { return Cardinality(n); }
    static Cardinality infinite() { return Cardinality(); }

    bool is_infinite() const noexcept { return !count_.has_value(); }
    bool is_finite() const noexcept { return count_.has_value(); }
    /// Throws DomainError for infinite cardinalities.
    Natural count() const;
    /// True when at least n elements exist.
    bool at_least(Natural n) const noexcept { return is_infinite() || *count_ >= n; }

    friend bool operator==(const Cardinality&, const Cardinality&) = default;

private:
    Cardinality() = default;
    explicit Cardinality(Natural n) : count_(n) {}
    std::optional<Natural> count_;
};

std::string to_string(const Cardinality& c);

/// Finite view of a (possibly infinite) well-ordered set of ordinals:
/// an exact membership test plus the increasing enumeration of a prefix.
///
/// enumerate(m) returns min(m, size) elements, strictly increasing, and
/// enumerate(m) is always a prefix of enumerate(m + 1).
class BoundedEnumeration {
public:
    using Predicate = std::function<bool(const Ordinal&)>;
    using Prefix = std::function<std::vector<Ordinal>(std::size_t)>;

    BoundedEnumeration(Predicate contains, Prefix prefix, Cardinality size)
        : contains_(std::move(contains)), prefix_(std::move(prefix)), size_(size) {}

    static BoundedEnumeration empty();
    static BoundedEnumeration singleton(Ordinal value);

    bool contains(const Ordinal& a) const { return contains_(a); }
    std::vector<Ordinal> enumerate(std::size_t m) const { return prefix_(m); }
    const Cardinality& size() const noexcept { return size_; }

private:
    Predicate contains_;
    Prefix prefix_;
    Cardinality size_;
};

/// {b : b <|* a}, the immediate <*-predecessors of a.  Empty when CB(a) = 0.
/// For a = d + w^k with k >= 1 these are d + w^{k-1} * t for t >= 1, and
/// additionally 0 when a = w (the immediate <*-successor of 0 is w).
BoundedEnumeration star_children(const Ordinal& a);

/// T(a) = {b : b <* a} u {a}.
BoundedEnumeration t_set(const Ordinal& a);
/// T^{=k}(a) = {b in T(a) : CB(b) = k}.
BoundedEnumeration t_level(const Ordinal& a, Exponent k);

/// The tail sets F(theta)^r_m.  Requires m <= CB(theta).
BoundedEnumeration f_set(const Ordinal& theta, Natural r, Exponent m);

}  // namespace orw
