#include "orw/enumeration.hpp"
#include "orw/error.hpp"

namespace orw {

Natural Cardinality::count() const {
    if (!count_) throw DomainError("cardinality is infinite");
    return *count_;
}

std::string to_string(const Cardinality& c) {
    return c.is_infinite() ? std::string("infinite") : std::to_string(c.count());
}

BoundedEnumeration BoundedEnumeration::empty() {
    return BoundedEnumeration([](const Ordinal&) { return false; },
                              [](std::size_t) { return std::vector<Ordinal>{}; },
                              Cardinality::finite(0));
}

BoundedEnumeration BoundedEnumeration::singleton(Ordinal value) {
    return BoundedEnumeration([value](const Ordinal& a) { return a == value; },
                              [value](std::size_t m) {
                                  return m == 0 ? std::vector<Ordinal>{} : std::vector<Ordinal>{value};
                              },
                              Cardinality::finite(1));
}

BoundedEnumeration star_children(const Ordinal& a) {
    const Exponent d = cb_rank(a);
    if (d == 0) return BoundedEnumeration::empty();
    const Ordinal prefix = drop_last_unit(a);
    const bool is_omega = a == Ordinal::omega();
    return BoundedEnumeration(
        [a](const Ordinal& b) { return b < a && star_parent(b) == a; },
        [prefix, d, is_omega](std::size_t m) {
            std::vector<Ordinal> out;
            out.reserve(m);
            if (is_omega) {
                for (std::size_t t = 0; t < m; ++t) out.push_back(Ordinal::natural(t));
                return out;
            }
            for (std::size_t t = 1; t <= m; ++t) out.push_back(prefix + Ordinal::omega_power(d - 1, t));
            return out;
        },
        Cardinality::infinite());
}

BoundedEnumeration t_set(const Ordinal& a) {
    const Exponent d = cb_rank(a);
    if (d == 0) return BoundedEnumeration::singleton(a);
    const Ordinal prefix = drop_last_unit(a);
    return BoundedEnumeration(
        [a](const Ordinal& b) { return b == a || star_less(b, a); },
        [prefix](std::size_t m) {
            // Below a the set is {prefix + e : 0 < e < w^d} (plus 0 when prefix = 0),
            // so its first m elements are finite offsets from the prefix.
            std::vector<Ordinal> out;
            out.reserve(m);
            const Natural start = prefix.is_zero() ? 0 : 1;
            for (std::size_t t = 0; t < m; ++t) out.push_back(prefix + Ordinal::natural(start + t));
            return out;
        },
        Cardinality::infinite());
}

BoundedEnumeration t_level(const Ordinal& a, Exponent k) {
    const Exponent d = cb_rank(a);
    if (k > d) return BoundedEnumeration::empty();
    if (k == d) return BoundedEnumeration::singleton(a);
    const Ordinal prefix = drop_last_unit(a);
    const bool with_zero = prefix.is_zero() && k == 0;
    return BoundedEnumeration(
        [a, k](const Ordinal& b) { return cb_rank(b) == k && (b == a || star_less(b, a)); },
        [prefix, k, with_zero](std::size_t m) {
            std::vector<Ordinal> out;
            out.reserve(m);
            if (with_zero && m > 0) out.push_back(Ordinal());
            for (Natural j = 1; out.size() < m; ++j) out.push_back(prefix + Ordinal::omega_power(k, j));
            return out;
        },
        Cardinality::infinite());
}

namespace {

// Membership in F(w^d)^r_m for x <= w^d, m < d.
bool in_pure_f_set(const Ordinal& x, Exponent d, Natural r, Exponent m) {
    if (x.is_zero()) return m == 0 && r == 0;
    if (x.degree() >= d || cb_rank(x) != m) return false;
    for (const Term& t : x.terms()) {
        if (t.exponent < m) return false;
    }
    if (x.coefficient_at(m) <= r) return false;
    for (Exponent e = m + 1; e < d; ++e) {
        if (x.coefficient_at(e) < r) return false;
    }
    return true;
}

std::vector<Ordinal> pure_f_prefix(Exponent d, Natural r, Exponent m, std::size_t count) {
    std::vector<Ordinal> out;
    out.reserve(count);
    if (count == 0) return out;
    if (m == 0 && r == 0) out.push_back(Ordinal());
    std::vector<Term> upper;
    for (Exponent e = d - 1; e > m; --e) {
        if (r > 0) upper.push_back(Term{e, r});
    }
    for (Natural t = 1; out.size() < count; ++t) {
        std::vector<Term> terms = upper;
        terms.push_back(Term{m, r + t});
        out.push_back(Ordinal::from_terms(std::move(terms)));
    }
    return out;
}

}  // namespace

BoundedEnumeration f_set(const Ordinal& theta, Natural r, Exponent m) {
    const Exponent d = cb_rank(theta);
    if (m > d) {
        throw DomainError("f_set level " + std::to_string(m) + " exceeds CB(" + to_string(theta) + ")");
    }
    if (m == d) return BoundedEnumeration::singleton(theta);

    // T(theta) is carried onto w^d + 1 by the order isomorphism rho; for
    // theta = w^d it is the identity, otherwise rho^{-1}(x) = prefix + 1 + x.
    const Ordinal prefix = drop_last_unit(theta);
    const bool shifted = !prefix.is_zero();
    const Ordinal offset = shifted ? prefix + Ordinal::natural(1) : Ordinal();
    return BoundedEnumeration(
        [=](const Ordinal& y) {
            if (shifted) {
                if (y < offset || !(y < theta)) return false;
                return in_pure_f_set(left_subtract(offset, y), d, r, m);
            }
            return y < theta && in_pure_f_set(y, d, r, m);
        },
        [=](std::size_t count) {
            std::vector<Ordinal> out = pure_f_prefix(d, r, m, count);
            if (shifted) {
                for (Ordinal& x : out) x = offset + x;
            }
            return out;
        },
        Cardinality::infinite());
}

}  // namespace orw
