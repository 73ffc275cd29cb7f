#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orw {

using Exponent = std::uint32_t;
using Natural = std::uint64_t;

// One Cantor-normal-form summand w^exponent * coefficient.
struct Term {
    Exponent exponent = 0;
    Natural coefficient = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// An ordinal below w^w, stored in Cantor normal form.
///
/// The term list has strictly decreasing exponents and positive
/// coefficients, so equality of values is equality of term lists.  The empty
/// list is 0.  Values are immutable; every operation returns a new ordinal.
class Ordinal {
public:
    Ordinal() = default;

    /// Validates the CNF invariants and throws DomainError on violation.
    static Ordinal from_terms(std::vector<Term> terms);
    static Ordinal natural(Natural n);
    /// w^exponent * coefficient (0 when coefficient is 0).
    static Ordinal omega_power(Exponent exponent, Natural coefficient = 1);
    static Ordinal omega() { return omega_power(1); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const noexcept;
    bool is_limit() const noexcept;
    bool is_successor() const noexcept;

    /// Leading exponent; 0 for the zero ordinal.
    Exponent degree() const noexcept;
    /// Coefficient of w^e (0 if absent).
    Natural coefficient_at(Exponent e) const noexcept;

    /// Finite value; throws DomainError if the ordinal is infinite.
    Natural to_natural() const;

    friend bool operator==(const Ordinal&, const Ordinal&) = default;
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    explicit Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}
    friend Ordinal operator+(const Ordinal&, const Ordinal&);
    friend Ordinal left_subtract(const Ordinal&, const Ordinal&);

    std::vector<Term> terms_;
};

/// Ordinal addition (not commutative: 1 + w = w).
Ordinal operator+(const Ordinal& a, const Ordinal& b);

/// The unique d with a + d = b.  Requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

enum class Order { less, equal, greater };
Order compare(const Ordinal& a, const Ordinal& b);

/// Parses `ordinal := term ('+' term)*`, `term := 'w' ('^' nat)? ('*' nat)? | nat`.
/// Whitespace between tokens is ignored.
Ordinal parse_ordinal(std::string_view text);
/// Canonical expression in the parse grammar, e.g. "w^2*3 + w + 4".
std::string to_string(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

/// Cantor-Bendixson rank: exponent of the last term; 0 for 0.
Exponent cb_rank(const Ordinal& a) noexcept;
/// Coefficient of the last term; 1 for 0.
Natural l_count(const Ordinal& a) noexcept;

/// Drops one copy of the last term: for a = d + w^k this is d.
/// Requires a != 0.
Ordinal drop_last_unit(const Ordinal& a);

// ---------------------------------------------------------------------------
// Component structure of gamma.  Writing gamma = w^{b_1} + ... + w^{b_n} with
// b_1 >= ... >= b_n (every coefficient expanded into unit copies), component
// k covers the half-open interval (P_{k-1}, P_k] where P_k is the k-th partial
// sum; 0 belongs to component 1.

/// Number of unit components n; throws OverflowError if it exceeds 2^64-1.
Natural component_count(const Ordinal& gamma);
/// Exponent b_k of component k (1-based).
Exponent component_exponent(const Ordinal& gamma, Natural k);
/// Partial sum P_k = w^{b_1} + ... + w^{b_k}; P_0 = 0.
Ordinal partial_sum(const Ordinal& gamma, Natural k);

/// Least k with alpha <= P_k; alpha = 0 maps to 1.  Requires alpha <= gamma.
Natural cnf_index(const Ordinal& gamma, const Ordinal& alpha);

// ---------------------------------------------------------------------------
// The <* forest: b <* a iff a = b + w^t for some t > CB(b).

bool star_less(const Ordinal& b, const Ordinal& a);
/// The immediate <*-successor of b (its parent in the forest).
Ordinal star_parent(const Ordinal& b);

}  // namespace orw
