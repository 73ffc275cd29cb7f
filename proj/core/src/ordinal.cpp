#include "orw/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "orw/error.hpp"

namespace orw {

namespace {

Natural checked_add(Natural a, Natural b) {
    Natural out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("coefficient overflow in ordinal arithmetic");
    }
    return out;
}

}  // namespace

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) {
            throw DomainError("CNF coefficient must be positive");
        }
        if (i > 0 && terms[i - 1].exponent <= terms[i].exponent) {
            throw DomainError("CNF exponents must be strictly decreasing");
        }
    }
    return Ordinal(std::move(terms));
}

Ordinal Ordinal::natural(Natural n) {
    if (n == 0) return Ordinal();
    return Ordinal({Term{0, n}});
}

Ordinal Ordinal::omega_power(Exponent exponent, Natural coefficient) {
    if (coefficient == 0) return Ordinal();
    return Ordinal({Term{exponent, coefficient}});
}

bool Ordinal::is_finite() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

bool Ordinal::is_limit() const noexcept {
    return !terms_.empty() && terms_.back().exponent > 0;
}

bool Ordinal::is_successor() const noexcept {
    return !terms_.empty() && terms_.back().exponent == 0;
}

Exponent Ordinal::degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().exponent;
}

Natural Ordinal::coefficient_at(Exponent e) const noexcept {
    for (const Term& t : terms_) {
        if (t.exponent == e) return t.coefficient;
        if (t.exponent < e) break;
    }
    return 0;
}

Natural Ordinal::to_natural() const {
    if (!is_finite()) throw DomainError("ordinal " + to_string(*this) + " is not finite");
    return terms_.empty() ? 0 : terms_.front().coefficient;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
        if (x[i].coefficient != y[i].coefficient) return x[i].coefficient <=> y[i].coefficient;
    }
    return x.size() <=> y.size();
}

Order compare(const Ordinal& a, const Ordinal& b) {
    const auto c = a <=> b;
    if (c < 0) return Order::less;
    if (c > 0) return Order::greater;
    return Order::equal;
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const Exponent lead = b.terms_.front().exponent;
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    for (const Term& t : a.terms_) {
        if (t.exponent > lead) out.push_back(t);
        else if (t.exponent == lead) {
            out.push_back(Term{lead, checked_add(t.coefficient, b.terms_.front().coefficient)});
        }
    }
    const bool merged = !out.empty() && out.back().exponent == lead;
    for (std::size_t i = merged ? 1 : 0; i < b.terms_.size(); ++i) out.push_back(b.terms_[i]);
    return Ordinal(std::move(out));
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
    if (b < a) {
        throw DomainError("left_subtract requires " + to_string(a) + " <= " + to_string(b));
    }
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    std::size_t i = 0;
    while (i < x.size() && x[i] == y[i]) ++i;
    if (i == x.size()) return Ordinal(std::vector<Term>(y.begin() + static_cast<std::ptrdiff_t>(i), y.end()));
    // a < b and they first differ at index i (y has an index i since a <= b).
    std::vector<Term> out;
    if (x[i].exponent == y[i].exponent) {
        out.push_back(Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
        out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(i + 1), y.end());
    } else {
        out.assign(y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
    }
    return Ordinal(std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing and printing.

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Ordinal parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty ordinal expression", pos_);
        Ordinal acc = term();
        skip_space();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '+') throw ParseError("expected '+'", pos_);
            ++pos_;
            skip_space();
            acc = acc + term();
            skip_space();
        }
        return acc;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Natural nat() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("expected natural number", pos_);
        }
        Natural value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const Natural digit = static_cast<Natural>(text_[pos_] - '0');
            if (value > (std::numeric_limits<Natural>::max() - digit) / 10) {
                throw OverflowError("natural number overflow at position " + std::to_string(start));
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    Ordinal term() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            Natural exponent = 1;
            if (accept('^')) {
                const std::size_t at = pos_;
                exponent = nat();
                if (exponent > std::numeric_limits<Exponent>::max()) {
                    throw OverflowError("exponent overflow at position " + std::to_string(at));
                }
            }
            Natural coefficient = 1;
            if (accept('*')) coefficient = nat();
            return Ordinal::omega_power(static_cast<Exponent>(exponent), coefficient);
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            return Ordinal::natural(nat());
        }
        throw ParseError("expected 'w' or a natural number", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : a.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.exponent == 0) {
            os << t.coefficient;
            continue;
        }
        os << 'w';
        if (t.exponent > 1) os << '^' << t.exponent;
        if (t.coefficient > 1) os << '*' << t.coefficient;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

// ---------------------------------------------------------------------------

Exponent cb_rank(const Ordinal& a) noexcept {
    return a.is_zero() ? 0 : a.terms().back().exponent;
}

Natural l_count(const Ordinal& a) noexcept {
    return a.is_zero() ? 1 : a.terms().back().coefficient;
}

Ordinal drop_last_unit(const Ordinal& a) {
    if (a.is_zero()) throw DomainError("drop_last_unit of 0");
    std::vector<Term> terms = a.terms();
    if (--terms.back().coefficient == 0) terms.pop_back();
    return Ordinal::from_terms(std::move(terms));
}

Natural component_count(const Ordinal& gamma) {
    Natural total = 0;
    for (const Term& t : gamma.terms()) total = checked_add(total, t.coefficient);
    return total;
}

Exponent component_exponent(const Ordinal& gamma, Natural k) {
    if (k == 0) throw DomainError("component indices are 1-based");
    Natural seen = 0;
    for (const Term& t : gamma.terms()) {
        if (k <= seen + t.coefficient) return t.exponent;
        seen += t.coefficient;
    }
    throw DomainError("component " + std::to_string(k) + " out of range for " + to_string(gamma));
}

Ordinal partial_sum(const Ordinal& gamma, Natural k) {
    std::vector<Term> out;
    Natural remaining = k;
    for (const Term& t : gamma.terms()) {
        if (remaining == 0) break;
        const Natural take = std::min(remaining, t.coefficient);
        out.push_back(Term{t.exponent, take});
        remaining -= take;
    }
    if (remaining != 0) {
        throw DomainError("component " + std::to_string(k) + " out of range for " + to_string(gamma));
    }
    return Ordinal::from_terms(std::move(out));
}

Natural cnf_index(const Ordinal& gamma, const Ordinal& alpha) {
    if (gamma < alpha) {
        throw DomainError("cnf_index requires " + to_string(alpha) + " <= " + to_string(gamma));
    }
    if (alpha.is_zero()) return 1;
    Ordinal prefix;
    Natural count = 0;
    for (const Term& t : gamma.terms()) {
        const Ordinal full = prefix + Ordinal::omega_power(t.exponent, t.coefficient);
        if (alpha <= full) {
            const Ordinal rest = left_subtract(prefix, alpha);
            Natural c = 1;
            if (rest.degree() == t.exponent) {
                const Natural d = rest.terms().front().coefficient;
                c = rest.terms().size() == 1 ? d : d + 1;
            }
            return count + c;
        }
        prefix = full;
        count += t.coefficient;
    }
    throw DomainError("unreachable: alpha exceeds gamma");
}

bool star_less(const Ordinal& b, const Ordinal& a) {
    if (!(b < a)) return false;
    const Ordinal diff = left_subtract(b, a);
    if (diff.terms().size() != 1) return false;
    const Term& t = diff.terms().front();
    return t.coefficient == 1 && t.exponent > cb_rank(b);
}

Ordinal star_parent(const Ordinal& b) {
    if (b.is_zero()) return Ordinal::omega();
    std::vector<Term> prefix = b.terms();
    const Exponent c = prefix.back().exponent;
    prefix.pop_back();
    return Ordinal::from_terms(std::move(prefix)) + Ordinal::omega_power(c + 1);
}

}  // namespace orw
