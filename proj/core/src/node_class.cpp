#include "orw/node_class.hpp"

#include "orw/error.hpp"

namespace orw {

std::string to_string(const NodeClassId& id) {
    return "[" + std::to_string(id.cnf_index) + "," + std::to_string(id.cb_level) + "]";
}

void validate_class(const Ordinal& gamma, const NodeClassId& id) {
    const Natural n = component_count(gamma);
    if (id.cnf_index < 1 || id.cnf_index > n) {
        throw DomainError("class " + to_string(id) + ": component out of range for " + to_string(gamma));
    }
    if (id.cb_level > component_exponent(gamma, id.cnf_index)) {
        throw DomainError("class " + to_string(id) + ": level exceeds component exponent in " +
                          to_string(gamma));
    }
}

NodeClassId classify(const Ordinal& gamma, const Ordinal& alpha) {
    if (!(alpha < gamma)) {
        throw DomainError("classify requires " + to_string(alpha) + " < " + to_string(gamma));
    }
    return NodeClassId{cnf_index(gamma, alpha), cb_rank(alpha)};
}

namespace {

struct ClassShape {
    Ordinal base;  // P_{i-1}
    Ordinal top;   // P_i
    Exponent exponent;
    bool last;
};

ClassShape shape_of(const Ordinal& gamma, const NodeClassId& id) {
    validate_class(gamma, id);
    return ClassShape{partial_sum(gamma, id.cnf_index - 1), partial_sum(gamma, id.cnf_index),
                      component_exponent(gamma, id.cnf_index),
                      id.cnf_index == component_count(gamma)};
}

// Members of a finite class, in increasing order.
std::vector<Ordinal> finite_members(const ClassShape& s, const NodeClassId& id) {
    std::vector<Ordinal> out;
    if (id.cnf_index == 1 && id.cb_level == 0) out.push_back(Ordinal());
    if (!s.last) out.push_back(s.top);
    return out;
}

}  // namespace

BoundedEnumeration node_class(const Ordinal& gamma, const NodeClassId& id) {
    const ClassShape s = shape_of(gamma, id);
    auto member = [gamma, id](const Ordinal& a) { return a < gamma && classify(gamma, a) == id; };
    if (id.cb_level == s.exponent) {
        std::vector<Ordinal> members = finite_members(s, id);
        const Natural size = members.size();
        return BoundedEnumeration(
            member,
            [members](std::size_t m) {
                return std::vector<Ordinal>(members.begin(),
                                            members.begin() + static_cast<std::ptrdiff_t>(std::min(m, members.size())));
            },
            Cardinality::finite(size));
    }
    const bool with_zero = id.cnf_index == 1 && id.cb_level == 0;
    return BoundedEnumeration(
        member,
        [base = s.base, level = id.cb_level, with_zero](std::size_t m) {
            std::vector<Ordinal> out;
            out.reserve(m);
            if (with_zero && m > 0) out.push_back(Ordinal());
            for (Natural t = 1; out.size() < m; ++t) out.push_back(base + Ordinal::omega_power(level, t));
            return out;
        },
        Cardinality::infinite());
}

Cardinality class_size(const Ordinal& gamma, const NodeClassId& id) {
    const ClassShape s = shape_of(gamma, id);
    if (id.cb_level < s.exponent) return Cardinality::infinite();
    return Cardinality::finite(finite_members(s, id).size());
}

std::vector<NodeClassId> all_classes(const Ordinal& gamma, std::size_t limit) {
    std::vector<NodeClassId> out;
    Natural index = 0;
    for (const Term& t : gamma.terms()) {
        for (Natural c = 0; c < t.coefficient; ++c) {
            ++index;
            for (Exponent j = 0; j <= t.exponent; ++j) {
                if (out.size() >= limit) {
                    throw DomainError("too many node classes in " + to_string(gamma));
                }
                out.push_back(NodeClassId{index, j});
            }
        }
    }
    return out;
}

std::vector<Ordinal> class_members_above(const Ordinal& gamma, const NodeClassId& id,
                                         const Ordinal& floor, std::size_t count) {
    const ClassShape s = shape_of(gamma, id);
    std::vector<Ordinal> out;
    if (id.cb_level == s.exponent) {
        for (Ordinal& a : finite_members(s, id)) {
            if (out.size() < count && floor < a) out.push_back(std::move(a));
        }
        return out;
    }
    if (!(floor < s.top)) return out;
    if (floor < s.base) return node_class(gamma, id).enumerate(count);
    // floor sits inside component i: the next members are floor + w^j * t.
    out.reserve(count);
    for (Natural t = 1; out.size() < count; ++t) out.push_back(floor + Ordinal::omega_power(id.cb_level, t));
    return out;
}

std::vector<Ordinal> enumerate_below(const Ordinal& gamma, std::size_t m) {
    std::vector<Ordinal> out;
    const Natural limit = gamma.is_finite() ? gamma.to_natural() : m;
    for (Natural t = 0; t < limit && out.size() < m; ++t) out.push_back(Ordinal::natural(t));
    return out;
}

}  // namespace orw
