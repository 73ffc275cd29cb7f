#include "orw/coloring.hpp"

#include <algorithm>

#include "orw/error.hpp"

namespace orw {

Color color_from_int(long long v) {
    if (v == 0) return Color::red;
    if (v == 1) return Color::blue;
    throw DomainError("colour must be 0 or 1, got " + std::to_string(v));
}

std::size_t QuotientColoring::index_of(const NodeClassId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw DomainError("class " + to_string(id) + " is not a class of " + to_string(gamma_));
    }
    return it->second;
}

Color QuotientColoring::within(const NodeClassId& id) const {
    const std::size_t i = index_of(id);
    return cross_at(i, i);
}

Color QuotientColoring::cross(const NodeClassId& a, const NodeClassId& b) const {
    return cross_at(index_of(a), index_of(b));
}

Color QuotientColoring::color_of(const Ordinal& a, const Ordinal& b) const {
    if (a == b) throw DomainError("color_of needs two distinct points, got " + to_string(a) + " twice");
    if (!(a < gamma_) || !(b < gamma_)) {
        throw DomainError("color_of: points must lie below " + to_string(gamma_));
    }
    const OrdinalPair key = a < b ? OrdinalPair{a, b} : OrdinalPair{b, a};
    if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
    return cross(classify(gamma_, a), classify(gamma_, b));
}

QuotientColoring::Builder::Builder(Ordinal gamma, Color fill) {
    coloring_.gamma_ = std::move(gamma);
    coloring_.classes_ = all_classes(coloring_.gamma_);
    for (std::size_t i = 0; i < coloring_.classes_.size(); ++i) coloring_.index_[coloring_.classes_[i]] = i;
    coloring_.table_.assign(coloring_.classes_.size() * coloring_.classes_.size(), fill);
}

QuotientColoring::Builder& QuotientColoring::Builder::within(const NodeClassId& id, Color c) {
    return cross(id, id, c);
}

QuotientColoring::Builder& QuotientColoring::Builder::cross(const NodeClassId& a, const NodeClassId& b,
                                                            Color c) {
    const std::size_t i = coloring_.index_of(a);
    const std::size_t j = coloring_.index_of(b);
    const std::size_t n = coloring_.classes_.size();
    coloring_.table_[i * n + j] = c;
    coloring_.table_[j * n + i] = c;
    return *this;
}

QuotientColoring::Builder& QuotientColoring::Builder::override_pair(const Ordinal& a, const Ordinal& b,
                                                                    Color c) {
    if (a == b) throw DomainError("override needs two distinct points, got " + to_string(a) + " twice");
    const Ordinal& gamma = coloring_.gamma_;
    if (!(a < gamma) || !(b < gamma)) {
        throw DomainError("override {" + to_string(a) + ", " + to_string(b) + "} leaves " + to_string(gamma));
    }
    const OrdinalPair key = a < b ? OrdinalPair{a, b} : OrdinalPair{b, a};
    if (!coloring_.overrides_.emplace(key, c).second) {
        throw DomainError("duplicate override for {" + to_string(key.first) + ", " + to_string(key.second) + "}");
    }
    coloring_.touched_.insert(a);
    coloring_.touched_.insert(b);
    return *this;
}

// ---------------------------------------------------------------------------

OmegaHomogeneity is_omega_homogeneous(const QuotientColoring& c) {
    // All immediate predecessors of a node share one class, so sibling pairs
    // take the within colour of that class unless an override says otherwise.
    OmegaHomogeneity result;
    for (const auto& [pair, color] : c.overrides()) {
        const Ordinal parent = star_parent(pair.first);
        if (!(parent < c.gamma()) || star_parent(pair.second) != parent) continue;
        if (color != c.within(classify(c.gamma(), pair.first))) {
            result.holds = false;
            result.violation = std::make_tuple(parent, pair.first, pair.second);
            return result;
        }
    }
    return result;
}

Color NormalTable::at(Natural cnf, Exponent upper_level, Exponent lower_level) const {
    auto it = entries_.find(Key{cnf, upper_level, lower_level});
    if (it == entries_.end()) {
        throw DomainError("no <*-related pair realizes (" + std::to_string(cnf) + "," +
                          std::to_string(upper_level) + "," + std::to_string(lower_level) + ")");
    }
    return it->second;
}

Normality is_normal(const QuotientColoring& c) {
    const Ordinal& gamma = c.gamma();
    Normality result;
    for (const auto& [pair, color] : c.overrides()) {
        if (!star_less(pair.first, pair.second)) continue;
        if (color != c.cross(classify(gamma, pair.first), classify(gamma, pair.second))) {
            result.counterexample = pair;
            return result;
        }
    }
    // Pairs b1 <* b2 stay inside one component.  Every triple with
    // l1 < l2 <= b_i is realized as long as the class of b2 is not empty.
    NormalTable table;
    for (const NodeClassId& upper : c.classes()) {
        if (class_size(gamma, upper) == Cardinality::finite(0)) continue;
        for (Exponent lower = 0; lower < upper.cb_level; ++lower) {
            table.set(upper.cnf_index, upper.cb_level, lower,
                      c.cross(upper, NodeClassId{upper.cnf_index, lower}));
        }
    }
    result.table = std::move(table);
    return result;
}

Color CanonicalTable::at(const NodeClassId& from, const NodeClassId& to) const {
    auto it = entries_.find(Key{from.cnf_index, from.cb_level, to.cnf_index, to.cb_level});
    if (it == entries_.end()) {
        throw DomainError("canonical table has no entry " + to_string(from) + " -> " + to_string(to));
    }
    return it->second;
}

CanonicalTable extract_canonical_table(const QuotientColoring& c) {
    if (!is_omega_homogeneous(c).holds) throw DomainError("colouring is not w-homogeneous");
    if (!is_normal(c).holds()) throw DomainError("colouring is not normal");

    const Ordinal& gamma = c.gamma();
    const Cardinality none = Cardinality::finite(0);
    const Cardinality one = Cardinality::finite(1);

    CanonicalTable table;
    for (const NodeClassId& from : c.classes()) {
        const Cardinality from_size = class_size(gamma, from);
        if (from_size == none) continue;
        for (const NodeClassId& to : c.classes()) {
            if (to.cnf_index == from.cnf_index) continue;
            const Cardinality to_size = class_size(gamma, to);
            if (to_size == none) continue;
            Color value = c.cross(from, to);
            if (to_size == one) {
                // The tail set is the single point tau, so every source point
                // must see the same colour toward it.
                const Ordinal tau = node_class(gamma, to).enumerate(1).front();
                if (from_size.is_finite()) {
                    const std::vector<Ordinal> sources = node_class(gamma, from).enumerate(from_size.count());
                    value = c.color_of(sources.front(), tau);
                    for (const Ordinal& a : sources) {
                        if (c.color_of(a, tau) != value) {
                            throw DomainError("colouring is not canonical: colours from " + to_string(from) +
                                              " toward " + to_string(tau) + " differ");
                        }
                    }
                } else {
                    for (const Ordinal& a : c.touched()) {
                        if (a == tau || classify(gamma, a) != from) continue;
                        if (c.color_of(a, tau) != value) {
                            throw DomainError("colouring is not canonical: override {" + to_string(a) + ", " +
                                              to_string(tau) + "} disagrees with the rest of " + to_string(from));
                        }
                    }
                }
            }
            table.set(from, to, value);
        }
    }
    return table;
}

}  // namespace orw
