#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orw/node_class.hpp"
#include "orw/ordinal.hpp"

namespace orw {

enum class Color : std::uint8_t { red = 0, blue = 1 };

inline int to_int(Color c) { return static_cast<int>(c); }
/// Accepts 0 or 1; throws DomainError otherwise.
Color color_from_int(long long v);

using OrdinalPair = std::pair<Ordinal, Ordinal>;

/// A 2-colouring of [gamma]^2 that is constant on pairs of node classes,
/// except on a finite table of overridden pairs.
///
/// The class-pair table is dense and symmetric; its diagonal is the colour of
/// pairs inside one class.  Build with QuotientColoring::Builder.
class QuotientColoring {
public:
    class Builder;

    const Ordinal& gamma() const noexcept { return gamma_; }
    const std::vector<NodeClassId>& classes() const noexcept { return classes_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    /// Throws DomainError for ids that are not classes of gamma.
    std::size_t index_of(const NodeClassId& id) const;

    Color within(const NodeClassId& id) const;
    /// Class-pair colour; equals within(a) when a == b.
    Color cross(const NodeClassId& a, const NodeClassId& b) const;
    Color cross_at(std::size_t a, std::size_t b) const { return table_[a * classes_.size() + b]; }

    /// Overrides keyed by (smaller, larger).
    const std::map<OrdinalPair, Color>& overrides() const noexcept { return overrides_; }
    /// Ordinals that appear in at least one override.
    const std::set<Ordinal>& touched() const noexcept { return touched_; }
    bool is_touched(const Ordinal& a) const { return touched_.count(a) != 0; }

    /// Colour of {a, b}; requires a != b, both below gamma.
    Color color_of(const Ordinal& a, const Ordinal& b) const;

private:
    QuotientColoring() = default;

    Ordinal gamma_;
    std::vector<NodeClassId> classes_;
    std::map<NodeClassId, std::size_t> index_;
    std::vector<Color> table_;
    std::map<OrdinalPair, Color> overrides_;
    std::set<Ordinal> touched_;
};

class QuotientColoring::Builder {
public:
    explicit Builder(Ordinal gamma, Color fill = Color::red);

    Builder& within(const NodeClassId& id, Color c);
    Builder& cross(const NodeClassId& a, const NodeClassId& b, Color c);
    /// Throws DomainError for a == b, points outside gamma, or a second
    /// override of the same unordered pair.
    Builder& override_pair(const Ordinal& a, const Ordinal& b, Color c);

    QuotientColoring build() const { return coloring_; }

private:
    QuotientColoring coloring_;
};

inline Color color_of(const QuotientColoring& c, const Ordinal& a, const Ordinal& b) {
    return c.color_of(a, b);
}

// ---------------------------------------------------------------------------
// Structural properties.

struct OmegaHomogeneity {
    bool holds = true;
    // (parent, b, t): b and t are both immediate <*-predecessors of parent
    // but {b, t} is coloured differently from the other sibling pairs.
    std::optional<std::tuple<Ordinal, Ordinal, Ordinal>> violation;
};

OmegaHomogeneity is_omega_homogeneous(const QuotientColoring& c);

/// The colour of <*-related pairs as a function of
/// (CNF_gamma(upper), CB(upper), CB(lower)).
class NormalTable {
public:
    using Key = std::tuple<Natural, Exponent, Exponent>;

    void set(Natural cnf, Exponent upper_level, Exponent lower_level, Color c) {
        entries_[Key{cnf, upper_level, lower_level}] = c;
    }
    /// Throws DomainError for triples no <*-related pair realizes.
    Color at(Natural cnf, Exponent upper_level, Exponent lower_level) const;
    bool contains(Natural cnf, Exponent upper_level, Exponent lower_level) const {
        return entries_.count(Key{cnf, upper_level, lower_level}) != 0;
    }
    const std::map<Key, Color>& entries() const noexcept { return entries_; }

private:
    std::map<Key, Color> entries_;
};

struct Normality {
    std::optional<NormalTable> table;
    // A <*-related pair whose colour disagrees with the rest of its triple.
    std::optional<OrdinalPair> counterexample;

    bool holds() const noexcept { return table.has_value(); }
};

Normality is_normal(const QuotientColoring& c);

/// Eventual colours c~(i, j; k, l) from a class (i, j) toward the level-l
/// tail sets of component k != i.
class CanonicalTable {
public:
    using Key = std::tuple<Natural, Exponent, Natural, Exponent>;

    void set(const NodeClassId& from, const NodeClassId& to, Color c) {
        entries_[Key{from.cnf_index, from.cb_level, to.cnf_index, to.cb_level}] = c;
    }
    /// Throws DomainError for undefined entries.
    Color at(const NodeClassId& from, const NodeClassId& to) const;
    bool contains(const NodeClassId& from, const NodeClassId& to) const {
        return entries_.count(Key{from.cnf_index, from.cb_level, to.cnf_index, to.cb_level}) != 0;
    }
    const std::map<Key, Color>& entries() const noexcept { return entries_; }

private:
    std::map<Key, Color> entries_;
};

/// Requires c to be normal and w-homogeneous; throws DomainError otherwise,
/// and also when an override toward a singleton target makes the eventual
/// colour depend on the source point (the colouring is then not canonical).
CanonicalTable extract_canonical_table(const QuotientColoring& c);

}  // namespace orw
