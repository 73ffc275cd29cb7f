#pragma once

// Random colourings, point samples and the recursive F-set reference, shared
// by the unit tests and the acceptance suite.

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "orw/coloring.hpp"
#include "orw/enumeration.hpp"
#include "orw/node_class.hpp"
#include "orw/sat.hpp"

namespace fixtures {

using namespace orw;

// Random quotient colouring with a handful of overrides among the first
// points of each class.
inline QuotientColoring random_coloring(std::mt19937_64& rng, const Ordinal& gamma, double blue, std::size_t overrides,
                                        std::size_t depth = 4) {
    std::bernoulli_distribution coin(blue);
    QuotientColoring::Builder b(gamma);
    const auto classes = all_classes(gamma);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i; j < classes.size(); ++j) {
            b.cross(classes[i], classes[j], coin(rng) ? Color::blue : Color::red);
        }
    }
    std::vector<Ordinal> points;
    for (const NodeClassId& id : classes) {
        for (const Ordinal& a : node_class(gamma, id).enumerate(depth)) points.push_back(a);
    }
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::set<std::pair<Ordinal, Ordinal>> used;
    for (std::size_t k = 0; k < overrides; ++k) {
        Ordinal x = points[pick(rng)];
        Ordinal y = points[pick(rng)];
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        if (!used.insert({x, y}).second) continue;
        b.override_pair(x, y, coin(rng) ? Color::blue : Color::red);
    }
    return b.build();
}

// The first `count` points of every class, plus all override points.
inline std::vector<Ordinal> sample_points(const QuotientColoring& c, std::size_t count) {
    std::set<Ordinal> pts(c.touched().begin(), c.touched().end());
    for (const NodeClassId& id : c.classes()) {
        for (const Ordinal& a : node_class(c.gamma(), id).enumerate(count)) pts.insert(a);
    }
    return {pts.begin(), pts.end()};
}

inline bool sampled_triangle(const QuotientColoring& c, const std::vector<Ordinal>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (c.color_of(pts[a], pts[b]) != Color::blue) continue;
            for (std::size_t d = b + 1; d < pts.size(); ++d)
                if (c.color_of(pts[a], pts[d]) == Color::blue && c.color_of(pts[b], pts[d]) == Color::blue) return true;
        }
    return false;
}

// F(w^d)^r_m by the recursive definition, restricted to a finite box.
inline std::set<Ordinal> f_oracle(Exponent d, Natural r, Exponent m, const std::vector<Ordinal>& universe) {
    std::set<Ordinal> level{Ordinal::omega_power(d)};
    for (Exponent k = d; k > m; --k) {
        std::set<Ordinal> next;
        for (const Ordinal& b : universe) {
            if (!(b < Ordinal::omega_power(d)) || l_count(b) <= r) continue;
            for (const Ordinal& a : level) {
                if (oracle::star_immediate(b, a)) {
                    next.insert(b);
                    break;
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

// Exhaustive satisfiability over all 2^v assignments.
inline bool truth_table_sat(const CnfFormula& f) {
    const std::uint32_t total = 1u << f.num_vars;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        bool all = true;
        for (const Clause& c : f.clauses) {
            bool any = false;
            for (Literal l : c) {
                bool v = (bits >> (std::abs(l) - 1)) & 1u;
                if (v == (l > 0)) {
                    any = true;
                    break;
                }
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

inline CnfFormula random_formula(std::mt19937_64& rng) {
    CnfFormula f;
    f.num_vars = std::uniform_int_distribution<int>(1, 20)(rng);
    // Around the 3-SAT threshold so both outcomes are common.
    const int clauses = std::uniform_int_distribution<int>(0, 5 * f.num_vars)(rng);
    std::uniform_int_distribution<int> var(1, f.num_vars), width(1, 4), sign(0, 1);
    for (int i = 0; i < clauses; ++i) {
        Clause c;
        const int w = width(rng);
        for (int k = 0; k < w; ++k) c.push_back(sign(rng) ? var(rng) : -var(rng));
        f.clauses.push_back(c);
    }
    return f;
}

}  // namespace fixtures
