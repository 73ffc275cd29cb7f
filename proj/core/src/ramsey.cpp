#include "orw/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "json.hpp"
#include "orw/error.hpp"

namespace orw {

namespace {

std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

std::uint64_t low_mask(std::size_t order) { return order >= 64 ? ~std::uint64_t{0} : bit(order) - 1; }

}  // namespace

WitnessGraph::WitnessGraph(std::size_t order, const std::vector<Edge>& edges) {
    if (order > max_order) {
        throw DomainError("witness graphs are limited to " + std::to_string(max_order) + " vertices");
    }
    adjacency_.assign(order, 0);
    for (const auto& [u, v] : edges) add_edge(u, v);
}

WitnessGraph WitnessGraph::circulant(std::size_t order, const std::vector<std::size_t>& distances) {
    WitnessGraph g(order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t d : distances) {
            if (d % order == 0) throw DomainError("circulant distance must not be a multiple of the order");
            g.add_edge(i, (i + d) % order);
        }
    }
    return g;
}

WitnessGraph WitnessGraph::complete(std::size_t order) {
    WitnessGraph g(order);
    for (std::size_t u = 0; u < order; ++u) {
        for (std::size_t v = u + 1; v < order; ++v) g.add_edge(u, v);
    }
    return g;
}

bool WitnessGraph::has_edge(std::size_t u, std::size_t v) const { return (adjacency_.at(u) & bit(v)) != 0; }

std::size_t WitnessGraph::degree(std::size_t v) const { return std::popcount(adjacency_.at(v)); }

std::size_t WitnessGraph::edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t row : adjacency_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<WitnessGraph::Edge> WitnessGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u) {
        for (std::size_t v = u + 1; v < order(); ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

void WitnessGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= order() || v >= order()) throw DomainError("edge endpoint outside the vertex range");
    if (u == v) throw DomainError("witness graphs have no loops");
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
}

void WitnessGraph::remove_edge(std::size_t u, std::size_t v) {
    if (u >= order() || v >= order()) throw DomainError("edge endpoint outside the vertex range");
    adjacency_[u] &= ~bit(v);
    adjacency_[v] &= ~bit(u);
}

WitnessGraph WitnessGraph::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != order()) throw DomainError("permutation size differs from graph order");
    std::vector<std::size_t> check = perm;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
        if (check[i] != i) throw DomainError("not a permutation of the vertices");
    }
    WitnessGraph g(order());
    for (std::size_t a = 0; a < order(); ++a) {
        for (std::size_t b = a + 1; b < order(); ++b) {
            if (has_edge(perm[a], perm[b])) g.add_edge(a, b);
        }
    }
    return g;
}

std::optional<std::array<std::size_t, 3>> WitnessGraph::find_triangle() const {
    for (std::size_t u = 0; u < order(); ++u) {
        for (std::size_t v = u + 1; v < order(); ++v) {
            if (!has_edge(u, v)) continue;
            const std::uint64_t common = adjacency_[u] & adjacency_[v] & ~low_mask(v + 1);
            if (common != 0) return std::array<std::size_t, 3>{u, v, static_cast<std::size_t>(std::countr_zero(common))};
        }
    }
    return std::nullopt;
}

namespace {

// Extends `chosen` by `need` pairwise non-adjacent vertices from `candidates`.
bool independent_search(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, std::size_t need,
                        std::vector<std::size_t>& chosen) {
    if (need == 0) return true;
    while (static_cast<std::size_t>(std::popcount(candidates)) >= need) {
        const std::size_t v = std::countr_zero(candidates);
        candidates &= ~bit(v);
        chosen.push_back(v);
        if (independent_search(adj, candidates & ~adj[v], need - 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

std::size_t independence_of(const std::vector<std::uint64_t>& adj, std::uint64_t candidates) {
    if (candidates == 0) return 0;
    const std::size_t v = std::countr_zero(candidates);
    const std::uint64_t rest = candidates & ~bit(v);
    const std::size_t with = 1 + independence_of(adj, rest & ~adj[v]);
    if ((adj[v] & rest) == 0) return with;  // v is isolated here, so taking it is optimal
    return std::max(with, independence_of(adj, rest));
}

}  // namespace

std::optional<std::vector<std::size_t>> WitnessGraph::find_independent_set(std::size_t size) const {
    std::vector<std::size_t> chosen;
    if (independent_search(adjacency_, low_mask(order()), size, chosen)) return chosen;
    return std::nullopt;
}

std::size_t WitnessGraph::independence_number() const { return independence_of(adjacency_, low_mask(order())); }

WitnessVerdict verify_witness(const WitnessGraph& g, Natural n) {
    WitnessVerdict verdict;
    verdict.triangle = g.find_triangle();
    if (verdict.triangle) return verdict;
    verdict.independent_set = g.find_independent_set(n);
    verdict.valid = !verdict.independent_set.has_value();
    return verdict;
}

std::string to_string(RamseySource s) {
    switch (s) {
        case RamseySource::builtin: return "builtin";
        case RamseySource::computed: return "computed";
        default: return "user-file";
    }
}

namespace {

// Canonical form: the least upper-triangle edge code over all relabelings
// that order vertices by an isomorphism-invariant signature.
class Canonizer {
public:
    explicit Canonizer(const WitnessGraph& g) : g_(g) {}

    std::uint64_t key() {
        const std::size_t n = g_.order();
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> signature;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> sig{g_.degree(v)};
            std::vector<std::size_t> around;
            for (std::size_t u = 0; u < n; ++u) {
                if (g_.has_edge(u, v)) around.push_back(g_.degree(u));
            }
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
            signature.emplace_back(std::move(sig), v);
        }
        std::sort(signature.begin(), signature.end());
        order_.clear();
        cells_.clear();
        for (std::size_t k = 0; k < n; ++k) {
            order_.push_back(signature[k].second);
            if (k == 0 || signature[k].first != signature[k - 1].first) cells_.push_back(k);
        }
        cells_.push_back(n);
        best_ = ~std::uint64_t{0};
        permute_cell(0);
        return best_;
    }

private:
    void permute_cell(std::size_t c) {
        if (c + 1 == cells_.size()) {
            best_ = std::min(best_, code());
            return;
        }
        auto first = order_.begin() + static_cast<std::ptrdiff_t>(cells_[c]);
        auto last = order_.begin() + static_cast<std::ptrdiff_t>(cells_[c + 1]);
        std::sort(first, last);
        do {
            permute_cell(c + 1);
        } while (std::next_permutation(first, last));
    }

    std::uint64_t code() const {
        std::uint64_t out = 0;
        for (std::size_t b = 1; b < order_.size(); ++b) {
            for (std::size_t a = 0; a < b; ++a) out = (out << 1) | (g_.has_edge(order_[a], order_[b]) ? 1 : 0);
        }
        return out;
    }

    const WitnessGraph& g_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> cells_;
    std::uint64_t best_ = 0;
};

}  // namespace

RamseyRecord brute_force_ramsey(Natural n) {
    if (n < 2 || n > 4) throw DomainError("brute_force_ramsey supports n in {2, 3, 4}");
    std::vector<WitnessGraph> level{WitnessGraph(0)};
    for (std::size_t v = 0;; ++v) {
        std::map<std::uint64_t, WitnessGraph> next;
        for (const WitnessGraph& g : level) {
            std::vector<std::uint64_t> adj(v);
            for (std::size_t u = 0; u < v; ++u) adj[u] = g.neighbours(u);
            for (std::uint64_t s = 0; s < bit(v); ++s) {
                // The new vertex's neighbourhood must be independent (no
                // triangle), and its non-neighbours must not hold n-1
                // independent vertices (no independent n-set).
                bool independent = true;
                for (std::uint64_t rest = s; rest != 0 && independent; rest &= rest - 1) {
                    independent = (adj[std::countr_zero(rest)] & s) == 0;
                }
                if (!independent) continue;
                const std::uint64_t outside = low_mask(v) & ~s;
                std::vector<std::size_t> scratch;
                if (independent_search(adj, outside, n - 1, scratch)) continue;
                WitnessGraph h(v + 1);
                for (const auto& [a, b] : g.edges()) h.add_edge(a, b);
                for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) h.add_edge(std::countr_zero(rest), v);
                next.emplace(Canonizer(h).key(), std::move(h));
            }
        }
        if (next.empty()) {
            // Every graph of order v is maximal, so R(n, 3) = v + 1.
            RamseyRecord rec;
            rec.n = n;
            rec.value = v + 1;
            rec.witness = level.front();
            rec.source = RamseySource::computed;
            return rec;
        }
        level.clear();
        for (auto& [key, h] : next) level.push_back(std::move(h));
    }
}

bool has_builtin_record(Natural n) { return n >= 2 && n <= 5; }

RamseyRecord builtin_record(Natural n) {
    RamseyRecord rec;
    rec.n = n;
    rec.source = RamseySource::builtin;
    switch (n) {
        case 2: rec.value = 3; rec.witness = WitnessGraph::complete(2); break;
        case 3: rec.value = 6; rec.witness = WitnessGraph::circulant(5, {1}); break;
        case 4: rec.value = 9; rec.witness = WitnessGraph::circulant(8, {1, 4}); break;
        case 5: rec.value = 14; rec.witness = WitnessGraph::circulant(13, {1, 5}); break;
        default: throw DomainError("no builtin witness for R(" + std::to_string(n) + ", 3)");
    }
    if (rec.witness.order() + 1 != rec.value || !verify_witness(rec.witness, n)) {
        throw DomainError("builtin witness for R(" + std::to_string(n) + ", 3) failed verification");
    }
    return rec;
}

RamseyRecord relabel_red_prefix(const RamseyRecord& rec) {
    if (rec.n < 1) throw DomainError("relabeling needs n >= 1");
    const auto prefix = rec.witness.find_independent_set(rec.n - 1);
    if (!prefix) {
        throw DomainError("witness has no independent set of size " + std::to_string(rec.n - 1));
    }
    std::vector<std::size_t> perm = *prefix;
    for (std::size_t v = 0; v < rec.witness.order(); ++v) {
        if (std::find(prefix->begin(), prefix->end(), v) == prefix->end()) perm.push_back(v);
    }
    RamseyRecord out = rec;
    out.witness = rec.witness.permuted(perm);
    return out;
}

std::pair<Natural, WitnessGraph> witness_from_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid witness JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("edges")) {
        throw DomainError("witness JSON needs \"order\" and \"edges\"");
    }
    if (!doc["order"].is_number_unsigned()) throw DomainError("witness order must be a natural number");
    const Natural n = doc.contains("n") ? doc["n"].get<Natural>() : 0;
    WitnessGraph g(doc["order"].get<std::size_t>());
    if (!doc["edges"].is_array()) throw DomainError("witness edges must be an array");
    for (const json& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw DomainError("witness edges are pairs of vertex numbers, got " + e.dump());
        }
        g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return {n, g};
}

std::string witness_to_json(Natural n, const WitnessGraph& g, int indent) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json doc = {{"n", n}, {"order", g.order()}, {"edges", edges}};
    return doc.dump(indent);
}

}  // namespace orw
