#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orw/ordinal.hpp"

namespace orw {

/// A simple graph on vertices 0..order-1 (order <= 64), stored as one
/// neighbourhood bitmask per vertex.  Edges are the blue pairs of a
/// colouring of pairs of vertices; non-edges are red.
class WitnessGraph {
public:
    static constexpr std::size_t max_order = 64;
    using Edge = std::pair<std::size_t, std::size_t>;

    WitnessGraph() = default;
    /// Throws DomainError for order > 64, loops or out-of-range endpoints.
    explicit WitnessGraph(std::size_t order, const std::vector<Edge>& edges = {});

    /// Circulant graph: i ~ j iff (j - i) mod order is +-d for some d in distances.
    static WitnessGraph circulant(std::size_t order, const std::vector<std::size_t>& distances);
    static WitnessGraph complete(std::size_t order);

    std::size_t order() const noexcept { return adjacency_.size(); }
    bool has_edge(std::size_t u, std::size_t v) const;
    std::uint64_t neighbours(std::size_t v) const { return adjacency_.at(v); }
    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    /// Vertex v of the result is vertex perm[v] of this graph.
    WitnessGraph permuted(const std::vector<std::size_t>& perm) const;

    std::optional<std::array<std::size_t, 3>> find_triangle() const;
    /// Some independent set of exactly `size` vertices, if any.
    std::optional<std::vector<std::size_t>> find_independent_set(std::size_t size) const;
    std::size_t independence_number() const;

    friend bool operator==(const WitnessGraph&, const WitnessGraph&) = default;

private:
    std::vector<std::uint64_t> adjacency_;
};

struct WitnessVerdict {
    bool valid = false;
    std::optional<std::array<std::size_t, 3>> triangle;
    std::optional<std::vector<std::size_t>> independent_set;

    explicit operator bool() const noexcept { return valid; }
};

/// Valid iff g is triangle-free and has no independent set of size n, i.e. g
/// witnesses R(n, 3) > order.
WitnessVerdict verify_witness(const WitnessGraph& g, Natural n);

enum class RamseySource { builtin, computed, user_file };

std::string to_string(RamseySource s);

struct RamseyRecord {
    Natural n = 0;
    Natural value = 0;  // R(n, 3)
    WitnessGraph witness;
    RamseySource source = RamseySource::builtin;
};

/// Exact R(n, 3) for n in {2, 3, 4} by orderly generation of all
/// triangle-free graphs with independence number < n, up to isomorphism.
RamseyRecord brute_force_ramsey(Natural n);

/// Shipped records: n = 2 (K2), 3 (C5), 4 (C8(1,4)), 5 (C13(1,5)).  The
/// witness is verified before it is returned; the value for n = 5 is the
/// literature value R(5, 3) = 14.
RamseyRecord builtin_record(Natural n);
bool has_builtin_record(Natural n);

/// Permutes vertices so that 0..n-2 form an independent set.  Throws
/// DomainError if the witness has no independent set of size n-1.
RamseyRecord relabel_red_prefix(const RamseyRecord& rec);

/// Witness files: {"n": 5, "order": 13, "edges": [[0, 1], [0, 5], ...]}.
std::pair<Natural, WitnessGraph> witness_from_json(std::string_view text);
std::string witness_to_json(Natural n, const WitnessGraph& g, int indent = 2);

}  // namespace orw
