#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orw/coloring.hpp"
#include "orw/copies.hpp"
#include "orw/ramsey.hpp"

namespace orw {

enum class VertexKind { A, B, L, C, R };

/// A vertex of G_n: a union of node classes of gamma.
struct GnVertex {
    VertexKind kind = VertexKind::A;
    Natural index = 0;  // component index; 0 for R
    std::vector<NodeClassId> classes;

    std::string name() const;  // "A1", "L4", "R", ...
};

/// The partition of gamma = w^2*n + w*K + (n-1), K = R(n,3) - n, into the
/// vertices A_i, B_i, L_i (i <= n), C_i, L_i (n < i <= n+K) and R.
struct VertexClassSpec {
    Natural n = 0;
    Natural k = 0;
    RamseyRecord ramsey;
    Ordinal gamma;
    std::vector<GnVertex> vertices;

    /// Position in `vertices`; throws DomainError if absent.
    std::size_t find(VertexKind kind, Natural index = 0) const;
    /// The vertex containing the class; throws DomainError for the empty
    /// top class of the last component.
    std::size_t vertex_of(const NodeClassId& id) const;
};

/// Throws DomainError unless rec.n == n >= 3 and the witness verifies
/// (pass require_verified = false to build from a deliberately broken one).
VertexClassSpec build_partition(Natural n, const RamseyRecord& rec, bool require_verified = true);

enum class Stratum { E1, E2, E3, E4 };

std::string to_string(Stratum s);

struct GnEdge {
    std::size_t u = 0;  // u < v, positions in spec.vertices
    std::size_t v = 0;
    Stratum stratum = Stratum::E1;
};

struct GnGraph {
    VertexClassSpec spec;
    std::vector<GnEdge> edges;
    std::vector<std::size_t> w;  // C_{n+1..n+K}, L_{n+K}, R

    bool adjacent(std::size_t u, std::size_t v) const;
    std::optional<Stratum> stratum(std::size_t u, std::size_t v) const;
};

/// E3 joins L_i and L_j (i < j < R(n,3)) exactly when the witness joins
/// i-1 and j-1; vertices 0..n-2 of the witness must be independent.
GnGraph build_gn(const VertexClassSpec& spec);

/// A triangle of G_n as vertex positions, if any.
std::optional<std::array<std::size_t, 3>> check_triangle_free(const GnGraph& g);

/// within = 0 everywhere; cross(X, Y) = 1 iff the vertices holding X and Y
/// are adjacent; no overrides.
QuotientColoring induced_lower_coloring(const GnGraph& g);

struct StageResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LowerBoundReport {
    Natural n = 0;
    Natural k = 0;
    Natural ramsey_value = 0;
    RamseySource ramsey_source = RamseySource::builtin;
    Ordinal gamma;
    Ordinal bound;  // w^2*n + w*K + n, the established lower bound
    std::vector<StageResult> stages;
    std::optional<std::array<std::string, 3>> triangle;  // vertex names
    std::optional<CopyCertificate> blue_copy;
    std::optional<CopyCertificate> red_copy;
    std::optional<CopyCertificate> control_copy;  // red copy of w+(n-1)
    bool passed = false;
};

struct LowerBoundOptions {
    bool require_verified_witness = true;
    bool run_control = true;
};

/// Runs witness verification, construction, triangle check, and the exact
/// blue-3 and red w+n searches on the induced colouring.
LowerBoundReport verify_lower_bound(Natural n, const RamseyRecord& rec, const LowerBoundOptions& options = {});

std::string lower_report_to_json(const LowerBoundReport& report, int indent = 2);

/// Graphviz rendering; every edge carries a `stratum` attribute.
std::string gn_to_dot(const GnGraph& g);

}  // namespace orw
