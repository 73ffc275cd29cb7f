#include "orw/lower_bound.hpp"

#include <map>
#include <sstream>

#include "json.hpp"
#include "orw/coloring_io.hpp"
#include "orw/error.hpp"

namespace orw {

std::string GnVertex::name() const {
    static const char* letters = "ABLCR";
    std::string out(1, letters[static_cast<int>(kind)]);
    if (kind != VertexKind::R) out += std::to_string(index);
    return out;
}

std::size_t VertexClassSpec::find(VertexKind kind, Natural index) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (vertices[v].kind == kind && vertices[v].index == index) return v;
    }
    throw DomainError("G_n has no vertex " + GnVertex{kind, index, {}}.name());
}

std::size_t VertexClassSpec::vertex_of(const NodeClassId& id) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        for (const NodeClassId& c : vertices[v].classes) {
            if (c == id) return v;
        }
    }
    throw DomainError("class " + to_string(id) + " belongs to no vertex of G_n");
}

VertexClassSpec build_partition(Natural n, const RamseyRecord& rec, bool require_verified) {
    if (n < 3) throw DomainError("the construction needs n >= 3");
    if (rec.n != n) throw DomainError("Ramsey record is for n = " + std::to_string(rec.n));
    if (rec.value <= n + 1 || rec.witness.order() + 1 != rec.value) {
        throw DomainError("Ramsey record needs a witness on R(n,3) - 1 vertices with R(n,3) > n + 1");
    }
    if (require_verified && !verify_witness(rec.witness, n)) {
        throw DomainError("witness for R(" + std::to_string(n) + ", 3) does not verify");
    }
    VertexClassSpec spec;
    spec.n = n;
    spec.k = rec.value - n;
    spec.ramsey = rec;
    spec.gamma = Ordinal::omega_power(2, n) + Ordinal::omega_power(1, spec.k) + Ordinal::natural(n - 1);
    for (Natural i = 1; i <= n; ++i) {
        spec.vertices.push_back({VertexKind::A, i, {{i, 0}}});
        spec.vertices.push_back({VertexKind::B, i, {{i, 1}}});
        spec.vertices.push_back({VertexKind::L, i, {{i, 2}}});
    }
    for (Natural i = n + 1; i <= n + spec.k; ++i) {
        spec.vertices.push_back({VertexKind::C, i, {{i, 0}}});
        spec.vertices.push_back({VertexKind::L, i, {{i, 1}}});
    }
    GnVertex r{VertexKind::R, 0, {}};
    for (Natural m = 1; m + 2 <= n; ++m) r.classes.push_back({n + spec.k + m, 0});
    spec.vertices.push_back(std::move(r));
    return spec;
}

std::string to_string(Stratum s) { return "E" + std::to_string(static_cast<int>(s) + 1); }

bool GnGraph::adjacent(std::size_t u, std::size_t v) const { return stratum(u, v).has_value(); }

std::optional<Stratum> GnGraph::stratum(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    for (const GnEdge& e : edges) {
        if (e.u == u && e.v == v) return e.stratum;
    }
    return std::nullopt;
}

GnGraph build_gn(const VertexClassSpec& spec) {
    const Natural n = spec.n;
    const Natural k = spec.k;
    const WitnessGraph& r = spec.ramsey.witness;
    for (std::size_t a = 0; a + 1 < n; ++a) {
        for (std::size_t b = a + 1; b + 1 < n; ++b) {
            if (r.has_edge(a, b)) throw DomainError("witness vertices 0..n-2 are not independent; relabel first");
        }
    }
    GnGraph g;
    g.spec = spec;
    std::map<std::pair<std::size_t, std::size_t>, Stratum> seen;
    auto add = [&](std::size_t u, std::size_t v, Stratum s) {
        if (u > v) std::swap(u, v);
        auto [it, inserted] = seen.emplace(std::make_pair(u, v), s);
        if (!inserted) {
            throw DomainError("edge " + spec.vertices[u].name() + "-" + spec.vertices[v].name() +
                              " lies in two strata");
        }
    };
    auto A = [&](Natural i) { return spec.find(VertexKind::A, i); };
    auto B = [&](Natural i) { return spec.find(VertexKind::B, i); };
    auto L = [&](Natural i) { return spec.find(VertexKind::L, i); };
    auto C = [&](Natural i) { return spec.find(VertexKind::C, i); };

    for (Natural i = 1; i <= n; ++i) {
        for (Natural j = i + 1; j <= n; ++j) {
            add(L(i), A(j), Stratum::E1);
            add(A(i), B(j), Stratum::E1);
        }
        add(A(i), B(i), Stratum::E1);
        add(B(i), L(i), Stratum::E1);
    }
    for (Natural i = n + 1; i < n + k; ++i) add(C(i), L(i), Stratum::E2);
    for (Natural i = 1; i < n + k; ++i) {
        for (Natural j = i + 1; j < n + k; ++j) {
            if (r.has_edge(i - 1, j - 1)) add(L(i), L(j), Stratum::E3);
        }
    }
    for (Natural i = n + 1; i <= n + k; ++i) g.w.push_back(C(i));
    g.w.push_back(L(n + k));
    g.w.push_back(spec.find(VertexKind::R));
    for (std::size_t x : g.w) {
        for (Natural i = 1; i <= n; ++i) add(x, A(i), Stratum::E4);
    }
    for (const auto& [pair, s] : seen) g.edges.push_back(GnEdge{pair.first, pair.second, s});
    return g;
}

std::optional<std::array<std::size_t, 3>> check_triangle_free(const GnGraph& g) {
    const std::size_t m = g.spec.vertices.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (const GnEdge& e : g.edges) adj[e.u][e.v] = adj[e.v][e.u] = true;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!adj[a][b]) continue;
            for (std::size_t c = b + 1; c < m; ++c) {
                if (adj[a][c] && adj[b][c]) return std::array<std::size_t, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

QuotientColoring induced_lower_coloring(const GnGraph& g) {
    QuotientColoring::Builder builder(g.spec.gamma, Color::red);
    for (const GnEdge& e : g.edges) {
        for (const NodeClassId& x : g.spec.vertices[e.u].classes) {
            for (const NodeClassId& y : g.spec.vertices[e.v].classes) builder.cross(x, y, Color::blue);
        }
    }
    return builder.build();
}

namespace {

Ordinal lower_bound_value(Natural n, Natural k) {
    return Ordinal::omega_power(2, n) + Ordinal::omega_power(1, k) + Ordinal::natural(n);
}

std::string describe(const CopyCertificate& cert) {
    if (cert.kind == CopyKind::blue_3) {
        return "blue triangle {" + to_string(cert.triangle[0]) + ", " + to_string(cert.triangle[1]) + ", " +
               to_string(cert.triangle[2]) + "}";
    }
    std::string out = "red copy: tail in " + to_string(*cert.tail_class) + " converging to " +
                      to_string(cert.limit_point);
    if (!cert.top_points.empty()) {
        out += ", then";
        for (const Ordinal& t : cert.top_points) out += " " + to_string(t);
    }
    return out;
}

}  // namespace

LowerBoundReport verify_lower_bound(Natural n, const RamseyRecord& rec, const LowerBoundOptions& options) {
    LowerBoundReport report;
    report.n = n;
    report.ramsey_value = rec.value;
    report.ramsey_source = rec.source;
    report.k = rec.value > n ? rec.value - n : 0;

    const WitnessVerdict verdict = verify_witness(rec.witness, n);
    StageResult witness{"witness", verdict.valid, {}};
    if (verdict.triangle) {
        witness.detail = "triangle on witness vertices " + std::to_string((*verdict.triangle)[0]) + ", " +
                         std::to_string((*verdict.triangle)[1]) + ", " + std::to_string((*verdict.triangle)[2]);
    } else if (verdict.independent_set) {
        witness.detail = "independent set of size " + std::to_string(n) + ":";
        for (std::size_t v : *verdict.independent_set) witness.detail += " " + std::to_string(v);
    } else {
        witness.detail = "triangle-free with no independent set of size " + std::to_string(n);
    }
    report.stages.push_back(witness);
    if (!verdict.valid && options.require_verified_witness) return report;

    const VertexClassSpec spec = build_partition(n, relabel_red_prefix(rec), false);
    const GnGraph g = build_gn(spec);
    report.gamma = spec.gamma;
    report.bound = lower_bound_value(n, spec.k);

    const auto triangle = check_triangle_free(g);
    StageResult tri{"triangle-free", !triangle.has_value(), {}};
    if (triangle) {
        report.triangle = std::array<std::string, 3>{spec.vertices[(*triangle)[0]].name(),
                                                     spec.vertices[(*triangle)[1]].name(),
                                                     spec.vertices[(*triangle)[2]].name()};
        tri.detail = "triangle " + (*report.triangle)[0] + " " + (*report.triangle)[1] + " " + (*report.triangle)[2];
    } else {
        tri.detail = std::to_string(spec.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) +
                     " edges, no triangle";
    }
    report.stages.push_back(tri);

    const QuotientColoring c = induced_lower_coloring(g);
    report.blue_copy = decide_blue_closed_3(c);
    report.stages.push_back({"no-blue-3", !report.blue_copy.has_value(),
                             report.blue_copy ? describe(*report.blue_copy) : "no blue homogeneous 3"});
    report.red_copy = decide_red_closed_omega_plus_n(c, n);
    report.stages.push_back({"no-red-omega-plus-n", !report.red_copy.has_value(),
                             report.red_copy ? describe(*report.red_copy)
                                             : "no red homogeneous closed copy of w+" + std::to_string(n)});
    if (options.run_control) report.control_copy = decide_red_closed_omega_plus_n(c, n - 1);

    report.passed = true;
    for (const StageResult& s : report.stages) report.passed = report.passed && s.passed;
    return report;
}

std::string lower_report_to_json(const LowerBoundReport& report, int indent) {
    using nlohmann::json;
    json stages = json::array();
    for (const StageResult& s : report.stages) {
        stages.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    }
    auto cert = [](const std::optional<CopyCertificate>& c) {
        return c ? json::parse(certificate_to_json(*c)) : json(nullptr);
    };
    json doc = {
        {"n", report.n},
        {"K", report.k},
        {"ramsey", {{"value", report.ramsey_value}, {"source", to_string(report.ramsey_source)}}},
        {"gamma", to_string(report.gamma)},
        {"lower_bound", to_string(report.bound)},
        {"stages", stages},
        {"triangle", report.triangle ? json(*report.triangle) : json(nullptr)},
        {"blue_copy", cert(report.blue_copy)},
        {"red_copy", cert(report.red_copy)},
        {"control_copy", cert(report.control_copy)},
        {"passed", report.passed},
    };
    return doc.dump(indent);
}

std::string gn_to_dot(const GnGraph& g) {
    static const char* colours[] = {"black", "blue", "red", "darkgreen"};
    std::ostringstream out;
    out << "graph G" << g.spec.n << " {\n";
    for (const GnVertex& v : g.spec.vertices) {
        out << "  " << v.name() << " [label=\"" << v.name() << "\\n";
        for (std::size_t k = 0; k < v.classes.size(); ++k) out << (k ? " " : "") << to_string(v.classes[k]);
        out << "\"];\n";
    }
    for (const GnEdge& e : g.edges) {
        out << "  " << g.spec.vertices[e.u].name() << " -- " << g.spec.vertices[e.v].name() << " [stratum="
            << to_string(e.stratum) << ", color=" << colours[static_cast<int>(e.stratum)] << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace orw
