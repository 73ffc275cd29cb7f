#include "orw/copies.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "orw/error.hpp"

namespace orw {

std::string to_string(CopyKind kind) {
    return kind == CopyKind::blue_3 ? "blue-3" : "red-omega-plus-n";
}

std::string to_string(LevelsVerdict v) {
    switch (v) {
        case LevelsVerdict::case_a: return "case-a";
        case LevelsVerdict::case_b: return "case-b";
        default: return "hypothesis-violated";
    }
}

std::vector<Ordinal> CopyCertificate::tail_points(std::size_t count) const {
    if (kind != CopyKind::red_omega_plus_n || !tail_class) {
        throw DomainError("tail points exist only for red certificates with a tail class");
    }
    const Exponent e = cb_rank(limit_point);
    const Exponent j = tail_class->cb_level;
    if (e == 0 || j >= e) throw DomainError("tail class does not accumulate at " + to_string(limit_point));
    const Ordinal base = drop_last_unit(limit_point);
    const std::set<Ordinal> skip(excluded.begin(), excluded.end());
    std::vector<Ordinal> out;
    for (Natural k = 1; out.size() < count; ++k) {
        Ordinal x = base + Ordinal::omega_power(e - 1, k);
        if (j + 1 < e) x = x + Ordinal::omega_power(j);
        if (!skip.count(x)) out.push_back(std::move(x));
    }
    return out;
}

namespace {

// The first `count` members of `id` above `floor` that occur in no override.
std::vector<Ordinal> free_members_above(const QuotientColoring& c, const NodeClassId& id, const Ordinal& floor,
                                        std::size_t count) {
    std::vector<Ordinal> out;
    if (count == 0) return out;
    const std::size_t probe = count + c.touched().size();
    for (Ordinal& a : class_members_above(c.gamma(), id, floor, probe)) {
        if (!c.is_touched(a)) out.push_back(std::move(a));
        if (out.size() == count) break;
    }
    return out;
}

std::vector<Ordinal> free_members(const QuotientColoring& c, const NodeClassId& id, std::size_t count) {
    std::vector<Ordinal> out;
    for (Ordinal& a : node_class(c.gamma(), id).enumerate(count + c.touched().size())) {
        if (!c.is_touched(a)) out.push_back(std::move(a));
        if (out.size() == count) break;
    }
    return out;
}

}  // namespace

std::optional<CopyCertificate> decide_blue_closed_3(const QuotientColoring& c) {
    // A triangle's override-free corners can be swapped for any other
    // override-free points of the same classes, so this finite set suffices.
    std::vector<Ordinal> points(c.touched().begin(), c.touched().end());
    for (const NodeClassId& id : c.classes()) {
        for (Ordinal& a : free_members(c, id, 3)) points.push_back(std::move(a));
    }
    std::sort(points.begin(), points.end());

    const std::size_t m = points.size();
    std::vector<std::vector<bool>> blue(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            blue[a][b] = blue[b][a] = c.color_of(points[a], points[b]) == Color::blue;
        }
    }
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!blue[a][b]) continue;
            for (std::size_t d = b + 1; d < m; ++d) {
                if (blue[a][d] && blue[b][d]) {
                    CopyCertificate cert;
                    cert.kind = CopyKind::blue_3;
                    cert.triangle = {points[a], points[b], points[d]};
                    return cert;
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// A possible top point: either a fixed override point or `capacity` free
// members of a class.
struct TopVertex {
    std::optional<Ordinal> point;
    std::size_t class_index = 0;
    std::size_t capacity = 1;
};

class RedSearch {
public:
    RedSearch(const QuotientColoring& c, Natural n) : c_(c), need_(n - 1) {}

    std::optional<CopyCertificate> run() {
        const Ordinal& gamma = c_.gamma();
        for (const NodeClassId& limit_class : c_.classes()) {
            if (limit_class.cb_level == 0) continue;
            if (class_size(gamma, limit_class) == Cardinality::finite(0)) continue;
            // Touched positions of the class, then the least free one: every
            // other free position sees a subset of what the least one sees.
            std::vector<Ordinal> limits;
            for (const Ordinal& t : c_.touched()) {
                if (classify(gamma, t) == limit_class) limits.push_back(t);
            }
            for (Ordinal& a : free_members(c_, limit_class, 1)) limits.push_back(std::move(a));
            for (const Ordinal& p : limits) {
                for (Exponent j = 0; j < limit_class.cb_level; ++j) {
                    if (auto cert = try_tail(p, NodeClassId{limit_class.cnf_index, j})) return cert;
                }
            }
        }
        return std::nullopt;
    }

private:
    std::optional<CopyCertificate> try_tail(const Ordinal& p, const NodeClassId& tail) {
        const Ordinal& gamma = c_.gamma();
        const std::size_t x = c_.index_of(tail);
        const std::size_t pc = c_.index_of(classify(gamma, p));
        if (c_.cross_at(x, x) != Color::red || c_.cross_at(x, pc) != Color::red) return std::nullopt;

        std::vector<TopVertex> vertices;
        for (const Ordinal& t : c_.touched()) {
            if (!(p < t)) continue;
            const std::size_t tc = c_.index_of(classify(gamma, t));
            if (c_.color_of(t, p) == Color::red && c_.cross_at(x, tc) == Color::red) {
                vertices.push_back(TopVertex{t, tc, 1});
            }
        }
        for (std::size_t y = 0; y < c_.class_count() && need_ > 0; ++y) {
            if (c_.cross_at(y, pc) != Color::red || c_.cross_at(x, y) != Color::red) continue;
            std::size_t available = free_members_above(c_, c_.classes()[y], p, need_).size();
            if (available == 0) continue;
            if (c_.cross_at(y, y) != Color::red) available = 1;
            vertices.push_back(TopVertex{std::nullopt, y, available});
        }
        vertices_ = std::move(vertices);
        chosen_.clear();
        if (!extend(0, need_)) return std::nullopt;

        CopyCertificate cert;
        cert.kind = CopyKind::red_omega_plus_n;
        cert.tail_class = tail;
        cert.limit_point = p;
        for (const Ordinal& t : c_.touched()) {
            if (classify(gamma, t) == tail) cert.excluded.push_back(t);
        }
        std::map<std::size_t, std::size_t> per_class;
        for (std::size_t v : chosen_) {
            if (vertices_[v].point) {
                cert.top_points.push_back(*vertices_[v].point);
            } else {
                ++per_class[vertices_[v].class_index];
            }
        }
        for (const auto& [y, k] : per_class) {
            for (Ordinal& a : free_members_above(c_, c_.classes()[y], p, k)) cert.top_points.push_back(std::move(a));
        }
        std::sort(cert.top_points.begin(), cert.top_points.end());
        return cert;
    }

    bool compatible(std::size_t u, std::size_t v) const {
        const TopVertex& a = vertices_[u];
        const TopVertex& b = vertices_[v];
        if (a.point && b.point) return c_.color_of(*a.point, *b.point) == Color::red;
        return c_.cross_at(a.class_index, b.class_index) == Color::red;
    }

    // Chooses `remaining` more vertices with index >= from; class slots may
    // repeat up to their capacity.
    bool extend(std::size_t from, std::size_t remaining) {
        if (remaining == 0) return true;
        for (std::size_t v = from; v < vertices_.size(); ++v) {
            const std::size_t used = static_cast<std::size_t>(std::count(chosen_.begin(), chosen_.end(), v));
            if (used >= vertices_[v].capacity) continue;
            bool ok = true;
            for (std::size_t u : chosen_) {
                if (u != v && !compatible(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen_.push_back(v);
            if (extend(v, remaining - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const QuotientColoring& c_;
    std::size_t need_;
    std::vector<TopVertex> vertices_;
    std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<CopyCertificate> decide_red_closed_omega_plus_n(const QuotientColoring& c, Natural n) {
    if (n == 0) throw DomainError("decide_red_closed_omega_plus_n needs n >= 1");
    return RedSearch(c, n).run();
}

namespace {

CertificateCheck fail(std::string why) { return CertificateCheck{false, std::move(why)}; }

CertificateCheck check_points(const QuotientColoring& c, const std::vector<Ordinal>& points, Color want) {
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (c.color_of(points[a], points[b]) != want) {
                return fail("pair {" + to_string(points[a]) + ", " + to_string(points[b]) + "} has colour " +
                            std::to_string(1 - to_int(want)));
            }
        }
    }
    return CertificateCheck{true, {}};
}

}  // namespace

CertificateCheck check_certificate(const QuotientColoring& c, const CopyCertificate& cert, std::size_t depth) {
    const Ordinal& gamma = c.gamma();
    if (cert.kind == CopyKind::blue_3) {
        if (cert.triangle.size() != 3) throw DomainError("blue certificate needs exactly three points");
        for (const Ordinal& a : cert.triangle) {
            if (!(a < gamma)) return fail(to_string(a) + " is not below " + to_string(gamma));
        }
        if (cert.triangle[0] == cert.triangle[1] || cert.triangle[0] == cert.triangle[2] ||
            cert.triangle[1] == cert.triangle[2]) {
            return fail("triangle points are not distinct");
        }
        return check_points(c, cert.triangle, Color::blue);
    }

    if (!cert.tail_class) throw DomainError("red certificate needs a tail class");
    const Ordinal& p = cert.limit_point;
    const NodeClassId& tail = *cert.tail_class;
    if (!(p < gamma)) return fail("limit point " + to_string(p) + " is not below " + to_string(gamma));
    if (!p.is_limit()) return fail("limit point " + to_string(p) + " is not a limit ordinal");
    if (cnf_index(gamma, p) != tail.cnf_index || tail.cb_level >= cb_rank(p)) {
        return fail("tail class " + to_string(tail) + " does not accumulate at " + to_string(p));
    }
    for (std::size_t k = 0; k < cert.top_points.size(); ++k) {
        const Ordinal& t = cert.top_points[k];
        if (!(p < t)) return fail("top point " + to_string(t) + " is not above the limit point");
        if (!(t < gamma)) return fail("top point " + to_string(t) + " is not below " + to_string(gamma));
        if (k > 0 && !(cert.top_points[k - 1] < t)) return fail("top points are not strictly increasing");
    }
    std::vector<Ordinal> points = cert.tail_points(depth);
    for (const Ordinal& x : points) {
        if (!(x < p) || classify(gamma, x) != tail) {
            return fail("tail point " + to_string(x) + " is outside " + to_string(tail));
        }
    }
    points.push_back(p);
    points.insert(points.end(), cert.top_points.begin(), cert.top_points.end());
    return check_points(c, points, Color::red);
}

LevelsReport check_omega_squared_levels(const QuotientColoring& c, Natural n) {
    if (c.gamma() != Ordinal::omega_power(2)) throw DomainError("omega-squared levels need gamma = w^2");
    if (!is_omega_homogeneous(c).holds) throw DomainError("colouring is not w-homogeneous");
    if (!is_normal(c).holds()) throw DomainError("colouring is not normal");

    LevelsReport report;
    if (auto red = decide_red_closed_omega_plus_n(c, n)) {
        report.violated = "red homogeneous closed copy of w+" + std::to_string(n);
        report.red_copy = std::move(red);
        return report;
    }
    for (const NodeClassId& id : c.classes()) {
        if (class_size(c.gamma(), id).is_infinite() && c.within(id) == Color::blue) {
            report.violated = "blue homogeneous closed copy of w";
            report.blue_class = id;
            return report;
        }
    }
    const NodeClassId level0{1, 0};
    const NodeClassId level1{1, 1};
    report.case_a = c.cross(level0, level1) == Color::blue;
    // Each W_i lies in level 0 and meets finitely many overrides, so a free
    // point of level 1 sees blue cofinally in W_i exactly when the class pair
    // is blue; the overridden points are finitely many and cannot be cofinal.
    report.case_b = report.case_a;
    report.verdict = report.case_a ? LevelsVerdict::case_a
                     : report.case_b ? LevelsVerdict::case_b
                                     : LevelsVerdict::hypothesis_violated;
    if (!report.case_a && !report.case_b) report.violated = "neither alternative holds";
    return report;
}

QuotientColoring restrict_to_component(const QuotientColoring& c, Natural i) {
    const Ordinal& gamma = c.gamma();
    if (i < 1 || i > component_count(gamma)) {
        throw DomainError("component " + std::to_string(i) + " out of range for " + to_string(gamma));
    }
    const Exponent e = component_exponent(gamma, i);
    const Ordinal base = partial_sum(gamma, i - 1);
    const Ordinal top = partial_sum(gamma, i);
    const Ordinal shift = i == 1 ? Ordinal() : base + Ordinal::natural(1);
    const Ordinal target = Ordinal::omega_power(e);

    QuotientColoring::Builder builder(target);
    for (Exponent a = 0; a <= e; ++a) {
        for (Exponent b = a; b <= e; ++b) {
            builder.cross(NodeClassId{1, a}, NodeClassId{1, b}, c.cross(NodeClassId{i, a}, NodeClassId{i, b}));
        }
    }
    auto pull_back = [&](const Ordinal& y) -> std::optional<Ordinal> {
        if (!(y < top) || cnf_index(gamma, y) != i) return std::nullopt;
        if (i == 1) return y;
        const Ordinal rest = left_subtract(base, y);
        if (rest.is_finite()) return Ordinal::natural(rest.to_natural() - 1);
        return rest;
    };
    for (const auto& [pair, color] : c.overrides()) {
        auto a = pull_back(pair.first);
        auto b = pull_back(pair.second);
        if (a && b) builder.override_pair(*a, *b, color);
    }
    return builder.build();
}

}  // namespace orw
