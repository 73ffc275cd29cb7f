#include "orw/replay.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"
#include "orw/error.hpp"

namespace orw {

// ---------------------------------------------------------------- variables

VariableSpace::VariableSpace(Natural n, Natural k) : n_(n), k_(k) {
    if (n < 3) throw DomainError("replay needs n >= 3");
    if (k < 2) throw DomainError("replay needs K >= 2");
    for (Natural i = 1; i <= n + k; ++i)
        for (Exponent j = 0; j <= top_level(i); ++j) classes_.push_back({i, j});

    names_.emplace_back();  // variable 0 does not exist
    tilde_keys_.emplace_back();
    hat_keys_.emplace_back();
    auto add = [this](std::string name, std::optional<TildeKey> tk, std::optional<std::pair<Natural, Exponent>> hk) {
        int v = static_cast<int>(names_.size());
        by_name_.emplace(name, v);
        names_.push_back(std::move(name));
        tilde_keys_.push_back(tk);
        hat_keys_.push_back(hk);
        return v;
    };
    for (Natural i = 1; i <= n; ++i)
        for (Exponent l = 0; l <= 1; ++l)
            hat_[{i, l}] = add("h(" + std::to_string(i) + "," + std::to_string(l) + ")", std::nullopt, std::pair{i, l});

    auto pair_name = [](const NodeClassId& a, const NodeClassId& b) {
        return "t(" + std::to_string(a.cnf_index) + "," + std::to_string(a.cb_level) + ";" +
               std::to_string(b.cnf_index) + "," + std::to_string(b.cb_level) + ")";
    };
    for (const NodeClassId& a : classes_) {
        for (const NodeClassId& b : classes_) {
            if (a.cnf_index == b.cnf_index) continue;
            if (is_l_class(a) && is_l_class(b) && a.cnf_index < b.cnf_index) continue;
            int v = add(pair_name(a, b), TildeKey{a, b}, std::nullopt);
            tilde_[Key{a.cnf_index, a.cb_level, b.cnf_index, b.cb_level}] = v;
        }
    }
    for (Natural a = 1; a <= n + k; ++a) {
        for (Natural b = a + 1; b <= n + k; ++b) {
            NodeClassId la = l_class(a), lb = l_class(b);
            tilde_[Key{la.cnf_index, la.cb_level, lb.cnf_index, lb.cb_level}] =
                tilde_.at(Key{lb.cnf_index, lb.cb_level, la.cnf_index, la.cb_level});
        }
    }
}

Exponent VariableSpace::top_level(Natural i) const {
    if (i < 1 || i > n_ + k_) throw DomainError("component " + std::to_string(i) + " out of range");
    return i <= n_ ? 2 : 1;
}

NodeClassId VariableSpace::l_class(Natural i) const { return {i, top_level(i)}; }

bool VariableSpace::is_class(const NodeClassId& c) const {
    return c.cnf_index >= 1 && c.cnf_index <= n_ + k_ && c.cb_level <= top_level(c.cnf_index);
}

bool VariableSpace::is_l_class(const NodeClassId& c) const {
    return is_class(c) && c.cb_level == top_level(c.cnf_index);
}

bool VariableSpace::has_tilde(const NodeClassId& from, const NodeClassId& to) const {
    return tilde_.count(Key{from.cnf_index, from.cb_level, to.cnf_index, to.cb_level}) != 0;
}

int VariableSpace::tilde(const NodeClassId& from, const NodeClassId& to) const {
    auto it = tilde_.find(Key{from.cnf_index, from.cb_level, to.cnf_index, to.cb_level});
    if (it == tilde_.end())
        throw DomainError("no variable t(" + to_string(from) + ";" + to_string(to) + ")");
    return it->second;
}

int VariableSpace::hat(Natural i, Exponent l) const {
    auto it = hat_.find({i, l});
    if (it == hat_.end()) throw DomainError("no variable h(" + std::to_string(i) + "," + std::to_string(l) + ")");
    return it->second;
}

int VariableSpace::lookup(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw DomainError("unknown variable " + name);
    return it->second;
}

std::optional<VariableSpace::TildeKey> VariableSpace::tilde_key(int var) const { return tilde_keys_.at(var); }

std::optional<std::pair<Natural, Exponent>> VariableSpace::hat_key(int var) const { return hat_keys_.at(var); }

std::vector<int> VariableSpace::decision_order() const {
    std::vector<int> order(size());
    for (int v = 1; v <= size(); ++v) order[v - 1] = v;
    return order;
}

// ------------------------------------------------------------------ schemas

namespace {

const std::vector<Schema> kSchemas{Schema::C1, Schema::C2,  Schema::C3,  Schema::C4,  Schema::C5,
                                   Schema::C6, Schema::C7,  Schema::C8,  Schema::C9,  Schema::C10,
                                   Schema::C11, Schema::C12, Schema::C13, Schema::C14};

std::size_t binomial(std::size_t a, std::size_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    long double r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * static_cast<long double>(a - b + i) / static_cast<long double>(i);
    return static_cast<std::size_t>(r + 0.5L);
}

}  // namespace

const std::vector<Schema>& all_schemas() { return kSchemas; }

std::string to_string(Schema s) { return "C" + std::to_string(static_cast<int>(s) + 1); }

Schema schema_from_string(const std::string& s) {
    for (Schema x : kSchemas)
        if (to_string(x) == s) return x;
    throw DomainError("unknown schema " + s);
}

std::string schema_anchor(Schema s) {
    switch (s) {
        case Schema::C1: return "a class is not blue toward both levels 0 and 1 of an w^2 component";
        case Schema::C2: return "levels 0 and 1 of an w^2 component are not both blue toward one level";
        case Schema::C3: return "the top of an w^2 component is not blue to both lower levels";
        case Schema::C4: return "two level-0 classes of w-components blue toward a common level are joined red";
        case Schema::C5: return "red c^(k,2,l) forces blue toward level l or toward L_k";
        case Schema::C6: return "some level of an w^2 component below n receives blue";
        case Schema::C7: return "the top of an w^2 component below n is blue to a lower level";
        case Schema::C8: return "n-1 red L-classes red toward (k,l) and L_k force blue c^(k,2,l)";
        case Schema::C9: return "nothing above component k is blue toward B_k";
        case Schema::C10: return "A/L alternation toward A_k and L_k";
        case Schema::C11: return "all level-0 w-classes blue toward (i,j) make every inner L red toward it";
        case Schema::C12: return "no blue triangle across three classes";
        case Schema::C13: return "no blue triangle among L-classes";
        case Schema::C14: return "blue from an upper L to X makes inner Ls red toward the complement of X";
    }
    return "";
}

bool schema_redundant(Schema s) { return s == Schema::C4 || s == Schema::C10; }

std::size_t c8_instance_count(Natural n, Natural k) {
    std::size_t total = 0;
    for (Natural kk = 1; kk <= n; ++kk) total += 2 * binomial(static_cast<std::size_t>(n + k - kk), n - 1);
    return total;
}

ClauseSystem instantiate_clauses(Natural n, Natural k, const ClauseOptions& options) {
    ClauseSystem sys{VariableSpace(n, k), {}};
    const VariableSpace& sp = sys.space;
    const Natural top = n + k;
    auto T = [&sp](const NodeClassId& a, const NodeClassId& b) { return sp.tilde(a, b); };
    auto H = [&sp](Natural i, Exponent l) { return sp.hat(i, l); };
    auto L = [&sp](Natural i) { return sp.l_class(i); };

    Schema current = Schema::C1;
    std::set<Clause> seen;
    auto emit = [&](Clause c) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (!seen.insert(c).second) return;
        sys.clauses.push_back({std::move(c), current});
    };
    auto begin = [&](Schema s) {
        current = s;
        seen.clear();
        return options.enabled.count(s) != 0;
    };
    // Sources of the w+n lemmas toward component kk.
    auto upper_sources = [&](Natural kk) {
        std::vector<NodeClassId> out;
        for (Natural i = kk + 1; i <= n; ++i)
            for (Exponent j = 0; j <= 1; ++j) out.push_back({i, j});
        for (Natural i = n + 1; i <= top; ++i) out.push_back({i, 0});
        return out;
    };

    if (begin(Schema::C1))
        for (Natural kk = 1; kk <= n; ++kk)
            for (const NodeClassId& s : sp.classes())
                if (s.cnf_index != kk) emit({-T(s, {kk, 0}), -T(s, {kk, 1})});

    if (begin(Schema::C2))
        for (Natural i = 1; i <= n; ++i)
            for (Natural kk = 1; kk <= n; ++kk)
                if (i != kk)
                    for (Exponent l = 0; l <= 2; ++l) emit({-T({i, 0}, {kk, l}), -T({i, 1}, {kk, l})});

    if (begin(Schema::C3))
        for (Natural i = 1; i <= n; ++i) emit({-H(i, 0), -H(i, 1)});

    if (begin(Schema::C4))
        for (Natural i = n + 1; i <= top; ++i)
            for (Natural m = n + 1; m <= top; ++m)
                if (i != m)
                    for (Natural kk = 1; kk <= n; ++kk)
                        for (Exponent l = 0; l <= 2; ++l)
                            emit({-T({m, 0}, {kk, l}), -T({i, 0}, {kk, l}), -T({m, 0}, {i, 0})});

    if (begin(Schema::C5))
        for (Natural kk = 1; kk <= n; ++kk)
            for (Exponent l = 0; l <= 1; ++l)
                for (const NodeClassId& s : upper_sources(kk)) emit({H(kk, l), T(s, {kk, l}), T(s, {kk, 2})});

    if (begin(Schema::C6))
        for (Natural kk = 1; kk < n; ++kk)
            for (const NodeClassId& s : upper_sources(kk)) emit({T(s, {kk, 0}), T(s, {kk, 1}), T(s, {kk, 2})});

    if (begin(Schema::C7))
        for (Natural i = 1; i < n; ++i) emit({H(i, 0), H(i, 1)});

    if (begin(Schema::C8)) {
        if (c8_instance_count(n, k) > options.c8_limit)
            throw ResourceLimit("C8 would need " + std::to_string(c8_instance_count(n, k)) +
                                " clauses, above the limit of " + std::to_string(options.c8_limit));
        for (Natural kk = 1; kk <= n; ++kk) {
            for (Exponent l = 0; l <= 1; ++l) {
                // Lexicographic (n-1)-subsets of kk+1..top.
                std::vector<Natural> idx(n - 1);
                for (Natural t = 0; t < n - 1; ++t) idx[t] = kk + 1 + t;
                if (idx.back() > top) continue;
                for (;;) {
                    Clause c;
                    for (Natural t = 0; t < idx.size(); ++t)
                        for (Natural u = t + 1; u < idx.size(); ++u) c.push_back(T(L(idx[u]), L(idx[t])));
                    for (Natural i : idx) c.push_back(T(L(i), {kk, l}));
                    for (Natural i : idx) c.push_back(T(L(i), L(kk)));
                    c.push_back(H(kk, l));
                    emit(std::move(c));
                    std::size_t p = idx.size();
                    while (p > 0 && idx[p - 1] == top - (idx.size() - p)) --p;
                    if (p == 0) break;
                    ++idx[p - 1];
                    for (std::size_t q = p; q < idx.size(); ++q) idx[q] = idx[q - 1] + 1;
                }
            }
        }
    }

    if (begin(Schema::C9))
        for (Natural kk = 1; kk < n; ++kk)
            for (Exponent l = 0; l <= 1; ++l)
                for (const NodeClassId& s : upper_sources(kk)) emit({-H(kk, l), -T(s, {kk, l})});

    if (begin(Schema::C10)) {
        for (Natural kk = 1; kk < n; ++kk) {
            for (Exponent l = 0; l <= 1; ++l) {
                // Guard: h(kk, 1-l) true names A_kk = (kk, l).
                int g = H(kk, 1 - l);
                NodeClassId a_k{kk, l}, l_k = L(kk);
                for (Natural i = n + 1; i <= top; ++i) emit({-g, T({i, 0}, a_k), T({i, 0}, l_k)});
                for (Natural i = kk + 1; i <= n; ++i) {
                    int a = T({i, 0}, a_k), b = T({i, 1}, l_k), c = T({i, 1}, a_k), d = T({i, 0}, l_k);
                    emit({-g, -a, b});
                    emit({-g, a, -b});
                    emit({-g, -c, d});
                    emit({-g, c, -d});
                    emit({-g, a, c});
                    emit({-g, -a, -c});
                }
            }
        }
    }

    if (begin(Schema::C11)) {
        for (Natural i = 1; i < n; ++i) {
            for (Exponent j = 0; j <= 2; ++j) {
                for (Natural mp = n + 1; mp < top; ++mp) {
                    Clause c;
                    for (Natural m = n + 1; m <= top; ++m) c.push_back(-T({m, 0}, {i, j}));
                    c.push_back(-T(L(mp), {i, j}));
                    emit(std::move(c));
                }
            }
        }
    }

    if (begin(Schema::C12)) {
        const auto& cls = sp.classes();
        for (const NodeClassId& a : cls)
            for (const NodeClassId& b : cls) {
                if (a.cnf_index == b.cnf_index) continue;
                for (const NodeClassId& x : cls) {
                    if (x.cnf_index == a.cnf_index || x.cnf_index == b.cnf_index) continue;
                    if (a > b && sp.is_l_class(a) && sp.is_l_class(b)) continue;  // same clause as (b, a)
                    emit({-T(a, x), -T(b, x), -T(a, b)});
                }
            }
        for (Natural i = 1; i <= n; ++i)
            for (Exponent j = 0; j <= 1; ++j)
                for (const NodeClassId& x : cls)
                    if (x.cnf_index != i) emit({-T({i, 2}, x), -T({i, j}, x), -H(i, j)});
    }

    if (begin(Schema::C13))
        for (Natural a = 1; a <= top; ++a)
            for (Natural b = a + 1; b <= top; ++b)
                for (Natural c = b + 1; c <= top; ++c) emit({-T(L(b), L(a)), -T(L(c), L(a)), -T(L(c), L(b))});

    if (begin(Schema::C14))
        for (Natural kk = 1; kk <= n; ++kk)
            for (Natural i = kk + 1; i <= n; ++i)
                for (Exponent l = 0; l <= 1; ++l)
                    for (Natural m = n + 1; m < top; ++m) {
                        int g = H(kk, 1 - l);
                        emit({-g, -T(L(i), {kk, l}), -T(L(m), L(kk))});
                        emit({-g, -T(L(i), L(kk)), -T(L(m), {kk, l})});
                    }

    return sys;
}

CnfFormula ClauseSystem::formula() const {
    CnfFormula f;
    f.num_vars = space.size();
    f.clauses.reserve(clauses.size());
    for (const TaggedClause& c : clauses) f.clauses.push_back(c.literals);
    return f;
}

std::map<Schema, std::size_t> ClauseSystem::counts() const {
    std::map<Schema, std::size_t> out;
    for (const TaggedClause& c : clauses) ++out[c.schema];
    return out;
}

std::string ClauseSystem::render(const Clause& c) const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " | ";
        if (c[i] < 0) out += "-";
        out += space.name(std::abs(c[i]));
    }
    return out;
}

// ------------------------------------------------------------ table bridge

std::vector<bool> assignment_from_tables(const VariableSpace& space, const NormalTable& normal,
                                         const CanonicalTable& canonical) {
    std::vector<bool> a(space.size() + 1, false);
    for (int v = 1; v <= space.size(); ++v) {
        if (auto tk = space.tilde_key(v)) {
            if (!canonical.contains(tk->from, tk->to))
                throw DomainError("canonical table lacks " + space.name(v));
            a[v] = canonical.at(tk->from, tk->to) == Color::blue;
        } else {
            auto hk = *space.hat_key(v);
            if (!normal.contains(hk.first, 2, hk.second)) throw DomainError("normal table lacks " + space.name(v));
            a[v] = normal.at(hk.first, 2, hk.second) == Color::blue;
        }
    }
    return a;
}

std::vector<std::size_t> falsified_clauses(const ClauseSystem& sys, const std::vector<bool>& assignment) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sys.clauses.size(); ++i) {
        bool ok = false;
        for (Literal l : sys.clauses[i].literals)
            if (assignment.at(std::abs(l)) == (l > 0)) {
                ok = true;
                break;
            }
        if (!ok) out.push_back(i);
    }
    return out;
}

// ------------------------------------------------------------------ decide

DecideReport decide(const ClauseSystem& sys, std::uint64_t decision_budget) {
    DecideReport r;
    CnfFormula f = sys.formula();
    r.variables = static_cast<std::size_t>(f.num_vars);
    r.clauses = f.clauses.size();
    SolverOptions opt;
    opt.decision_budget = decision_budget;
    opt.order = sys.space.decision_order();
    SolveResult s = solve(f, opt);
    r.status = s.status;
    r.decisions = s.decisions;
    r.conflicts = s.conflicts;
    if (s.status == SatStatus::unsat) {
        r.trace_steps = s.trace.size();
        r.trace_digest = trace_digest(s.trace);
        TraceCheck chk = check_refutation(f, s.trace);
        r.trace_verified = chk.valid;
        r.trace_failure = chk.failure;
    } else if (s.status == SatStatus::sat) {
        r.model_verified = satisfies(f, s.model);
        for (int v = 1; v <= f.num_vars; ++v)
            if (s.model[v]) r.true_variables.push_back(sys.space.name(v));
    }
    return r;
}

std::string to_string(ReplayMode m) { return m == ReplayMode::ramsey_k ? "ramsey" : "square"; }

ReplayReport replay_theorem(Natural n, ReplayMode mode, std::optional<Natural> ramsey_value,
                            const std::string& ramsey_provenance, const ReplayOptions& options) {
    if (n < 3) throw DomainError("replay needs n >= 3");
    ReplayReport rep;
    rep.n = n;
    rep.mode = mode;
    if (mode == ReplayMode::ramsey_k) {
        if (!ramsey_value)
            throw DomainError("ramsey-K replay needs R(" + std::to_string(2 * n - 3) + ",3)");
        rep.ramsey_value = ramsey_value;
        rep.ramsey_provenance = ramsey_provenance;
        rep.k = *ramsey_value + 1;
    } else {
        rep.k = n * n - 4;
    }
    rep.gamma = Ordinal::omega_power(2, n) + Ordinal::omega_power(1, rep.k) + Ordinal::natural(1);

    ClauseSystem sys = instantiate_clauses(n, rep.k, options.clauses);
    rep.schema_counts = sys.counts();
    rep.result = decide(sys, options.decision_budget);

    if (options.redundancy_check) {
        ClauseOptions reduced = options.clauses;
        reduced.enabled.erase(Schema::C4);
        reduced.enabled.erase(Schema::C10);
        rep.without_redundant = decide(instantiate_clauses(n, rep.k, reduced), options.decision_budget);
        const SatStatus a = rep.result.status, b = rep.without_redundant->status;
        // Dropping clauses can only turn unsat into sat; a flip in the
        // other direction, or any flip at all, means C4/C10 were not implied.
        rep.redundancy_consistent =
            a == SatStatus::resource_limit || b == SatStatus::resource_limit || a == b;
    }
    rep.passed = rep.result.status == SatStatus::unsat && rep.result.trace_verified && rep.redundancy_consistent;
    return rep;
}

namespace {

nlohmann::json decide_json(const DecideReport& d) {
    nlohmann::json j{{"status", to_string(d.status)},
                     {"variables", d.variables},
                     {"clauses", d.clauses},
                     {"decisions", d.decisions},
                     {"conflicts", d.conflicts}};
    if (d.status == SatStatus::unsat) {
        j["trace"] = {{"steps", d.trace_steps}, {"digest", d.trace_digest}, {"verified", d.trace_verified}};
        if (!d.trace_failure.empty()) j["trace"]["failure"] = d.trace_failure;
    }
    if (d.status == SatStatus::sat) j["model"] = {{"verified", d.model_verified}, {"true", d.true_variables}};
    return j;
}

}  // namespace

std::string replay_report_to_json(const ReplayReport& r, int indent) {
    using nlohmann::json;
    json counts = json::object();
    for (const auto& [s, c] : r.schema_counts) counts[to_string(s)] = c;
    json j{{"n", r.n},
           {"k", r.k},
           {"mode", to_string(r.mode)},
           {"gamma", to_string(r.gamma)},
           {"schema_counts", counts},
           {"result", decide_json(r.result)},
           {"redundancy_consistent", r.redundancy_consistent},
           {"passed", r.passed}};
    if (r.ramsey_value)
        j["ramsey"] = {{"n", 2 * r.n - 3}, {"value", *r.ramsey_value}, {"provenance", r.ramsey_provenance}};
    if (r.without_redundant) j["without_redundant"] = decide_json(*r.without_redundant);
    return j.dump(indent);
}

DimacsExport export_dimacs(const ClauseSystem& sys) {
    using nlohmann::json;
    DimacsExport out;
    out.cnf = to_dimacs(sys.formula(), {"replay clause system n=" + std::to_string(sys.space.n()) +
                                            " K=" + std::to_string(sys.space.k())});
    json vars = json::array();
    for (int v = 1; v <= sys.space.size(); ++v) vars.push_back({{"index", v}, {"name", sys.space.name(v)}});
    json tags = json::array();
    for (const TaggedClause& c : sys.clauses) tags.push_back(to_string(c.schema));
    json side{{"n", sys.space.n()}, {"k", sys.space.k()}, {"variables", vars}, {"clause_schemas", tags}};
    out.sidecar = side.dump(2);
    return out;
}

}  // namespace orw
