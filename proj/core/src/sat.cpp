#include "orw/sat.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "orw/error.hpp"

namespace orw {

std::string to_string(SatStatus s) {
    switch (s) {
        case SatStatus::sat: return "sat";
        case SatStatus::unsat: return "unsat";
        case SatStatus::resource_limit: return "resource-limit";
    }
    return "?";
}

namespace {

constexpr std::size_t kNoReason = std::numeric_limits<std::size_t>::max();

inline std::size_t lit_index(Literal l) {
    return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0);
}

class Solver {
public:
    Solver(const CnfFormula& f, const SolverOptions& opt) : opt_(opt), nv_(f.num_vars) {
        if (nv_ < 0) throw DomainError("negative variable count");
        value_.assign(nv_ + 1, -1);
        level_.assign(nv_ + 1, 0);
        reason_.assign(nv_ + 1, kNoReason);
        seen_.assign(nv_ + 1, 0);
        watches_.resize(2 * (nv_ + 1));

        if (opt.order.empty()) {
            for (int v = 1; v <= nv_; ++v) order_.push_back(v);
        } else {
            order_ = opt.order;
            std::vector<char> present(nv_ + 1, 0);
            for (int v : order_) {
                if (v < 1 || v > nv_ || present[v]) throw DomainError("decision order is not a permutation of the variables");
                present[v] = 1;
            }
            for (int v = 1; v <= nv_; ++v)
                if (!present[v]) order_.push_back(v);
        }
        position_.assign(nv_ + 1, 0);
        for (std::size_t p = 0; p < order_.size(); ++p) position_[order_[p]] = p;
        activity_.assign(nv_ + 1, 0.0);
        heap_index_.assign(nv_ + 1, kNotInHeap);
        if (opt.branching == Branching::activity)
            for (int v : order_) heap_insert(v);

        db_.reserve(f.clauses.size());
        for (const Clause& c : f.clauses) {
            Clause norm;
            norm.reserve(c.size());
            bool tautology = false;
            for (Literal l : c) {
                if (l == 0 || std::abs(l) > nv_) throw DomainError("literal out of range: " + std::to_string(l));
                if (std::find(norm.begin(), norm.end(), l) != norm.end()) continue;
                if (std::find(norm.begin(), norm.end(), -l) != norm.end()) tautology = true;
                norm.push_back(l);
            }
            db_.push_back(std::move(norm));
            taut_.push_back(tautology ? 1 : 0);
        }
        input_count_ = db_.size();
    }

    SolveResult run() {
        SolveResult out;
        // Empty or unit input clauses are handled before search.
        for (std::size_t id = 0; id < input_count_; ++id) {
            if (taut_[id]) continue;
            const Clause& c = db_[id];
            if (c.empty()) {
                out.status = SatStatus::unsat;
                if (opt_.record_trace) out.trace.push_back({{}, {id}});
                return finish(out);
            }
            if (c.size() == 1) {
                Literal l = c[0];
                int v = lit_value(l);
                if (v == 0) {
                    out.status = SatStatus::unsat;
                    refute(id, out);
                    return finish(out);
                }
                if (v < 0) enqueue(l, id);
            } else {
                watch(id);
            }
        }

        for (;;) {
            std::size_t confl = propagate();
            if (confl != kNoReason) {
                ++stats_.conflicts;
                if (decision_level() == 0) {
                    out.status = SatStatus::unsat;
                    refute(confl, out);
                    return finish(out);
                }
                analyze_and_learn(confl, out);
                if (opt_.branching == Branching::activity && ++since_restart_ >= restart_limit()) {
                    since_restart_ = 0;
                    ++restart_count_;
                    backtrack(0);
                }
                continue;
            }
            int v = pick_branch_variable();
            if (v == 0) {
                out.status = SatStatus::sat;
                out.model.assign(nv_ + 1, false);
                for (int x = 1; x <= nv_; ++x) out.model[x] = value_[x] == 1;
                return finish(out);
            }
            if (stats_.decisions >= opt_.decision_budget) {
                out.status = SatStatus::resource_limit;
                return finish(out);
            }
            ++stats_.decisions;
            trail_lim_.push_back(trail_.size());
            enqueue(-v, kNoReason);
        }
    }

private:
    struct Stats {
        std::uint64_t decisions = 0, conflicts = 0, propagations = 0;
    };

    SolveResult& finish(SolveResult& out) {
        out.decisions = stats_.decisions;
        out.conflicts = stats_.conflicts;
        out.propagations = stats_.propagations;
        out.restarts = restart_count_;
        return out;
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    // 1 true, 0 false, -1 unassigned.
    int lit_value(Literal l) const {
        int v = value_[std::abs(l)];
        if (v < 0) return -1;
        return l > 0 ? v : 1 - v;
    }

    void enqueue(Literal l, std::size_t reason) {
        int v = std::abs(l);
        value_[v] = l > 0 ? 1 : 0;
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(l);
    }

    void watch(std::size_t id) {
        const Clause& c = db_[id];
        watches_[lit_index(c[0])].push_back(id);
        watches_[lit_index(c[1])].push_back(id);
    }

    std::size_t propagate() {
        while (qhead_ < trail_.size()) {
            Literal p = trail_[qhead_++];
            ++stats_.propagations;
            Literal false_lit = -p;
            std::vector<std::size_t>& ws = watches_[lit_index(false_lit)];
            std::size_t i = 0, j = 0;
            std::size_t conflict = kNoReason;
            while (i < ws.size()) {
                std::size_t id = ws[i++];
                Clause& c = db_[id];
                if (c[0] == false_lit) std::swap(c[0], c[1]);
                if (lit_value(c[0]) == 1) {
                    ws[j++] = id;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k) {
                    if (lit_value(c[k]) != 0) {
                        std::swap(c[1], c[k]);
                        watches_[lit_index(c[1])].push_back(id);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = id;
                if (lit_value(c[0]) == 0) {
                    conflict = id;
                    while (i < ws.size()) ws[j++] = ws[i++];
                } else {
                    enqueue(c[0], id);
                }
            }
            ws.resize(j);
            if (conflict != kNoReason) return conflict;
        }
        return kNoReason;
    }

    int pick_branch_variable() {
        if (opt_.branching == Branching::activity) {
            while (!heap_.empty()) {
                int v = heap_pop();
                if (value_[v] < 0) return v;
            }
            return 0;
        }
        while (next_ < order_.size() && value_[order_[next_]] >= 0) ++next_;
        return next_ < order_.size() ? order_[next_] : 0;
    }

    void backtrack(int level) {
        if (decision_level() <= level) return;
        std::size_t stop = trail_lim_[level];
        for (std::size_t t = trail_.size(); t-- > stop;) {
            int v = std::abs(trail_[t]);
            value_[v] = -1;
            reason_[v] = kNoReason;
            next_ = std::min(next_, position_[v]);
            if (opt_.branching == Branching::activity && heap_index_[v] == kNotInHeap) heap_insert(v);
        }
        trail_.resize(stop);
        trail_lim_.resize(level);
        qhead_ = trail_.size();
    }

    // Resolves away every level-0 literal still marked in seen_, walking the
    // trail backwards so each reason clashes on exactly one variable.
    void eliminate_level_zero(std::vector<int>& marked, std::vector<std::size_t>* chain) {
        std::size_t end = trail_lim_.empty() ? trail_.size() : trail_lim_[0];
        for (std::size_t t = end; t-- > 0;) {
            int v = std::abs(trail_[t]);
            if (!seen_[v]) continue;
            std::size_t r = reason_[v];
            if (chain) chain->push_back(r);
            for (Literal q : db_[r]) {
                int u = std::abs(q);
                if (u == v || seen_[u]) continue;
                seen_[u] = 1;
                marked.push_back(u);
            }
        }
        for (int v : marked) seen_[v] = 0;
        marked.clear();
    }

    void refute(std::size_t confl, SolveResult& out) {
        std::vector<std::size_t> chain{confl};
        std::vector<int> marked;
        for (Literal q : db_[confl]) {
            int v = std::abs(q);
            if (!seen_[v]) {
                seen_[v] = 1;
                marked.push_back(v);
            }
        }
        eliminate_level_zero(marked, &chain);
        if (opt_.record_trace) out.trace.push_back({{}, std::move(chain)});
    }

    void analyze_and_learn(std::size_t confl, SolveResult& out) {
        std::vector<std::size_t> chain{confl};
        std::vector<Literal> learnt{0};
        std::vector<int> zero_marked;
        std::vector<int> marked;
        int counter = 0;
        Literal pivot = 0;
        std::size_t index = trail_.size();
        std::size_t clause_id = confl;
        const int current = decision_level();

        for (;;) {
            for (Literal q : db_[clause_id]) {
                int v = std::abs(q);
                if (pivot != 0 && v == std::abs(pivot)) continue;
                if (seen_[v]) continue;
                seen_[v] = 1;
                if (level_[v] == 0) {
                    zero_marked.push_back(v);
                } else {
                    bump(v);
                    marked.push_back(v);
                    if (level_[v] == current)
                        ++counter;
                    else
                        learnt.push_back(q);
                }
            }
            do {
                --index;
            } while (!seen_[std::abs(trail_[index])] || level_[std::abs(trail_[index])] != current);
            pivot = trail_[index];
            --counter;
            if (counter == 0) break;
            clause_id = reason_[std::abs(pivot)];
            chain.push_back(clause_id);
        }
        learnt[0] = -pivot;
        for (int v : marked) seen_[v] = 0;
        // Level-0 literals are dropped from the learned clause; their
        // reasons go on the chain so the trace still resolves exactly.
        for (int v : zero_marked) seen_[v] = 1;
        eliminate_level_zero(zero_marked, opt_.record_trace ? &chain : nullptr);

        int back = 0;
        std::size_t second = 1;
        for (std::size_t k = 1; k < learnt.size(); ++k) {
            if (level_[std::abs(learnt[k])] > back) {
                back = level_[std::abs(learnt[k])];
                second = k;
            }
        }
        if (learnt.size() > 1) std::swap(learnt[1], learnt[second]);

        increment_ /= 0.95;

        std::size_t id = db_.size();
        if (opt_.record_trace) out.trace.push_back({learnt, std::move(chain)});
        db_.push_back(learnt);
        taut_.push_back(0);
        backtrack(back);
        if (learnt.size() > 1) watch(id);
        enqueue(learnt[0], id);
    }

    // Luby sequence 1,1,2,1,1,2,4,... scaled by restart_unit.
    std::uint64_t restart_limit() const {
        std::uint64_t i = restart_count_ + 1;
        for (;;) {
            std::uint64_t k = 1;
            while (((std::uint64_t{1} << k) - 1) < i) ++k;
            if (i == (std::uint64_t{1} << k) - 1) return opt_.restart_unit * (std::uint64_t{1} << (k - 1));
            i -= (std::uint64_t{1} << (k - 1)) - 1;
        }
    }

    bool heap_before(int a, int b) const {
        if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
        return position_[a] < position_[b];
    }
    void heap_up(std::size_t i) {
        int v = heap_[i];
        while (i > 0) {
            std::size_t parent = (i - 1) / 2;
            if (!heap_before(v, heap_[parent])) break;
            heap_[i] = heap_[parent];
            heap_index_[heap_[i]] = i;
            i = parent;
        }
        heap_[i] = v;
        heap_index_[v] = i;
    }
    void heap_down(std::size_t i) {
        int v = heap_[i];
        for (;;) {
            std::size_t child = 2 * i + 1;
            if (child >= heap_.size()) break;
            if (child + 1 < heap_.size() && heap_before(heap_[child + 1], heap_[child])) ++child;
            if (!heap_before(heap_[child], v)) break;
            heap_[i] = heap_[child];
            heap_index_[heap_[i]] = i;
            i = child;
        }
        heap_[i] = v;
        heap_index_[v] = i;
    }
    void heap_insert(int v) {
        heap_.push_back(v);
        heap_up(heap_.size() - 1);
    }
    int heap_pop() {
        int top = heap_[0];
        heap_index_[top] = kNotInHeap;
        int last = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_[0] = last;
            heap_index_[last] = 0;
            heap_down(0);
        }
        return top;
    }
    void bump(int v) {
        if (opt_.branching != Branching::activity) return;
        activity_[v] += increment_;
        if (activity_[v] > 1e100) {
            for (int x = 1; x <= nv_; ++x) activity_[x] *= 1e-100;
            increment_ *= 1e-100;
        }
        if (heap_index_[v] != kNotInHeap) heap_up(heap_index_[v]);
    }

    static constexpr std::size_t kNotInHeap = std::numeric_limits<std::size_t>::max();

    const SolverOptions& opt_;
    int nv_;
    std::vector<double> activity_;
    double increment_ = 1.0;
    std::vector<int> heap_;
    std::vector<std::size_t> heap_index_;
    std::uint64_t since_restart_ = 0;
    std::uint64_t restart_count_ = 0;
    std::vector<Clause> db_;
    std::vector<char> taut_;
    std::size_t input_count_ = 0;
    std::vector<int> value_;
    std::vector<int> level_;
    std::vector<std::size_t> reason_;
    std::vector<char> seen_;
    std::vector<std::vector<std::size_t>> watches_;
    std::vector<Literal> trail_;
    std::vector<std::size_t> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<int> order_;
    std::vector<std::size_t> position_;
    std::size_t next_ = 0;
    Stats stats_;
};

}  // namespace

SolveResult solve(const CnfFormula& f, const SolverOptions& options) {
    Solver s(f, options);
    return s.run();
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& model) {
    if (model.size() < static_cast<std::size_t>(f.num_vars) + 1) return false;
    for (const Clause& c : f.clauses) {
        bool ok = false;
        for (Literal l : c) {
            if (model[std::abs(l)] == (l > 0)) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

TraceCheck check_refutation(const CnfFormula& f, const std::vector<ProofStep>& trace) {
    TraceCheck out;
    const std::size_t m = f.clauses.size();
    std::vector<char> mark(2 * (static_cast<std::size_t>(f.num_vars) + 1), 0);
    auto in_range = [&](Literal l) { return l != 0 && std::abs(l) <= f.num_vars; };
    auto clause_of = [&](std::size_t id) -> const Clause& { return id < m ? f.clauses[id] : trace[id - m].clause; };

    for (std::size_t s = 0; s < trace.size(); ++s) {
        const ProofStep& step = trace[s];
        auto fail = [&](const std::string& why) {
            out.failure = "step " + std::to_string(s) + ": " + why;
            out.steps_checked = s;
            return out;
        };
        if (step.chain.empty()) return fail("empty chain");
        for (std::size_t id : step.chain)
            if (id >= m + s) return fail("chain cites clause " + std::to_string(id) + " not yet available");

        std::vector<Literal> members;
        auto add = [&](Literal l) {
            if (!mark[lit_index(l)]) {
                mark[lit_index(l)] = 1;
                members.push_back(l);
            }
        };
        for (Literal l : clause_of(step.chain[0])) {
            if (!in_range(l)) return fail("literal out of range");
            add(l);
        }
        for (std::size_t k = 1; k < step.chain.size(); ++k) {
            const Clause& c = clause_of(step.chain[k]);
            Literal pivot = 0;
            int clashes = 0;
            for (Literal l : c) {
                if (!in_range(l)) return fail("literal out of range");
                if (mark[lit_index(-l)]) {
                    if (pivot != l) ++clashes;
                    pivot = l;
                }
            }
            if (clashes != 1) {
                for (Literal l : members) mark[lit_index(l)] = 0;
                return fail("resolution with clause " + std::to_string(step.chain[k]) + " has " +
                            std::to_string(clashes) + " clashing pairs");
            }
            mark[lit_index(-pivot)] = 0;
            for (Literal l : c)
                if (l != pivot) add(l);
        }
        std::vector<Literal> result;
        for (Literal l : members)
            if (mark[lit_index(l)]) result.push_back(l);
        for (Literal l : members) mark[lit_index(l)] = 0;

        std::vector<Literal> claimed = step.clause;
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        std::sort(claimed.begin(), claimed.end());
        claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
        if (result != claimed) return fail("resolvent differs from the recorded clause");
    }
    out.steps_checked = trace.size();
    if (trace.empty() || !trace.back().clause.empty()) {
        out.failure = "trace does not end with the empty clause";
        return out;
    }
    out.valid = true;
    return out;
}

std::string trace_digest(const std::vector<ProofStep>& trace) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    for (const ProofStep& s : trace) {
        mix(s.clause.size());
        for (Literal l : s.clause) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(l)));
        mix(s.chain.size());
        for (std::size_t id : s.chain) mix(id);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string to_dimacs(const CnfFormula& f, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const std::string& c : comments) os << "c " << c << '\n';
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& c : f.clauses) {
        for (Literal l : c) os << l << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    bool header = false;
    long long declared_clauses = 0;
    Clause current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        std::size_t line_start = pos;
        pos = eol + 1;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c' || line[first] == '%') continue;
        std::istringstream is(line);
        if (line[first] == 'p') {
            std::string p, fmt;
            long long v = -1, c = -1;
            is >> p >> fmt >> v >> c;
            if (header || fmt != "cnf" || v < 0 || c < 0 || v > std::numeric_limits<int>::max())
                throw ParseError("bad DIMACS header", line_start + first);
            f.num_vars = static_cast<int>(v);
            declared_clauses = c;
            header = true;
            continue;
        }
        if (!header) throw ParseError("clause before DIMACS header", line_start + first);
        long long lit = 0;
        while (is >> lit) {
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::llabs(lit) > f.num_vars) throw ParseError("literal exceeds declared variable count", line_start);
            current.push_back(static_cast<Literal>(lit));
        }
        if (!is.eof()) throw ParseError("non-numeric token in clause", line_start);
    }
    if (!header) throw ParseError("missing DIMACS header", 0);
    if (!current.empty()) throw ParseError("last clause is not terminated by 0", text.size());
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw ParseError("clause count differs from header", text.size());
    return f;
}

}  // namespace orw
