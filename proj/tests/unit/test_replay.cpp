#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "orw/error.hpp"
#include "orw/lower_bound.hpp"
#include "orw/replay.hpp"

using namespace orw;

namespace {

// Builds a clause from "name" / "-name" tokens.
Clause clause_of(const VariableSpace& sp, const std::vector<std::string>& lits) {
    Clause c;
    for (const std::string& s : lits) c.push_back(s[0] == '-' ? -sp.lookup(s.substr(1)) : sp.lookup(s));
    std::sort(c.begin(), c.end());
    return c;
}

bool has_clause(const ClauseSystem& sys, Schema schema, const Clause& sorted) {
    return std::any_of(sys.clauses.begin(), sys.clauses.end(), [&](const TaggedClause& t) {
        Clause c = t.literals;
        std::sort(c.begin(), c.end());
        return t.schema == schema && c == sorted;
    });
}

std::size_t count_subsets(std::size_t universe, std::size_t size) {
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << universe); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == size) ++count;
    return count;
}

QuotientColoring lower_coloring(Natural n) {
    return induced_lower_coloring(build_gn(build_partition(n, relabel_red_prefix(builtin_record(n)))));
}

}  // namespace

TEST_CASE("variable space shape") {
    for (Natural n : {3, 4, 5}) {
        for (Natural k : {2, 5, 9}) {
            const VariableSpace sp(n, k);
            const std::size_t classes = 3 * n + 2 * k;
            const std::size_t ordered = classes * classes - (9 * n + 4 * k);
            const std::size_t aliases = (n + k) * (n + k - 1) / 2;
            CHECK(sp.classes().size() == classes);
            CHECK(static_cast<std::size_t>(sp.size()) == 2 * n + ordered - aliases);
        }
    }
    const VariableSpace sp(3, 7);
    CHECK(sp.tilde({2, 2}, {3, 2}) == sp.tilde({3, 2}, {2, 2}));
    CHECK(sp.tilde({5, 1}, {1, 2}) == sp.tilde({1, 2}, {5, 1}));
    CHECK(sp.tilde({4, 0}, {1, 2}) != sp.tilde({1, 2}, {4, 0}));
    CHECK(sp.name(sp.tilde({2, 2}, {3, 2})) == "t(3,2;2,2)");
    CHECK(sp.name(sp.hat(2, 1)) == "h(2,1)");
    CHECK_THROWS_AS(sp.tilde({1, 0}, {1, 2}), DomainError);
    CHECK_THROWS_AS(sp.tilde({4, 2}, {1, 0}), DomainError);
    CHECK_THROWS_AS(sp.hat(4, 0), DomainError);
    CHECK_THROWS_AS(VariableSpace(2, 5), DomainError);
    CHECK_THROWS_AS(VariableSpace(3, 1), DomainError);
    // Hats come first in the decision order.
    const auto order = sp.decision_order();
    for (int i = 0; i < 6; ++i) CHECK(sp.hat_key(order[i]).has_value());
}

TEST_CASE("catalogue instances") {
    const ClauseSystem sys = instantiate_clauses(3, 7);
    const VariableSpace& sp = sys.space;

    CHECK(has_clause(sys, Schema::C8,
                     clause_of(sp, {"t(3,2;2,2)", "t(2,2;1,0)", "t(3,2;1,0)", "t(2,2;1,2)", "t(3,2;1,2)", "h(1,0)"})));
    CHECK(has_clause(sys, Schema::C3, clause_of(sp, {"-h(2,0)", "-h(2,1)"})));
    CHECK(has_clause(sys, Schema::C5, clause_of(sp, {"h(1,1)", "t(4,0;1,1)", "t(4,0;1,2)"})));
    CHECK(has_clause(sys, Schema::C7, clause_of(sp, {"h(2,0)", "h(2,1)"})));
    CHECK_FALSE(has_clause(sys, Schema::C7, clause_of(sp, {"h(3,0)", "h(3,1)"})));
    CHECK(has_clause(sys, Schema::C13, clause_of(sp, {"-t(5,1;4,1)", "-t(6,1;4,1)", "-t(6,1;5,1)"})));
    CHECK(has_clause(sys, Schema::C9, clause_of(sp, {"-h(1,1)", "-t(8,0;1,1)"})));
    CHECK_FALSE(has_clause(sys, Schema::C9, clause_of(sp, {"-h(1,1)", "-t(8,1;1,1)"})));
    CHECK(has_clause(sys, Schema::C12, clause_of(sp, {"-t(3,2;1,0)", "-t(3,0;1,0)", "-h(3,0)"})));
    CHECK(has_clause(sys, Schema::C14, clause_of(sp, {"-h(1,1)", "-t(3,2;1,0)", "-t(5,1;1,2)"})));

    // C8 count against a bitmask enumeration of the index subsets.
    std::size_t expected = 0;
    for (Natural k = 1; k <= 3; ++k) expected += 2 * count_subsets(10 - k, 2);
    CHECK(sys.counts().at(Schema::C8) == expected);
    CHECK(c8_instance_count(3, 7) == expected);
    CHECK(c8_instance_count(4, 15) == 2 * (count_subsets(18, 3) + count_subsets(17, 3) + count_subsets(16, 3) +
                                           count_subsets(15, 3)));

    // Every schema is populated and tagged; no clause is empty.
    const auto counts = sys.counts();
    for (Schema s : all_schemas()) CHECK_MESSAGE(counts.count(s) == 1, to_string(s));
    for (const TaggedClause& c : sys.clauses) CHECK_FALSE(c.literals.empty());

    ClauseOptions only_c3;
    only_c3.enabled = {Schema::C3};
    CHECK(instantiate_clauses(3, 7, only_c3).clauses.size() == 3);

    ClauseOptions tiny;
    tiny.c8_limit = 10;
    CHECK_THROWS_AS(instantiate_clauses(3, 7, tiny), ResourceLimit);
}

TEST_CASE("schema names") {
    for (Schema s : all_schemas()) {
        CHECK(schema_from_string(to_string(s)) == s);
        CHECK_FALSE(schema_anchor(s).empty());
    }
    CHECK(to_string(Schema::C14) == "C14");
    CHECK(schema_redundant(Schema::C4));
    CHECK(schema_redundant(Schema::C10));
    CHECK_FALSE(schema_redundant(Schema::C8));
    CHECK_THROWS_AS(schema_from_string("C15"), DomainError);
}

TEST_CASE("consistency bridge: lower-bound colourings satisfy the catalogue") {
    // G_n's colouring avoids red closed w+n and blue 3 on
    // w^2*n + w*(R(n,3)-n) + (n-1), which contains the replay ordinal for
    // K = R(n,3) - n as an initial segment.
    for (Natural n : {3, 4, 5}) {
        const QuotientColoring c = lower_coloring(n);
        const Normality norm = is_normal(c);
        REQUIRE(norm.holds());
        const CanonicalTable canon = extract_canonical_table(c);
        const Natural k = builtin_record(n).value - n;
        const ClauseSystem sys = instantiate_clauses(n, k);
        const auto assignment = assignment_from_tables(sys.space, *norm.table, canon);
        const auto bad = falsified_clauses(sys, assignment);
        CHECK_MESSAGE(bad.empty(), "n=" << n << " first falsified: "
                                          << (bad.empty() ? "" : to_string(sys.clauses[bad[0]].schema) + " " +
                                                                     sys.render(sys.clauses[bad[0]].literals)));
        // So the system at that K is satisfiable, as the solver confirms.
        CHECK(decide(sys).status == SatStatus::sat);
    }
}

TEST_CASE("bridge detects a falsified clause") {
    const QuotientColoring c = lower_coloring(3);
    const ClauseSystem sys = instantiate_clauses(3, 3);
    auto assignment = assignment_from_tables(sys.space, *is_normal(c).table, extract_canonical_table(c));
    // Make the top of component 1 blue to both lower levels.
    assignment[sys.space.hat(1, 0)] = true;
    assignment[sys.space.hat(1, 1)] = true;
    const auto bad = falsified_clauses(sys, assignment);
    REQUIRE_FALSE(bad.empty());
    CHECK(sys.clauses[bad[0]].schema == Schema::C3);
}

TEST_CASE("theorem replays are unsat with verified traces") {
    struct Case {
        Natural n;
        ReplayMode mode;
        std::optional<Natural> r;
        Natural k;
    };
    for (const Case& c : {Case{3, ReplayMode::ramsey_k, 6, 7}, Case{3, ReplayMode::square_k, std::nullopt, 5},
                          Case{4, ReplayMode::ramsey_k, 14, 15}, Case{4, ReplayMode::square_k, std::nullopt, 12}}) {
        const ReplayReport rep = replay_theorem(c.n, c.mode, c.r, "test");
        CHECK(rep.k == c.k);
        CHECK(rep.result.status == SatStatus::unsat);
        CHECK(rep.result.trace_verified);
        CHECK(rep.result.decisions < 10'000'000);
        REQUIRE(rep.without_redundant.has_value());
        CHECK(rep.without_redundant->status == SatStatus::unsat);
        CHECK(rep.redundancy_consistent);
        CHECK(rep.passed);
        CHECK(rep.gamma == Ordinal::omega_power(2, c.n) + Ordinal::omega_power(1, c.k) + Ordinal::natural(1));
    }
    CHECK_THROWS_AS(replay_theorem(3, ReplayMode::ramsey_k, std::nullopt), DomainError);
}

TEST_CASE("dropping C8 leaves a model with a red L-block") {
    ClauseOptions opt;
    opt.enabled.erase(Schema::C8);
    const ClauseSystem sys = instantiate_clauses(3, 7, opt);
    const CnfFormula f = sys.formula();
    SolverOptions so;
    so.order = sys.space.decision_order();
    const SolveResult r = solve(f, so);
    REQUIRE(r.status == SatStatus::sat);
    CHECK(satisfies(f, r.model));
    for (Natural a = 4; a <= 10; ++a)
        for (Natural b = a + 1; b <= 10; ++b) CHECK_FALSE(r.model[sys.space.tilde(sys.space.l_class(b), sys.space.l_class(a))]);
    // The model does violate C8 itself.
    const ClauseSystem full = instantiate_clauses(3, 7);
    const auto bad = falsified_clauses(full, r.model);
    REQUIRE_FALSE(bad.empty());
    for (std::size_t i : bad) CHECK(full.clauses[i].schema == Schema::C8);
}

TEST_CASE("monotonicity in K for n = 3") {
    for (Natural k = 5; k <= 8; ++k) {
        const DecideReport d = decide(instantiate_clauses(3, k));
        CHECK_MESSAGE(d.status == SatStatus::unsat, "K=" << k);
        CHECK(d.trace_verified);
    }
}

TEST_CASE("fixed-order branching also refutes the n = 3 systems") {
    for (Natural k : {5, 7}) {
        const ClauseSystem sys = instantiate_clauses(3, k);
        const CnfFormula f = sys.formula();
        SolverOptions so;
        so.branching = Branching::static_order;
        so.order = sys.space.decision_order();
        const SolveResult r = solve(f, so);
        REQUIRE(r.status == SatStatus::unsat);
        CHECK(check_refutation(f, r.trace).valid);
    }
}

TEST_CASE("DIMACS export with sidecar") {
    const ClauseSystem sys = instantiate_clauses(3, 5);
    const DimacsExport ex = export_dimacs(sys);
    const CnfFormula f = parse_dimacs(ex.cnf);
    CHECK(f.num_vars == sys.space.size());
    CHECK(f.clauses == sys.formula().clauses);
    const auto side = nlohmann::json::parse(ex.sidecar);
    CHECK(side["variables"].size() == static_cast<std::size_t>(sys.space.size()));
    CHECK(side["variables"][0]["name"] == "h(1,0)");
    CHECK(side["clause_schemas"].size() == sys.clauses.size());
    CHECK(side["clause_schemas"][0] == "C1");
}

TEST_CASE("replay report JSON") {
    const ReplayReport rep = replay_theorem(3, ReplayMode::square_k, std::nullopt);
    const auto j = nlohmann::json::parse(replay_report_to_json(rep));
    CHECK(j["k"] == 5);
    CHECK(j["mode"] == "square");
    CHECK(j["gamma"] == "w^2*3 + w*5 + 1");
    CHECK(j["result"]["status"] == "unsat");
    CHECK(j["result"]["trace"]["verified"] == true);
    CHECK(j["result"]["trace"]["digest"].get<std::string>().size() == 16);
    CHECK(j["passed"] == true);
    // Identical inputs give identical reports.
    CHECK(replay_report_to_json(rep) == replay_report_to_json(replay_theorem(3, ReplayMode::square_k, std::nullopt)));
}
