// orw: command-line front end for the closed-Ramsey toolkit.
//
// Exit codes: 0 pass (or nothing to report), 1 a mathematical failure or
// counterexample, 2 usage, input or resource errors.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orw/bounds.hpp"
#include "orw/coloring_io.hpp"
#include "orw/copies.hpp"
#include "orw/error.hpp"
#include "orw/lower_bound.hpp"
#include "orw/ramsey.hpp"
#include "orw/replay.hpp"

using namespace orw;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

// Builtin literature values, overridden by --table or $ORW_TABLE, with
// R(2,3)..R(4,3) recomputed by exhaustive search.
RamseyTable load_table(const std::string& path_option) {
    RamseyTable t = RamseyTable::defaults();
    std::string path = path_option;
    if (path.empty())
        if (const char* env = std::getenv("ORW_TABLE")) path = env;
    if (!path.empty()) t.merge(RamseyTable::from_json(read_file(path)));
    t.compute_small(4);
    return t;
}

std::string bracket(const RamseyEntry& e) {
    std::string s = e.exact() ? std::to_string(e.lower) : "[" + std::to_string(e.lower) + "," + std::to_string(e.upper) + "]";
    return s + (e.provenance == ValueProvenance::external ? "*" : "");
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
    Natural nmax = 8;
    bool json = false;
    std::string table;
};

int cmd_bounds(const BoundsArgs& a) {
    const auto rows = bounds_table(a.nmax, load_table(a.table));
    if (a.json) {
        std::cout << bounds_to_json(rows) << '\n';
        return kPass;
    }
    std::cout << std::left << std::setw(4) << "n" << std::setw(20) << "lower" << std::setw(20) << "upper_square"
              << std::setw(20) << "upper_ramsey" << std::setw(20) << "upper_prior" << std::setw(16) << "square<ramsey"
              << "R values used\n";
    for (const BoundsRow& r : rows) {
        std::string used;
        for (const auto& [m, e] : r.ramsey_values_used) used += "R(" + std::to_string(m) + ",3)=" + bracket(e) + " ";
        std::cout << std::left << std::setw(4) << r.n << std::setw(20) << to_string(r.lower) << std::setw(20)
                  << to_string(r.upper_square) << std::setw(20) << to_string(r.upper_ramsey) << std::setw(20)
                  << to_string(r.upper_prior) << std::setw(16) << to_string(r.square_better) << used << '\n';
    }
    std::cout << "* external value from the configured Ramsey table\n";
    return kPass;
}

// ------------------------------------------------------------------- lower

struct LowerArgs {
    Natural n = 3;
    std::string witness;
    bool json = false;
    std::string dot;
    std::string coloring;
};

int cmd_lower(const LowerArgs& a) {
    RamseyRecord rec;
    if (!a.witness.empty()) {
        auto [file_n, g] = witness_from_json(read_file(a.witness));
        if (file_n != a.n)
            throw UsageError("witness file is for n=" + std::to_string(file_n) + ", not n=" + std::to_string(a.n));
        rec = RamseyRecord{a.n, static_cast<Natural>(g.order()) + 1, g, RamseySource::user_file};
    } else {
        if (!has_builtin_record(a.n) || a.n < 3)
            throw UsageError("no builtin witness for n=" + std::to_string(a.n) + "; pass --witness FILE");
        rec = builtin_record(a.n);
    }
    const LowerBoundReport rep = verify_lower_bound(a.n, rec);
    if (!a.dot.empty() || !a.coloring.empty()) {
        if (rep.stages.empty() || !rep.stages[0].passed) throw UsageError("cannot build G_n: witness does not verify");
        const GnGraph g = build_gn(build_partition(a.n, relabel_red_prefix(rec)));
        if (!a.dot.empty()) write_file(a.dot, gn_to_dot(g));
        if (!a.coloring.empty()) write_file(a.coloring, coloring_to_json(induced_lower_coloring(g)));
    }
    if (a.json) {
        std::cout << lower_report_to_json(rep) << '\n';
    } else {
        std::cout << "lower bound for n=" << a.n << " (R(" << a.n << ",3)=" << rep.ramsey_value << ", "
                  << to_string(rep.ramsey_source) << ")\n";
        for (const StageResult& s : rep.stages)
            std::cout << "  " << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << '\n';
        if (rep.passed) std::cout << "R^cl(w+" << a.n << ",3) >= " << to_string(rep.bound) << '\n';
    }
    return rep.passed ? kPass : kFail;
}

// ------------------------------------------------------------------- upper

struct UpperArgs {
    Natural n = 3;
    std::string k = "square";
    std::uint64_t budget = 10'000'000;
    bool json = false;
    std::string dimacs;
    std::string table;
};

int cmd_upper(const UpperArgs& a) {
    const ReplayMode mode = a.k == "ramsey" ? ReplayMode::ramsey_k : ReplayMode::square_k;
    std::optional<Natural> r;
    std::string provenance;
    if (mode == ReplayMode::ramsey_k) {
        const RamseyTable t = load_table(a.table);
        const auto e = t.find(2 * a.n - 3);
        if (!e) throw UsageError("missing Ramsey data: R(" + std::to_string(2 * a.n - 3) + ",3) is needed");
        r = e->upper;
        provenance = to_string(e->provenance) + (e->exact() ? "" : " (upper end of bracket)");
    }
    ReplayOptions opt;
    opt.decision_budget = a.budget;
    const ReplayReport rep = replay_theorem(a.n, mode, r, provenance, opt);
    if (!a.dimacs.empty()) {
        const DimacsExport ex = export_dimacs(instantiate_clauses(a.n, rep.k));
        write_file(a.dimacs, ex.cnf);
        write_file(a.dimacs + ".map.json", ex.sidecar);
    }
    if (a.json) {
        std::cout << replay_report_to_json(rep) << '\n';
    } else {
        std::cout << "replay n=" << rep.n << " K=" << rep.k << " (" << to_string(rep.mode) << ")"
                  << " gamma=" << to_string(rep.gamma) << '\n'
                  << "  variables " << rep.result.variables << ", clauses " << rep.result.clauses << '\n'
                  << "  status " << to_string(rep.result.status) << " after " << rep.result.decisions
                  << " decisions, " << rep.result.conflicts << " conflicts\n";
        if (rep.result.status == SatStatus::unsat)
            std::cout << "  trace " << rep.result.trace_steps << " steps, digest " << rep.result.trace_digest
                      << (rep.result.trace_verified ? ", re-verified" : ", CHECK FAILED: " + rep.result.trace_failure)
                      << '\n';
        if (rep.result.status == SatStatus::sat) {
            std::cout << "  model (true variables):";
            for (const std::string& v : rep.result.true_variables) std::cout << ' ' << v;
            std::cout << '\n';
        }
        if (rep.without_redundant)
            std::cout << "  without C4/C10: " << to_string(rep.without_redundant->status)
                      << (rep.redundancy_consistent ? "" : " (INCONSISTENT)") << '\n';
        if (rep.passed) std::cout << "R^cl(w+" << a.n << ",3) <= " << to_string(rep.gamma) << '\n';
    }
    if (rep.result.status == SatStatus::resource_limit) return kError;
    return rep.passed ? kPass : kFail;
}

// ------------------------------------------------------------------ ramsey

int cmd_ramsey_compute(Natural n, bool json) {
    const RamseyRecord rec = brute_force_ramsey(n);
    if (json) {
        auto j = nlohmann::json::parse(witness_to_json(n, rec.witness));
        j["value"] = rec.value;
        j["source"] = to_string(rec.source);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "R(" << n << ",3) = " << rec.value << "\nwitness on " << rec.witness.order() << " vertices:";
        for (auto [u, v] : rec.witness.edges()) std::cout << ' ' << u << '-' << v;
        std::cout << '\n';
    }
    return kPass;
}

int cmd_ramsey_verify(const std::string& file, std::optional<Natural> n_opt, bool json) {
    auto [file_n, g] = witness_from_json(read_file(file));
    const Natural n = n_opt.value_or(file_n);
    const WitnessVerdict v = verify_witness(g, n);
    if (json) {
        nlohmann::json j{{"n", n}, {"order", g.order()}, {"valid", v.valid}};
        if (v.triangle) j["triangle"] = *v.triangle;
        if (v.independent_set) j["independent_set"] = *v.independent_set;
        std::cout << j.dump(2) << '\n';
    } else if (v.valid) {
        std::cout << "valid: R(" << n << ",3) > " << g.order() << '\n';
    } else if (v.triangle) {
        std::cout << "invalid: triangle " << (*v.triangle)[0] << ' ' << (*v.triangle)[1] << ' ' << (*v.triangle)[2]
                  << '\n';
    } else {
        std::cout << "invalid: independent set";
        for (std::size_t x : *v.independent_set) std::cout << ' ' << x;
        std::cout << '\n';
    }
    return v.valid ? kPass : kFail;
}

int cmd_ramsey_table(const std::string& table, bool json) {
    const RamseyTable t = load_table(table);
    if (json) {
        std::cout << t.to_json() << '\n';
        return kPass;
    }
    for (const auto& [n, e] : t.entries())
        std::cout << "R(" << n << ",3) = " << bracket(e) << "  " << to_string(e.provenance) << '\n';
    return kPass;
}

// ---------------------------------------------------------------- ordinals

int cmd_ordinal_eval(const std::string& expr, bool json) {
    const Ordinal a = parse_ordinal(expr);
    if (json) {
        nlohmann::json j{{"ordinal", to_string(a)}, {"cb", cb_rank(a)}};
        if (!a.is_zero()) j["components"] = component_count(a);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << to_string(a) << '\n';
    }
    return kPass;
}

// --------------------------------------------------------------- colorings

int cmd_coloring_decide(const std::string& file, Natural n, bool json) {
    const QuotientColoring c = coloring_from_json(read_file(file));
    const auto blue = decide_blue_closed_3(c);
    const auto red = decide_red_closed_omega_plus_n(c, n);
    if (json) {
        nlohmann::json j{{"n", n}};
        j["blue_3"] = blue ? nlohmann::json::parse(certificate_to_json(*blue)) : nlohmann::json(nullptr);
        j["red_omega_plus_n"] = red ? nlohmann::json::parse(certificate_to_json(*red)) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "blue closed 3: " << (blue ? "found" : "none") << '\n';
        if (blue) std::cout << certificate_to_json(*blue) << '\n';
        std::cout << "red closed w+" << n << ": " << (red ? "found" : "none") << '\n';
        if (red) std::cout << certificate_to_json(*red) << '\n';
    }
    return blue || red ? kFail : kPass;
}

int cmd_coloring_check(const std::string& file, const std::string& cert_file, std::size_t depth, bool json) {
    const QuotientColoring c = coloring_from_json(read_file(file));
    const CopyCertificate cert = certificate_from_json(read_file(cert_file));
    const CertificateCheck chk = check_certificate(c, cert, depth);
    if (json)
        std::cout << nlohmann::json{{"passed", chk.passed}, {"failure", chk.failure}}.dump(2) << '\n';
    else
        std::cout << (chk.passed ? "certificate valid" : "certificate invalid: " + chk.failure) << '\n';
    return chk.passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed Ramsey numbers R^cl(w+n, 3): bounds, constructions and replays"};
    app.require_subcommand(1);
    int result = kPass;

    BoundsArgs bounds;
    auto* b = app.add_subcommand("bounds", "Print lower and upper bounds for 3 <= n <= nmax");
    b->add_option("--nmax", bounds.nmax, "Largest n")->check(CLI::Range(3, 9));
    b->add_flag("--json", bounds.json, "JSON output");
    b->add_option("--table", bounds.table, "Ramsey table JSON (default: $ORW_TABLE or builtin)");
    b->callback([&] { result = cmd_bounds(bounds); });

    LowerArgs lower;
    auto* l = app.add_subcommand("lower", "Lower-bound construction");
    l->require_subcommand(1);
    auto* lv = l->add_subcommand("verify", "Build G_n and verify the induced colouring");
    lv->add_option("-n", lower.n, "n >= 3")->required()->check(CLI::Range(3, 64));
    lv->add_option("--witness", lower.witness, "Witness graph JSON");
    lv->add_flag("--json", lower.json, "JSON report");
    lv->add_option("--dot", lower.dot, "Write G_n as Graphviz");
    lv->add_option("--coloring", lower.coloring, "Write the induced colouring as JSON");
    lv->callback([&] { result = cmd_lower(lower); });

    UpperArgs upper;
    auto* u = app.add_subcommand("upper", "Upper-bound replay");
    u->require_subcommand(1);
    auto* ur = u->add_subcommand("replay", "Instantiate the clause catalogue and decide it");
    ur->add_option("-n", upper.n, "n >= 3")->required()->check(CLI::Range(3, 64));
    ur->add_option("--k", upper.k, "K = R(2n-3,3)+1 (ramsey) or n^2-4 (square)")
        ->required()
        ->check(CLI::IsMember({"ramsey", "square"}));
    ur->add_option("--budget", upper.budget, "Decision budget");
    ur->add_flag("--json", upper.json, "JSON report");
    ur->add_option("--dimacs", upper.dimacs, "Write DIMACS CNF (and FILE.map.json)");
    ur->add_option("--table", upper.table, "Ramsey table JSON");
    ur->callback([&] { result = cmd_upper(upper); });

    auto* r = app.add_subcommand("ramsey", "Classical Ramsey numbers R(n,3)");
    r->require_subcommand(1);
    Natural rc_n = 3;
    bool rc_json = false;
    auto* rc = r->add_subcommand("compute", "Exhaustive search, n <= 4");
    rc->add_option("-n", rc_n, "n")->required()->check(CLI::Range(2, 4));
    rc->add_flag("--json", rc_json, "JSON output");
    rc->callback([&] { result = cmd_ramsey_compute(rc_n, rc_json); });
    std::string rv_file;
    std::optional<Natural> rv_n;
    bool rv_json = false;
    auto* rv = r->add_subcommand("verify", "Verify a witness graph file");
    rv->add_option("file", rv_file, "Witness JSON")->required();
    rv->add_option("-n", rv_n, "n (default: from the file)");
    rv->add_flag("--json", rv_json, "JSON output");
    rv->callback([&] { result = cmd_ramsey_verify(rv_file, rv_n, rv_json); });
    std::string rt_table;
    bool rt_json = false;
    auto* rt = r->add_subcommand("table", "Show the Ramsey table in use");
    rt->add_option("--table", rt_table, "Ramsey table JSON");
    rt->add_flag("--json", rt_json, "JSON output");
    rt->callback([&] { result = cmd_ramsey_table(rt_table, rt_json); });

    auto* o = app.add_subcommand("ordinal", "Ordinal utilities");
    o->require_subcommand(1);
    std::string expr;
    bool o_json = false;
    auto* oe = o->add_subcommand("eval", "Print the Cantor normal form");
    oe->add_option("expr", expr, "Expression such as \"w^2*2 + w\"")->required();
    oe->add_flag("--json", o_json, "JSON output");
    oe->callback([&] { result = cmd_ordinal_eval(expr, o_json); });

    auto* c = app.add_subcommand("coloring", "Quotient colouring files");
    c->require_subcommand(1);
    std::string c_file, c_cert;
    Natural c_n = 3;
    std::size_t c_depth = 6;
    bool c_json = false;
    auto* cd = c->add_subcommand("decide", "Search for red closed w+n and blue 3");
    cd->add_option("file", c_file, "Colouring JSON")->required();
    cd->add_option("-n", c_n, "n")->check(CLI::Range(1, 64));
    cd->add_flag("--json", c_json, "JSON output");
    cd->callback([&] { result = cmd_coloring_decide(c_file, c_n, c_json); });
    auto* cc = c->add_subcommand("check", "Check a copy certificate");
    cc->add_option("file", c_file, "Colouring JSON")->required();
    cc->add_option("--cert", c_cert, "Certificate JSON")->required();
    cc->add_option("--depth", c_depth, "Tail points to check");
    cc->add_flag("--json", c_json, "JSON output");
    cc->callback([&] { result = cmd_coloring_check(c_file, c_cert, c_depth, c_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kError;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kError;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return result;
}
