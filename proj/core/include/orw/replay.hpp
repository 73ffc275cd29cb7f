#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orw/coloring.hpp"
#include "orw/node_class.hpp"
#include "orw/sat.hpp"

namespace orw {

/// Boolean unknowns of a canonical w-homogeneous colouring of
/// gamma = w^2*n + w*K + 1:
///   t(i,j;k,l)  the eventual colour c~(i,j;k,l) from class (i,j) toward
///               level l of component k != i;
///   h(i,l)      the normal-table colour c^(i,2,l), for i <= n and l <= 1.
/// Classes are (i, j) with j <= 2 for i <= n and j <= 1 for n < i <= n+K.
/// L_i is (i,2) for i <= n and (i,1) for n < i <= n+K; these are singletons,
/// so t(L_a;L_b) and t(L_b;L_a) name the same pair and share one variable.
class VariableSpace {
public:
    /// Throws DomainError unless n >= 3 and K >= 2.
    VariableSpace(Natural n, Natural k);

    Natural n() const noexcept { return n_; }
    Natural k() const noexcept { return k_; }
    Natural components() const noexcept { return n_ + k_; }
    /// Highest CB level of component i: 2 for i <= n, 1 above.
    Exponent top_level(Natural i) const;
    NodeClassId l_class(Natural i) const;
    bool is_class(const NodeClassId& c) const;
    bool is_l_class(const NodeClassId& c) const;
    /// Every class (i, j), component-major.
    const std::vector<NodeClassId>& classes() const noexcept { return classes_; }

    /// DIMACS variable of t(from;to); throws DomainError if undeclared
    /// (same component or not a class).
    int tilde(const NodeClassId& from, const NodeClassId& to) const;
    int tilde(Natural i, Exponent j, Natural k, Exponent l) const { return tilde({i, j}, {k, l}); }
    bool has_tilde(const NodeClassId& from, const NodeClassId& to) const;
    int hat(Natural i, Exponent l) const;

    int size() const noexcept { return static_cast<int>(names_.size()) - 1; }
    /// "t(4,0;1,1)" or "h(1,0)"; L-L variables are named from the larger index.
    const std::string& name(int var) const { return names_.at(var); }
    /// The variable with that name; throws DomainError if none.
    int lookup(const std::string& name) const;

    struct TildeKey {
        NodeClassId from;
        NodeClassId to;
    };
    /// For t-variables, the canonical (from, to) pair; nullopt for h.
    std::optional<TildeKey> tilde_key(int var) const;
    /// For h-variables, (i, l); nullopt for t.
    std::optional<std::pair<Natural, Exponent>> hat_key(int var) const;

    /// Hat variables first, then t by source component, level, target.
    std::vector<int> decision_order() const;

private:
    using Key = std::array<std::uint64_t, 4>;
    Natural n_;
    Natural k_;
    std::vector<NodeClassId> classes_;
    std::map<Key, int> tilde_;
    std::map<std::pair<Natural, Exponent>, int> hat_;
    std::vector<std::string> names_;
    std::map<std::string, int> by_name_;
    std::vector<std::optional<TildeKey>> tilde_keys_;
    std::vector<std::optional<std::pair<Natural, Exponent>>> hat_keys_;
};

enum class Schema { C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14 };

std::string to_string(Schema s);
/// Inverse of to_string; throws DomainError.
Schema schema_from_string(const std::string& s);
/// Short statement of the fact the schema encodes.
std::string schema_anchor(Schema s);
/// C4 and C10 are consequences of the rest of the catalogue.
bool schema_redundant(Schema s);
const std::vector<Schema>& all_schemas();

struct TaggedClause {
    Clause literals;
    Schema schema = Schema::C1;
};

struct ClauseOptions {
    std::set<Schema> enabled{all_schemas().begin(), all_schemas().end()};
    /// Instantiation stops with ResourceLimit once C8 alone would exceed
    /// this many clauses.
    std::size_t c8_limit = 5'000'000;
};

struct ClauseSystem {
    VariableSpace space;
    std::vector<TaggedClause> clauses;

    CnfFormula formula() const;
    std::map<Schema, std::size_t> counts() const;
    /// Human-readable clause, e.g. "-h(2,0) | -h(2,1)".
    std::string render(const Clause& c) const;
};

/// Instantiates the enabled schemas; duplicate clauses inside one schema are
/// kept once.
ClauseSystem instantiate_clauses(Natural n, Natural k, const ClauseOptions& options = {});

/// Number of C8 instances without building them.
std::size_t c8_instance_count(Natural n, Natural k);

/// Assignment of every variable read off a colouring's extracted tables:
/// t from the canonical table, h from the normal table.  The colouring may
/// live on a longer ordinal, as long as its classes cover the variable
/// space.  Throws DomainError if an entry is missing.
std::vector<bool> assignment_from_tables(const VariableSpace& space, const NormalTable& normal,
                                         const CanonicalTable& canonical);

/// Clauses of the system falsified by the assignment.
std::vector<std::size_t> falsified_clauses(const ClauseSystem& sys, const std::vector<bool>& assignment);

enum class ReplayMode { ramsey_k, square_k };

std::string to_string(ReplayMode m);

struct ReplayOptions {
    std::uint64_t decision_budget = 10'000'000;
    bool redundancy_check = true;
    ClauseOptions clauses;
};

struct DecideReport {
    SatStatus status = SatStatus::resource_limit;
    std::size_t variables = 0;
    std::size_t clauses = 0;
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::size_t trace_steps = 0;
    std::string trace_digest;
    bool trace_verified = false;
    std::string trace_failure;
    /// Set when sat: the true variables by name.
    std::vector<std::string> true_variables;
    bool model_verified = false;
};

/// Runs the solver on the system and, when unsat, re-checks the trace.
DecideReport decide(const ClauseSystem& sys, std::uint64_t decision_budget = 10'000'000);

struct ReplayReport {
    Natural n = 0;
    Natural k = 0;
    ReplayMode mode = ReplayMode::ramsey_k;
    /// R(2n-3,3) for ramsey-K mode.
    std::optional<Natural> ramsey_value;
    std::string ramsey_provenance;
    Ordinal gamma;
    std::map<Schema, std::size_t> schema_counts;
    DecideReport result;
    /// Same system without C4 and C10.
    std::optional<DecideReport> without_redundant;
    bool redundancy_consistent = true;
    bool passed = false;
};

/// K = R(2n-3,3) + 1 (ramsey_value must then be R(2n-3,3)) or K = n^2 - 4.
/// Throws DomainError when ramsey-K mode lacks the value.
ReplayReport replay_theorem(Natural n, ReplayMode mode, std::optional<Natural> ramsey_value,
                            const std::string& ramsey_provenance = "", const ReplayOptions& options = {});

std::string replay_report_to_json(const ReplayReport& r, int indent = 2);

/// DIMACS text plus a JSON sidecar mapping variables to names and clauses to
/// schema tags.
struct DimacsExport {
    std::string cnf;
    std::string sidecar;
};
DimacsExport export_dimacs(const ClauseSystem& sys);

}  // namespace orw
