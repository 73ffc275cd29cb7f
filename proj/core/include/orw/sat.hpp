#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orw {

/// Literals use the DIMACS convention: variable v (1-based) is v, its
/// negation is -v.
using Literal = int;
using Clause = std::vector<Literal>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

enum class SatStatus { sat, unsat, resource_limit };

std::string to_string(SatStatus s);

/// One derived clause.  `chain` lists clause ids (inputs are 0..m-1, the
/// k-th derived clause is m+k); resolving chain[0] with chain[1], the result
/// with chain[2], and so on, each time on the single clashing variable,
/// yields `clause`.  A chain of length one restates an input clause.
struct ProofStep {
    Clause clause;
    std::vector<std::size_t> chain;
};

enum class Branching {
    /// Always the first unassigned variable of `order`; never restarts.
    static_order,
    /// Highest conflict activity first, ties broken by `order`, with Luby
    /// restarts.  Still deterministic.
    activity,
};

struct SolverOptions {
    /// Maximum number of decisions before giving up.
    std::uint64_t decision_budget = 10'000'000;
    bool record_trace = true;
    /// Decision order over variables 1..num_vars; empty means 1, 2, 3, ...
    std::vector<int> order;
    Branching branching = Branching::activity;
    /// Conflicts per Luby unit when branching by activity.
    std::uint64_t restart_unit = 100;
};

struct SolveResult {
    SatStatus status = SatStatus::resource_limit;
    /// model[v] for v in 1..num_vars (index 0 unused); set when sat.
    std::vector<bool> model;
    /// Learned clauses followed by the empty clause; set when unsat and
    /// tracing is enabled.
    std::vector<ProofStep> trace;
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
};

/// Conflict-driven clause learning with first-UIP learning and false-first
/// polarity.  Runs are reproducible: nothing depends on time or randomness.
/// Throws DomainError for literals outside 1..num_vars.
SolveResult solve(const CnfFormula& f, const SolverOptions& options = {});

bool satisfies(const CnfFormula& f, const std::vector<bool>& model);

struct TraceCheck {
    bool valid = false;
    std::size_t steps_checked = 0;
    std::string failure;
};

/// Replays every resolution chain from scratch against the input clauses
/// and requires the last step to be the empty clause.
TraceCheck check_refutation(const CnfFormula& f, const std::vector<ProofStep>& trace);

/// 64-bit FNV-1a over the trace contents, as 16 hex digits.
std::string trace_digest(const std::vector<ProofStep>& trace);

/// DIMACS CNF text: "p cnf V C" header, optional comment lines first.
std::string to_dimacs(const CnfFormula& f, const std::vector<std::string>& comments = {});

/// Parses DIMACS CNF; throws ParseError on malformed input.
CnfFormula parse_dimacs(const std::string& text);

}  // namespace orw
