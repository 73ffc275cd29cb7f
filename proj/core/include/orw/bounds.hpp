#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orw/ordinal.hpp"

namespace orw {

enum class ValueProvenance { computed, external };

std::string to_string(ValueProvenance p);

/// What is known about R(n, 3): lower <= R(n, 3) <= upper.
struct RamseyEntry {
    Natural n = 0;
    Natural lower = 0;
    Natural upper = 0;
    ValueProvenance provenance = ValueProvenance::external;

    bool exact() const noexcept { return lower == upper; }
    friend bool operator==(const RamseyEntry&, const RamseyEntry&) = default;
};

class RamseyTable {
public:
    /// Literature values for n = 2..15, all flagged external.
    static RamseyTable defaults();
    /// {"version": 1, "values": [{"n": 5, "value": 14}, {"n": 10, "lower": 40,
    /// "upper": 42}, ...]}; "provenance" defaults to "external".  Throws
    /// ParseError for malformed JSON and DomainError for inconsistent entries.
    static RamseyTable from_json(const std::string& text);
    std::string to_json(int indent = 2) const;

    void set(const RamseyEntry& e);
    /// Entries from `other` replace entries for the same n.
    void merge(const RamseyTable& other);
    std::optional<RamseyEntry> find(Natural n) const;
    const std::map<Natural, RamseyEntry>& entries() const noexcept { return entries_; }

    /// Replaces n = 2..up_to (at most 4) with exhaustive-search values.
    void compute_small(Natural up_to = 4);

private:
    std::map<Natural, RamseyEntry> entries_;
};

/// Tri-state comparison outcome when Ramsey values are only bracketed.
enum class Tristate { no, yes, unknown };

std::string to_string(Tristate t);

struct BoundsRow {
    Natural n = 0;
    Ordinal lower;         // w^2*n + w*(R(n,3) - n) + n, lower end of R
    Ordinal upper_ramsey;  // w^2*n + w*(R(2n-3,3) + 1) + 1, upper end of R
    Ordinal upper_square;  // w^2*n + w*(n^2 - 4) + 1
    Ordinal upper_prior;   // w^2*(R(n-1,3) + 1) + w*(n-1) + n, upper end of R
    /// upper_square < upper_ramsey for every R(2n-3,3) in its bracket (yes),
    /// for none (no), or it depends on the unknown value.
    Tristate square_better = Tristate::unknown;
    /// R(m,3) entries consulted, keyed by m.
    std::map<Natural, RamseyEntry> ramsey_values_used;
};

/// Throws DomainError for n < 3 or naming the missing R(m,3).
BoundsRow bounds_row(Natural n, const RamseyTable& table);

std::vector<BoundsRow> bounds_table(Natural nmax, const RamseyTable& table);

std::string bounds_to_json(const std::vector<BoundsRow>& rows, int indent = 2);

}  // namespace orw
