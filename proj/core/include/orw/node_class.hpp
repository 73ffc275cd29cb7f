#pragma once

#include <compare>
#include <string>
#include <vector>

#include "orw/enumeration.hpp"
#include "orw/ordinal.hpp"

namespace orw {

// Identifies the node class [[i, j; gamma]] = {a < gamma : CNF_gamma(a) = i, CB(a) = j}.
struct NodeClassId {
    Natural cnf_index = 1;
    Exponent cb_level = 0;

    friend auto operator<=>(const NodeClassId&, const NodeClassId&) = default;
};

std::string to_string(const NodeClassId& id);

/// Throws DomainError unless 1 <= i <= #components and j <= exponent of component i.
void validate_class(const Ordinal& gamma, const NodeClassId& id);

/// The class containing alpha.  Requires alpha < gamma.
NodeClassId classify(const Ordinal& gamma, const Ordinal& alpha);

BoundedEnumeration node_class(const Ordinal& gamma, const NodeClassId& id);
Cardinality class_size(const Ordinal& gamma, const NodeClassId& id);

/// Every valid class id of gamma in (i, j) order, including the empty class
/// (n, b_n) at the top of the last component.  Throws DomainError when more
/// than `limit` classes would be produced.
std::vector<NodeClassId> all_classes(const Ordinal& gamma, std::size_t limit = 4096);

/// The first `count` members of the class that are strictly greater than `floor`.
std::vector<Ordinal> class_members_above(const Ordinal& gamma, const NodeClassId& id,
                                         const Ordinal& floor, std::size_t count);

/// Every ordinal below gamma in increasing order, first m of them.
std::vector<Ordinal> enumerate_below(const Ordinal& gamma, std::size_t m);

}  // namespace orw
