#pragma once

#include <string>
#include <string_view>

#include "orw/coloring.hpp"
#include "orw/copies.hpp"

namespace orw {

// Coloring files:
//   { "gamma": "<ordinal>",
//     "within":    [{"class": [i, j], "color": 0|1}, ...],
//     "cross":     [{"a": [i, j], "b": [k, l], "color": 0|1}, ...],
//     "overrides": [{"a": "<ordinal>", "b": "<ordinal>", "color": 0|1}, ...] }
// Class pairs that are not listed get colour 0.  Malformed input throws
// DomainError (or ParseError for bad ordinal expressions).

QuotientColoring coloring_from_json(std::string_view text);
/// Lists every class and every class pair explicitly.
std::string coloring_to_json(const QuotientColoring& c, int indent = 2);

// Certificates:
//   { "kind": "red-omega-plus-n" | "blue-3", "tail_class": [i, j],
//     "excluded": [...], "limit_point": "<ordinal>", "top_points": [...],
//     "triangle": [...] }

CopyCertificate certificate_from_json(std::string_view text);
std::string certificate_to_json(const CopyCertificate& cert, int indent = 2);

}  // namespace orw
