#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orw/coloring.hpp"

namespace orw {

enum class CopyKind { red_omega_plus_n, blue_3 };

std::string to_string(CopyKind kind);

/// Finite description of a homogeneous closed copy.
///
/// Red copies of w+n: an w-sequence inside `tail_class` converging to
/// `limit_point` (skipping the points in `excluded`), followed by the n-1
/// points in `top_points`.  Blue copies of 3 use `triangle` only.
struct CopyCertificate {
    CopyKind kind = CopyKind::red_omega_plus_n;
    std::optional<NodeClassId> tail_class;
    std::vector<Ordinal> excluded;
    Ordinal limit_point;
    std::vector<Ordinal> top_points;
    std::vector<Ordinal> triangle;

    /// The first `count` tail points: with limit d + w^e and tail level j,
    /// these are d + w^{e-1} * k (+ w^j when j < e-1) for k = 1, 2, ...,
    /// omitting excluded points.  Red certificates only.
    std::vector<Ordinal> tail_points(std::size_t count) const;
};

/// Exact: some blue triangle exists iff one exists among the override points
/// plus three override-free members of every class.
std::optional<CopyCertificate> decide_blue_closed_3(const QuotientColoring& c);

/// Exact search for a red homogeneous closed copy of w+n (n >= 1).
std::optional<CopyCertificate> decide_red_closed_omega_plus_n(const QuotientColoring& c, Natural n);

struct CertificateCheck {
    bool passed = false;
    std::string failure;

    explicit operator bool() const noexcept { return passed; }
};

/// Checks the order shape and the colour of every pair among the first
/// `depth` tail points, the limit point and the top points (or the
/// triangle).  Throws DomainError for certificates missing required fields.
CertificateCheck check_certificate(const QuotientColoring& c, const CopyCertificate& cert, std::size_t depth);

enum class LevelsVerdict { case_a, case_b, hypothesis_violated };

std::string to_string(LevelsVerdict v);

struct LevelsReport {
    LevelsVerdict verdict = LevelsVerdict::hypothesis_violated;
    bool case_a = false;
    bool case_b = false;
    // Set when a hypothesis fails.
    std::string violated;
    std::optional<CopyCertificate> red_copy;
    std::optional<NodeClassId> blue_class;
};

/// For a normal w-homogeneous colouring of w^2: either c^(1,1,0) = 1, or
/// every W_i = {w*i + m : m > 0} sees blue cofinally from cofinally many
/// points of level 1.  The hypotheses (no red closed w+n, no blue closed w)
/// are checked first.  Throws DomainError unless gamma = w^2 and the
/// colouring is normal and w-homogeneous.
LevelsReport check_omega_squared_levels(const QuotientColoring& c, Natural n);

/// The colouring carried by component i (exponent e) to w^e through
/// x -> P_{i-1} + 1 + x (the identity on the first component).
QuotientColoring restrict_to_component(const QuotientColoring& c, Natural i);

}  // namespace orw
