#pragma once

// Error types shared across the library, plus the global expansion ceiling.
//
// Exceptions map onto CLI exit codes: hypothesis violations and malformed
// input exit 2, resource-ceiling refusals exit 3.  A claim that is merely
// *false* is not an error; it comes back as a report with pass == false.

#include <stdexcept>
#include <string>

namespace qcong {

// A congruence family's arithmetic hypotheses are not met (wrong residue
// class, composite p, parameter out of the admissible range, ...).
class HypothesisError : public std::domain_error {
public:
    explicit HypothesisError(const std::string& what) : std::domain_error(what) {}
};

// The requested computation would exceed the configured expansion ceiling.
// Refused up front rather than ground through.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Default cap on truncation orders accepted by the congruence lab and the
// deep identity checks.  Overridable per call (and via QCONG_ORDER_CEILING
// in the CLI).
inline constexpr long kDefaultOrderCeiling = 1'000'000;

} // namespace qcong
