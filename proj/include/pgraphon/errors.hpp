#ifndef PGRAPHON_ERRORS_HPP
#define PGRAPHON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgraphon {

/// Malformed or inconsistent user input (bad JSON, schema violation,
/// mismatched spaces, invalid partition data). CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested computation exceeds a documented exactness or budget
/// threshold (subset scans, permutation scans, enumeration budgets).
/// CLI exit code 3.
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical routine failed to converge; indicates a bug, not bad input.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pgraphon

#endif
