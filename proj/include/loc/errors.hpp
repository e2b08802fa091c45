#pragma once
#include <stdexcept>
#include <string>

namespace loc {

// All thrown errors carry a process exit code for the CLI.
struct Error : std::runtime_error {
    int exit_code;
    Error(int code, const std::string& msg) : std::runtime_error(msg), exit_code(code) {}
};

// Broken invariant inside the library itself (a bug, not bad input).
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(1, msg) {}
};

// Input violates a structural precondition (group too large, empty delta, ...).
struct SpecError : Error {
    explicit SpecError(const std::string& msg) : Error(2, msg) {}
};

// Mathematically well-posed input, but the requested operation is undefined
// on it (product outside the domain, element not in the locality, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(3, msg) {}
};

// A provided functor fails functoriality / compatibility checks.
struct FunctorError : Error {
    explicit FunctorError(const std::string& msg) : Error(4, msg) {}
};

} // namespace loc
