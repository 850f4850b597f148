#ifndef HECKE_ERRORS_HPP
#define HECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecke {

// Unsupported family/rank or malformed run configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically invalid argument (not a root, wrong lattice, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant; always a bug, never user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Base-point retries exhausted during an alcove walk.
struct NonGenericityError : std::runtime_error {
    explicit NonGenericityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Eigenvalue collision at a parameter specialization.
struct DegeneracyError : std::runtime_error {
    DegeneracyError(const std::string& msg, std::string a, std::string b)
        : std::runtime_error(msg), first(std::move(a)), second(std::move(b))
    {
    }
    std::string first, second; // colliding compositions
};

} // namespace hecke

#endif
