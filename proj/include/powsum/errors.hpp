#pragma once

#include <stdexcept>
#include <string>

namespace powsum {

// Base for all recoverable library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: violated preconditions, malformed values, unsupported regimes.
struct DomainError : Error {
    using Error::Error;
};

// Resource guards: the request is well-formed but too large to run.
struct ResourceError : Error {
    using Error::Error;
};

struct ResultTooLarge : ResourceError {
    using ResourceError::ResourceError;
};

struct SearchTooLarge : ResourceError {
    SearchTooLarge(std::string msg, uint64_t bound, uint64_t cap)
        : ResourceError(std::move(msg)), bound(bound), cap(cap) {}
    uint64_t bound;  // projected loop bound (saturated at UINT64_MAX)
    uint64_t cap;
};

struct WitnessTooLarge : ResourceError {
    using ResourceError::ResourceError;
};

struct ExhaustiveInfeasible : ResourceError {
    using ResourceError::ResourceError;
};

// Solver-specific errors.
struct DegenerateAllOnes : DomainError {
    using DomainError::DomainError;
};
struct NonMonotoneMixed : DomainError {
    using DomainError::DomainError;
};
struct TargetOutOfRange : DomainError {
    using DomainError::DomainError;
};
struct InfiniteSolutions : DomainError {
    using DomainError::DomainError;
};
struct NoConvergence : Error {
    using Error::Error;
};

// Two independent evidence routes disagreed. This is an implementation bug,
// not a property of the input; it must never be swallowed.
struct InconsistentEvidence : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace powsum
