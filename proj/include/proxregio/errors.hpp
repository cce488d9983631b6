#pragma once

#include <stdexcept>
#include <string>

namespace proxregio {

// Error taxonomy used across the library.  Every throwing operation documents
// which kind it raises; callers that need to branch can switch on kind().
enum class ErrorKind {
    invalid_region,      // degenerate or self-intersecting ring data
    invalid_spine,       // string spine unusable (self-intersecting, too short)
    parameter,           // nonsensical numeric argument (negative width, k < 1, ...)
    precondition,        // operation preconditions violated (e.g. sew on overlapping regions)
    capacity,            // not enough material to satisfy the request (e.g. too few anchor cells)
    lookup,              // unknown id
    configuration,       // registry/grid configured inconsistently
    parse,               // scene file rejected
    dimension,           // unsupported simplex dimension
    internal,            // invariant that must never fail did fail; bug signal
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace proxregio
