#pragma once

#include <stdexcept>
#include <string>

namespace kpn {

// Validation failures: malformed input, broken preconditions. CLI exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadCell : ValidationError {
    explicit BadCell(const std::string& msg) : ValidationError("BadCell: " + msg) {}
};

struct NotACocycle : ValidationError {
    explicit NotACocycle(const std::string& msg) : ValidationError("NotACocycle: " + msg) {}
};

struct CompositionNonzero : ValidationError {
    explicit CompositionNonzero(const std::string& msg)
        : ValidationError("CompositionNonzero: " + msg) {}
};

struct MissingComponent : ValidationError {
    explicit MissingComponent(const std::string& msg)
        : ValidationError("MissingComponent: " + msg) {}
};

struct UnsupportedEnumeration : ValidationError {
    explicit UnsupportedEnumeration(const std::string& msg)
        : ValidationError("UnsupportedEnumeration: " + msg) {}
};

struct FormatError : ValidationError {
    explicit FormatError(const std::string& msg) : ValidationError("FormatError: " + msg) {}
};

// Resource caps (enumeration limits). CLI exit code 3.
struct SizeLimitExceeded : std::runtime_error {
    explicit SizeLimitExceeded(const std::string& msg)
        : std::runtime_error("SizeLimitExceeded: " + msg) {}
};

// Exact arithmetic overflowed the 64-bit working range. Never silently wraps.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& msg) : std::runtime_error("Overflow: " + msg) {}
};

}  // namespace kpn
