#pragma once

#include <stdexcept>
#include <string>

namespace taugraph {

// Input text that does not parse, or parses to something outside the ring.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Violated algebraic precondition: zero where nonzero is required, a unit
// where a non-unit is required, mismatched backends, bad refinement targets.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration hit a configured resource cap. Never silently truncated:
// callers either get the complete answer or this.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Bad CLI/config input: unknown relation name, backend/relation mismatch,
// discriminant outside the allowlist.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace taugraph
