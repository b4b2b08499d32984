#pragma once

#include <stdexcept>
#include <string>

namespace auslander {

/// Malformed or inconsistent input (workspace files, arguments, preconditions).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or decomposition exceeded its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed; always an implementation bug or corrupt data.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what)
{
    if (!condition)
        throw InvariantViolation(what);
}

}  // namespace auslander
