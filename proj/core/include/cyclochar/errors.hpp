#pragma once

#include <stdexcept>
#include <string>

namespace cyclochar {

// Exact division left a remainder.  Every finished character value is a
// Laurent polynomial, so this always signals an upstream bug.
struct NonzeroRemainder : std::runtime_error {
    explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

// A substituted variable occurs in its own image.
struct CyclicBinding : std::runtime_error {
    explicit CyclicBinding(const std::string& what) : std::runtime_error(what) {}
};

// The image bound to q is not an invertible monomial for the exponents present.
struct InvalidSubstitution : std::runtime_error {
    explicit InvalidSubstitution(const std::string& what) : std::runtime_error(what) {}
};

struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPermutation : std::invalid_argument {
    explicit NotPermutation(const std::string& what) : std::invalid_argument(what) {}
};

struct MarginMismatch : std::invalid_argument {
    explicit MarginMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroRow : std::invalid_argument {
    explicit ZeroRow(const std::string& what) : std::invalid_argument(what) {}
};

struct NotRibbon : std::invalid_argument {
    explicit NotRibbon(const std::string& what) : std::invalid_argument(what) {}
};

struct MalformedSequence : std::invalid_argument {
    explicit MalformedSequence(const std::string& what) : std::invalid_argument(what) {}
};

struct ModeMismatch : std::invalid_argument {
    explicit ModeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonIntegerCoefficient : std::runtime_error {
    explicit NonIntegerCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct CacheVersionMismatch : std::runtime_error {
    explicit CacheVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected; `position` is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace cyclochar
