#pragma once

#include <stdexcept>
#include <string>

namespace adic {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- scalar layer ----

struct MixedRadicandError : Error {
    explicit MixedRadicandError(const std::string& msg) : Error(msg) {}
};

struct PrecisionExhaustedError : Error {
    long required_bits;
    PrecisionExhaustedError(const std::string& msg, long bits)
        : Error(msg + " (required bits: " + std::to_string(bits) + ")"),
          required_bits(bits) {}
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

// ---- tower layer ----

struct InvalidWordError : Error {
    explicit InvalidWordError(const std::string& msg) : Error(msg) {}
};

struct Kr5ViolationError : Error {
    explicit Kr5ViolationError(const std::string& msg) : Error(msg) {}
};

struct Kr6ViolationError : Error {
    explicit Kr6ViolationError(const std::string& msg) : Error(msg) {}
};

struct Kr5PrimeViolationError : Error {
    explicit Kr5PrimeViolationError(const std::string& msg) : Error(msg) {}
};

struct LevelOutOfRangeError : Error {
    explicit LevelOutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct BadRangeError : Error {
    explicit BadRangeError(const std::string& msg) : Error(msg) {}
};

struct DepthInsufficientError : Error {
    explicit DepthInsufficientError(const std::string& msg) : Error(msg) {}
};

struct NoExactStructureError : Error {
    explicit NoExactStructureError(const std::string& msg) : Error(msg) {}
};

// ---- coding layer ----

struct IncompatibleCodeError : Error {
    int level;
    IncompatibleCodeError(const std::string& msg, int n)
        : Error(msg + " (level " + std::to_string(n) + ")"), level(n) {}
};

struct CarryOverflowError : Error {
    explicit CarryOverflowError(const std::string& msg) : Error(msg) {}
};

struct HeightNotUnitError : Error {
    explicit HeightNotUnitError(const std::string& msg) : Error(msg) {}
};

struct NoAdjacentOccurrenceError : Error {
    explicit NoAdjacentOccurrenceError(const std::string& msg) : Error(msg) {}
};

// ---- substitution layer ----

struct AlphabetMismatchError : Error {
    explicit AlphabetMismatchError(const std::string& msg) : Error(msg) {}
};

struct PrefixNotNestedError : Error {
    explicit PrefixNotNestedError(const std::string& msg) : Error(msg) {}
};

struct WordTooShortError : Error {
    explicit WordTooShortError(const std::string& msg) : Error(msg) {}
};

// ---- markov layer ----

struct MeasureUnavailableError : Error {
    explicit MeasureUnavailableError(const std::string& msg) : Error(msg) {}
};

struct RowSumViolationError : Error {
    explicit RowSumViolationError(const std::string& msg) : Error(msg) {}
};

// ---- spectral layer ----

struct NotFoundError : Error {
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

struct NotRebasedError : Error {
    explicit NotRebasedError(const std::string& msg) : Error(msg) {}
};

// ---- example generator ----

struct IdentityViolationError : Error {
    int level;
    IdentityViolationError(const std::string& msg, int n)
        : Error(msg + " (level " + std::to_string(n) + ")"), level(n) {}
};

}  // namespace adic
