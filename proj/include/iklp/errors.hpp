#pragma once

#include <stdexcept>
#include <string>

namespace iklp {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroPolyError : Error {
    DivisionByZeroPolyError() : Error("polynomial division by the zero polynomial") {}
};

struct BothZeroError : Error {
    BothZeroError() : Error("gcd of two zero polynomials is undefined") {}
};

struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& op)
        : Error(op + ": zero polynomial not allowed") {}
};

struct NotRealRootedError : Error {
    explicit NotRealRootedError(const std::string& which)
        : Error("polynomial is not real-rooted: " + which), which(which) {}
    std::string which;
};

struct NegativeLeadingCoefficientError : Error {
    explicit NegativeLeadingCoefficientError(const std::string& which)
        : Error("leading coefficient must be positive: " + which), which(which) {}
    std::string which;
};

struct NotAlternatingError : Error {
    NotAlternatingError() : Error("roots are not alternating") {}
};

struct NonIntegerCoefficientError : Error {
    explicit NonIntegerCoefficientError(const std::string& detail)
        : Error("coefficient is not an integer: " + detail) {}
};

struct InvalidRankError : Error {
    explicit InvalidRankError(const std::string& detail) : Error("invalid rank: " + detail) {}
};

struct DegreeExceedsNError : Error {
    DegreeExceedsNError() : Error("polynomial degree exceeds the binomial order n") {}
};

struct InvalidRangeError : Error {
    explicit InvalidRangeError(const std::string& detail) : Error("invalid range: " + detail) {}
};

struct LengthTooShortError : Error {
    explicit LengthTooShortError(const std::string& detail)
        : Error("sequence too short: " + detail) {}
};

struct NegativeInputError : Error {
    explicit NegativeInputError(const std::string& detail)
        : Error("negative input not allowed: " + detail) {}
};

struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& detail)
        : Error("invalid parameters: " + detail) {}
};

/// Raised when an expected exact (t+1)-power factorization leaves a remainder.
/// Callers that scan parameter grids catch this and record a finding.
struct NonzeroRemainderError : Error {
    explicit NonzeroRemainderError(const std::string& detail)
        : Error("exact division left a nonzero remainder: " + detail) {}
};

}  // namespace iklp
