#pragma once

#include <stdexcept>
#include <string>

namespace dtorus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// theta = 1/2 (mod 1): cos(pi*theta) = 0, the parameter pack is undefined.
struct PoleError : Error {
    using Error::Error;
};

struct DomainMismatch : Error {
    using Error::Error;
};

struct AlphabetMismatch : Error {
    using Error::Error;
};

struct InadmissibleParams : Error {
    using Error::Error;
};

struct StepCapExceeded : Error {
    using Error::Error;
};

struct NotConfluent : Error {
    using Error::Error;
};

struct NotPositive : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DegenerateFit : Error {
    using Error::Error;
};

struct BoxTooLarge : Error {
    using Error::Error;
};

struct SpectralViolation : Error {
    using Error::Error;
};

struct NotRepresentable : Error {
    using Error::Error;
};

// Parse failure with byte position and the token classes that would have
// been accepted there.
struct ParseError : Error {
    std::size_t position;
    std::string expected;

    ParseError(std::size_t pos, std::string exp, const std::string& msg)
        : Error(msg), position(pos), expected(std::move(exp)) {}
};

}  // namespace dtorus
