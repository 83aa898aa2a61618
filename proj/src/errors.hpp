#pragma once

#include <stdexcept>
#include <string>

namespace tmirror {

// Base of every error raised by the library. The C API maps each subclass
// onto its own status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A result cannot be certified inside the known precision window.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// The input lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// An identity that must hold was found to fail.
class CheckFailed : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace tmirror
