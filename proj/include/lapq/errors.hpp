#pragma once

#include <stdexcept>
#include <string>

namespace lapq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments or unachievable design requests. CLI exit status 2.
struct DomainError : Error {
    using Error::Error;
};

// A requested rate/distortion point no non-negative threshold can reach.
struct InfeasibleTargetError : DomainError {
    using DomainError::DomainError;
};

// Malformed container or payload data. CLI exit status 3.
struct FormatError : Error {
    using Error::Error;
};

struct CorruptHeaderError : FormatError {
    using FormatError::FormatError;
};

struct TruncatedPayloadError : FormatError {
    using FormatError::FormatError;
};

struct DanglingBitsError : FormatError {
    using FormatError::FormatError;
};

// Filesystem failures surfaced by the CLI. Exit status 3.
struct IoError : Error {
    using Error::Error;
};

} // namespace lapq
