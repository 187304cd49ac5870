#pragma once

#include <stdexcept>
#include <string>

namespace secscore {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector string violates the CVSS v3.1 grammar.
struct MalformedVector : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Input file or document lacks required structure.
struct SchemaError : Error {
    using Error::Error;
};

// Registry file written by a newer schema than this build understands.
struct SchemaVersionError : SchemaError {
    using SchemaError::SchemaError;
};

struct InvalidDate : Error {
    using Error::Error;
};

struct EmptySample : Error {
    using Error::Error;
};

// Sample has no spread; the requested fit is undefined.
struct DegenerateSample : Error {
    using Error::Error;
};

struct DegenerateScore : Error {
    using Error::Error;
};

struct UnknownCategory : Error {
    using Error::Error;
};

struct InsufficientData : Error {
    using Error::Error;
};

}  // namespace secscore
