#pragma once

#include <stdexcept>
#include <string>

namespace mixnum {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid numerology or profile parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Inconsistent multi-user scenario (duplicate subbands, frame mismatch, ...).
class ScenarioError : public Error {
public:
    using Error::Error;
};

// Subband allocation that does not fit the band.
class AllocationError : public Error {
public:
    using Error::Error;
};

// Payload bit vector of the wrong size or with non-bit values.
class PayloadError : public Error {
public:
    using Error::Error;
};

// Mismatched buffer sizes.
class SizeError : public Error {
public:
    using Error::Error;
};

// Sample buffers that do not divide into whole OFDM symbols.
class FramingError : public Error {
public:
    using Error::Error;
};

// Malformed external input (IQ capture files, config files).
class InputError : public Error {
public:
    using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
public:
    using Error::Error;
};

// Argument outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace mixnum
