#pragma once

#include <stdexcept>
#include <string>

namespace wsreg {

/// Base class for every error raised by this library. Messages are
/// module-qualified, e.g. "registry: duplicate registration of ...".
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A domain value violated its invariants (bad classification combination,
/// negative counts, malformed weights, unknown category label, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed (XML, WSDL, JSON configs, registry files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A WSDL document parsed but describes no usable operations.
class EmptyServiceError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Attempt to register a service that is already in the registry.
class DuplicateError : public Error {
public:
    using Error::Error;
};

/// Filesystem or socket failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// A persisted file has the wrong shape or an unsupported version.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A persisted file's trailing checksum does not match its contents.
class ChecksumError : public FormatError {
public:
    using FormatError::FormatError;
};

} // namespace wsreg
