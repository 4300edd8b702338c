#pragma once

#include <stdexcept>
#include <string>

namespace backbone {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file or stream could not be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// An input file violates the expected format. The message carries the
/// offending line number.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

/// An argument is outside its documented domain.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// The requested measure has no defined value on this input, e.g. the
/// diameter of an edgeless graph.
class UndefinedMeasureError : public Error {
public:
    using Error::Error;
};

}  // namespace backbone
