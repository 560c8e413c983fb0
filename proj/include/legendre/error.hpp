#pragma once

#include <stdexcept>
#include <string>

namespace legendre {

/// Base for errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation would exceed the configured enumeration cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

}  // namespace legendre
